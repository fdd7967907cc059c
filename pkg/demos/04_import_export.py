"""Round-tripping the corpus through CSV and JSON, with per-disease extraction.

Run from the repository root:  python3 demos/04_import_export.py
"""

import json

from phytobase import RecordStore, export_records, import_records
from phytobase.fixtures import load_plants_store

store = load_plants_store()

# -- per-disease sub-database extraction --

wi_blob = export_records(store, selection="WI", format="json")
print("records treating WI (Women Infertility):")
for obj in json.loads(wi_blob):
    print(f"  {obj['id']}: {obj['scientific_name']['raw']}")

# -- CSV round trip is byte-stable --

csv_once = export_records(store, format="csv")
fresh = RecordStore()
report = import_records(fresh, csv_once, format="csv")
csv_twice = export_records(fresh, format="csv")
print(f"\nCSV round trip: imported {report.imported}, rejected {len(report.rejected)}")
print(f"byte-identical re-export: {csv_once == csv_twice}")

# -- dirty rows are rejected record-by-record, never the whole batch --

rows = json.loads(export_records(store, format="json"))
rows[0]["scientific_name"] = {"raw": ""}
partial = RecordStore()
report = import_records(partial, json.dumps(rows), format="json")
print(f"\ndirty import: imported {report.imported}, rejected {len(report.rejected)}")
for locator, validation in report.rejected:
    print(f"  {locator}: {validation.errors}")
