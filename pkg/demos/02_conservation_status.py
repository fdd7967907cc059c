"""Conservation status: opinion classification, IUCN mapping, reports.

Run from the repository root:  python3 demos/02_conservation_status.py
"""

from phytobase import (
    OpinionDistribution,
    classify_opinions,
    map_status_to_iucn,
    status_report,
)
from phytobase.fixtures import load_opinions_store

# -- classifying a single respondent-opinion row --

for name, dist in [
    ("Zingiber officinale", OpinionDistribution(56, 24, 10, 10)),
    ("Rauwolfia vomitoria", OpinionDistribution(24, 64, 8, 4)),
    ("Bridelia ferruginea", OpinionDistribution(30, 48, 22, 24)),  # sums to 124
]:
    status = classify_opinions(dist)
    iucn = map_status_to_iucn(status)
    print(f"{name:28} -> {status.value:12} (IUCN {iucn.name}: {iucn.value})")

# classification is an argmax, so rows whose percentages do not sum to
# 100 classify the same way; validation merely attaches a warning

# -- a corpus-level report over the survey extract --

store = load_opinions_store()
report = status_report(store)
print(f"\n{len(store)} assessments in the survey extract:")
for status, count in sorted(report.counts.items(), key=lambda kv: -kv[0].severity):
    print(f"  {status.value:12} {count:3}")
print(f"  {'unassessed':12} {report.unassessed:3}")
