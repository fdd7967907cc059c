"""Searching the bundled corpus: structured criteria and PQL.

Run from the repository root:  python3 demos/01_search_and_query.py
"""

from phytobase import evaluate_query, parse_query, structured_search
from phytobase.fixtures import load_plants_store

store = load_plants_store()
print(f"corpus: {len(store)} records\n")

# -- structured search: any combination of characteristics, ANDed --

for criteria in (
    {"ailment": "WI"},
    {"ailment": "INF"},
    {"ailment": "INF", "part_used": "Leaves"},
    {"family": "Zingiberaceae"},
    {"name": "Jinwini"},  # matches a Yoruba local name
):
    result = structured_search(criteria, store)
    print(f"search {criteria}")
    for row in result.rows:
        print(f"  {row.id:24} {row.values['scientific_name']}")
    print()

# -- the same corpus through the query language --

queries = [
    "SELECT scientific_name FROM plants WHERE ailment = 'INF'",
    "SELECT scientific_name, ailment FROM plants WHERE area_of_origin CONTAINS 'Nigeria' LIMIT 3",
    "SELECT scientific_name FROM plants WHERE family = 'Moraceae' OR part_used = 'Rhizome'",
    "SELECT scientific_name FROM plants ORDER BY family DESC LIMIT 4",
]
for text in queries:
    result = evaluate_query(parse_query(text), store)
    print(text)
    for row in result.rows:
        print(f"  {row.values['scientific_name']}")
    print(f"  ({result.total} match(es) before LIMIT)\n")
