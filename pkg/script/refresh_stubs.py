"""Refresh stubs for testing."""
import json

from sqlogic import SQLogicTester

# run from project directory
# python3 -m script.refresh_stubs

propositions = [
    ("parse_worked_example", "!(a&b)&c"),
]

for file_name, proposition in propositions:
    print(f"Parsing {proposition}")
    report = SQLogicTester(proposition).parse_report()

    with open(f"test/resources/stubs/{file_name}.json", "w", encoding="utf8") as f:
        json.dump(report, f, indent=2, ensure_ascii=False)
        f.write("\n")
