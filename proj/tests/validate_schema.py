"""Validate classify JSON output against the shipped schema and the CSV row count."""
import csv
import io
import json
import subprocess
import sys

import jsonschema

GROUPS = ["SO2", "O2", "SO3", "Sp1", "SU2xSU2", "SU3", "Sp2"]


def run(binary, *args):
    return subprocess.run([binary, *args], check=True, capture_output=True, text=True).stdout


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    validator.check_schema(schema)
    failures = 0
    for group in GROUPS:
        for extra in ([], ["--ledger"]):
            doc = json.loads(run(binary, "classify", "--group", group, "--format", "json", *extra))
            errors = list(validator.iter_errors(doc))
            csv_rows = list(csv.DictReader(io.StringIO(run(binary, "classify", "--group", group, "--format", "csv"))))
            ok = not errors and len(csv_rows) == len(doc["rows"]) and ("ledger" in doc) == bool(extra)
            print(f"{'PASS' if ok else 'FAIL'} {group} {' '.join(extra)}".rstrip())
            for e in errors[:5]:
                print(f"  {list(e.absolute_path)}: {e.message}")
            failures += not ok
    broken = json.loads(run(binary, "classify", "--group", "SO3", "--format", "json"))
    del broken["schema_version"]
    if validator.is_valid(broken):
        print("FAIL schema accepts a document without schema_version")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
