"""Validate every json output mode of the CLI against report.schema.json."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path, encoding="utf-8") as fh:
    schema = json.load(fh)
jsonschema.Draft7Validator.check_schema(schema)

runs = [
    ["constants", "--family", "so", "--n", "3"],
    ["constants", "--family", "sp", "--n", "4"],
    ["table", "--family", "so", "--n-min", "3", "--n-max", "5"],
    ["verify", "--n-min", "3", "--n-max", "3", "--seed", "7"],
]
for args in runs:
    proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True, check=False)
    if proc.returncode != 0:
        sys.exit(f"{' '.join(args)} exited {proc.returncode}: {proc.stderr}")
    jsonschema.validate(json.loads(proc.stdout), schema)
    print("valid:", " ".join(args))

# A malformed document must be rejected, otherwise the schema is vacuous.
try:
    jsonschema.validate({"schema_version": "1.0", "command": "verify", "suites": "none"}, schema)
except jsonschema.ValidationError:
    print("malformed document rejected")
else:
    sys.exit("schema accepted a malformed verify document")
