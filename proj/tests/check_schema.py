"""Validate a verify certificate against docs/certificate.schema.json."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
for n, m in [(5, 5), (6, 7), (7, 8)]:
    out = subprocess.run([cli, "verify", "--n", str(n), "--m", str(m), "--format", "json"],
                         check=True, capture_output=True, text=True).stdout
    jsonschema.validate(json.loads(out), schema)
print("certificates conform")
