"""Validates CLI JSON output against docs/schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema

binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
germs = ["xy", "y2-x3", "x2y+y3", "(y3+x7)*(y3+x10)", "(y2-x3)^2-x7", "y+x2", "x3-xy2"]
commands = {"resolve": "tree", "ideals": "ideals", "invariants": "invariants",
            "audit": "audit", "newton": "newton", "graph": "graph"}
schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}

failures = 0


def check(args, kind):
    global failures
    out = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
    try:
        jsonschema.validate(json.loads(out.stdout), schemas[kind])
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failures += 1
        print(f"FAIL {' '.join(args)}: {str(e).splitlines()[0]}")


for germ in germs:
    for command, kind in commands.items():
        check([command, germ], kind)
check(["corpus", "--filter", "cusp"], "corpus")
print(f"{failures} schema violations")
sys.exit(1 if failures else 0)
