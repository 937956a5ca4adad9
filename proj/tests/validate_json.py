"""Run every gsp4hecke command with --format json and validate the output."""
import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["transform", "0", "0"],
    ["transform", "1", "3"],
    ["decompose", "sigma^2"],
    ["decompose", "I"],
    ["volume", "1", "4"],
    ["--p", "5", "volume", "0", "2"],
    ["hbound", "T2"],
    ["--p", "11", "hbound", "sigma^2", "--q", "7"],
    ["amplify", "--P", "1000", "--distribution", "bimodal:0,1"],
    ["amplify", "--sweep", "1000,2000", "--distribution", "constant:1", "--draws", "1"],
    ["verify", "decompositions"],
    ["snf", "1", "0", "0", "9"],
    ["dictionary", "3", "1", "2"],
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([binary, "--format", "json", *args], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
        if errors:
            print(f"FAIL {' '.join(args)}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
