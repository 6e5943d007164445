"""Runs the CLI over a fixed set of invocations and validates every JSON report."""

import json
import subprocess
import sys

import jsonschema

INVOCATIONS = [
    (["quiver", "show", "--k", "2", "--n", "4"], 0),
    (["ts", "--k", "1", "--n", "2", "--r", "1", "--q", "2", "--p", "3", "--s", "1"], 0),
    (["ts", "--k", "2", "--n", "4", "--r", "1", "--q", "2", "--p", "3", "--s", "2"], 0),
    (["dwork", "--k", "1", "--n", "2", "--r", "1", "--q", "2", "--p", "3", "--smax", "2"], 0),
    (["dwork", "--k", "1", "--n", "3", "--r", "1", "--q", "3", "--p", "7", "--smax", "1", "--convention", "unsigned"], 0),
    (["ghosts", "--k", "1", "--n", "2", "--r", "1", "--q", "2", "--p", "3", "--smax", "3"], 0),
    (["product-check", "--k", "1", "--n", "2", "--r", "1", "--q", "2", "--p", "3", "--a", "2", "--dmax", "8"], 0),
    (["product-check", "--k", "2", "--n", "4", "--r", "1", "--q", "2", "--p", "3", "--a", "1", "--dmax", "4"], 0),
    (["vertex", "--k", "1", "--n", "2", "--r", "1", "--q", "2", "--dmax", "4"], 0),
    (["vertex", "--k", "2", "--n", "4", "--r", "1", "--q", "2", "--dmax", "3", "--route", "residue"], 0),
    (["vertex", "--k", "1", "--n", "3", "--r", "1", "--q", "3", "--dmax", "3", "--route", "localization"], 0),
    (["vertex", "--k", "1", "--n", "2", "--r", "1", "--q", "2", "--p", "5", "--a", "2", "--dmax", "5", "--route", "padic"], 0),
    (["continuation", "--k", "1", "--n", "2", "--r", "1", "--q", "2", "--p", "5", "--s", "2"], 0),
    (["points", "--n", "2", "--p", "7"], 0),
    (["points", "--family", "curve", "--r", "1", "--q", "3", "--p", "13"], 0),
    (["teichmuller", "--u", "2", "--p", "5", "--s", "3"], 0),
    # Strict palindromy (criterion 2) does not hold on the grid, so selftest exits 1.
    (["selftest", "--format", "json"], 1),
]


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, expected in INVOCATIONS:
        proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
        label = " ".join(args)
        if proc.returncode != expected:
            print(f"FAIL {label}: exit {proc.returncode}, expected {expected}\n{proc.stderr}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
        if errors:
            print(f"FAIL {label}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
