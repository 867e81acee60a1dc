"""Runs every CLI subcommand and validates the JSON report against the schema."""
import json
import subprocess
import sys

import jsonschema

binary, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)

cases = [
    (["count", "--graph", "petersen", "--k", "2"], 0),
    (["profile", "--graph", "c5"], 0),
    (["shadow", "--count", "20", "--t", "3", "--s", "2"], 0),
    (["shadow", "--graph", "K6", "--t", "3", "--s", "2"], 0),
    (["shadow", "--family", "[[0,1,2],[0,1,3]]", "--ground", "6", "--t", "3", "--s", "2"], 0),
    (["certify", "--host", "petersen", "--R", "5", "--alpha", "1/25"], 0),
    (["certify", "--host", "petersen", "--R", "4", "--alpha", "1/10"], 1),
    (["certify", "--host", "K6", "--clique-bound", "4", "--R", "2", "--alpha", "1/8"], 1),
    (["prop4", "--n", "10", "--r", "8", "--R", "2", "--alpha", "1/4", "--t", "8"], 0),
    (["mvparams", "--variant", "r3t", "--q", "2^40"], 0),
    (["rho", "--host", "c5", "--t", "2"], 0),
    (["rho", "--variant", "r4t", "--q", "2^40"], 0),
    (["sample", "--graph", "K5", "--host", "c5", "--t1", "3", "--t2", "3", "--seed", "1"], 0),
    (["search", "--graph", "K5", "--host", "c5", "--t1", "3", "--t2", "3", "--seed", "1"], 0),
    (["search", "--graph", "K6", "--host", "c5", "--t1", "3", "--t2", "3", "--attempts", "200"], 1),
    (["arrow", "--graph", "K6", "--t1", "3", "--t2", "3"], 0),
    (["arrow", "--graph", "K5", "--t1", "3", "--t2", "3"], 1),
    (["arrow", "--graph", "K3", "--h1", "K3", "--h2", "K3"], 1),
    (["lf", "--f", "K3", "--m", "10", "--n", "10", "--a", "3", "--b", "3"], 0),
    (["bounds", "--variant", "r4t", "--q", "2^40"], 0),
    (["bounds", "--variant", "r3t", "--q", "2^40"], 1),
    (["bounds", "--cycle-t", "1000000", "--s", "2"], 0),
    (["bounds", "--cross-lo", "3", "--cross-hi", "1e9", "--log-base", "base2"], 0),
]

failures = 0
for args, want in cases:
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != want:
        print(f"FAIL exit {proc.returncode} != {want}: {label}\n{proc.stderr}")
        failures += 1
        continue
    errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
    if errors:
        print(f"FAIL schema: {label}: {errors[0].message}")
        failures += 1
    else:
        print(f"ok   {label}")

sys.exit(1 if failures else 0)
