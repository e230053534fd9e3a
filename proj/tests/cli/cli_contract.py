"""CLI contract checks: schema-valid JSON for every subcommand, exit codes for
malformed input, byte-identical output across runs, and covariant file
round trips through phimax.

usage: cli_contract.py <covdim executable> <repo root>
"""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

cli = sys.argv[1]
root = pathlib.Path(sys.argv[2])
schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
registry = Registry().with_resources(
    [(f"{name}.schema.json", Resource.from_contents(s)) for name, s in schemas.items()]
)
failures = []


def run(*args):
    p = subprocess.run([cli, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout


def validate(name, doc, label):
    try:
        jsonschema.Draft202012Validator(schemas[name], registry=registry).validate(doc)
    except jsonschema.ValidationError as e:
        failures.append(f"{label}: {name} schema: {e.message}")


def expect(args, code, schema, label=None):
    label = label or " ".join(args)
    rc, out = run(*args, "--json")
    if rc != code:
        failures.append(f"{label}: exit {rc}, expected {code}")
        return None
    try:
        doc = json.loads(out)
    except json.JSONDecodeError as e:
        failures.append(f"{label}: invalid JSON ({e})")
        return None
    validate(schema, doc, label)
    return out


specs = ["S3", "C2 x C2", "C3 : C4 [inv]", "Q8", "A4 : C4 [a -> b^-1 a, b -> a]", "C1"]
for s in specs:
    for sub, schema in (("analyze", "analyze"), ("faithful", "faithful"), ("table", "table")):
        expect([sub, s], 0, schema)

data = root / "data"
for f in sorted(data.glob("*.json")):
    validate("covariant_file", json.loads(f.read_text()), f.name)
    for op in ("check", "degrees", "phimax", "dim", "faithful"):
        args = ["covariant", op, str(f), "--seed", "7"]
        rc, out = run(*args, "--json")
        if rc == 0:
            validate("covariant", json.loads(out), " ".join(args))
        else:
            validate("error", json.loads(out), " ".join(args))
            if rc not in (1, 2):
                failures.append(f"{' '.join(args)}: exit {rc}")

expect(["catalog"], 0, "catalog")

# malformed input: usage errors exit 2, computational ones exit 1
usage = [
    (["analyze", "X3"], "SyntaxError"),
    (["analyze", "C3 x"], "SyntaxError"),
    (["analyze", "S3 : C2 [inv]"], "SemanticError"),
    (["faithful", "D7"], "SemanticError"),
    (["table", "Q12"], "SemanticError"),
    (["covariant", "dim", str(root / "tests/data/malformed/does_not_exist.json")], "IoError"),
    (["covariant", "bogus", str(data / "veronese.json")], "UsageError"),
    (["frobnicate"], "UsageError"),
    (["analyze"], "UsageError"),
]
for f in ("missing_codomain", "bad_exponents", "truncated", "zero_denominator"):
    usage.append((["covariant", "dim", str(root / f"tests/data/malformed/{f}.json")], "FormatError"))
usage.append((["covariant", "dim", str(root / "tests/data/malformed/bad_group.json")], "SemanticError"))
for args, code in usage:
    out = expect(args, 2, "error")
    if out is not None and json.loads(out)["error"]["code"] != code:
        failures.append(f"{' '.join(args)}: code {json.loads(out)['error']['code']}, expected {code}")
computational = [
    (["covariant", "faithful", str(root / "tests/data/malformed/not_equivariant.json")], "PreconditionViolated"),
    (["covariant", "check", str(root / "tests/data/malformed/not_a_rep.json")], "NotAHomomorphism"),
    (["covariant", "degrees", str(data / "s3_standard.json")], "NotMultihomogeneous"),
]
for args, code in computational:
    out = expect(args, 1, "error")
    if out is not None and json.loads(out)["error"]["code"] != code:
        failures.append(f"{' '.join(args)}: code {json.loads(out)['error']['code']}, expected {code}")

# reproducibility
for args in (["analyze", "S3 x S4"], ["covariant", "dim", str(data / "s3_standard.json"), "--seed", "11"],
             ["covariant", "phimax", str(data / "c2_sign.json"), "--seed", "3"], ["catalog"]):
    a, b = run(*args, "--json"), run(*args, "--json")
    if a != b:
        failures.append(f"{' '.join(args)}: output differs between runs")

# phimax output is itself a covariant file that round-trips
rc, out = run("covariant", "phimax", str(data / "s3_standard.json"), "--json")
if rc == 0:
    cov = json.loads(out)["covariant"]
    tmp = root / "build_phimax_roundtrip.json"
    try:
        tmp.write_text(json.dumps(cov, indent=2))
        rc2, out2 = run("covariant", "phimax", str(tmp), "--beta", "1", "--json")
        if rc2 != 0 or json.loads(out2)["covariant"] != cov:
            failures.append("phimax is not idempotent on its own output")
    finally:
        tmp.unlink(missing_ok=True)

for f in failures:
    print("FAIL", f)
print(f"cli contract: {len(failures)} failure(s)")
sys.exit(1 if failures else 0)
