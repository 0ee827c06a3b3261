#!/usr/bin/env python3
"""End-to-end checks for the goodpoly CLI: exit codes, report shapes, and
schema conformance of every JSON output."""

import json
import pathlib
import subprocess
import sys
import warnings

warnings.filterwarnings("ignore", category=DeprecationWarning)

CLI = pathlib.Path(sys.argv[1]).resolve()
SCHEMAS = pathlib.Path(sys.argv[2]).resolve()

failures = []


def run(args, stdin=None, expect=0):
    proc = subprocess.run(
        [str(CLI)] + args,
        input=stdin,
        capture_output=True,
        text=True,
    )
    if proc.returncode != expect:
        failures.append(f"{args}: exit {proc.returncode} != {expect}; stderr: {proc.stderr}")
    return proc


def validate(instance, schema_name):
    import jsonschema

    with open(SCHEMAS / schema_name) as fh:
        schema = json.load(fh)
    resolver = jsonschema.validators.RefResolver(
        base_uri=(SCHEMAS / schema_name).as_uri(), referrer=schema
    )
    try:
        jsonschema.validate(instance, schema, resolver=resolver)
    except jsonschema.ValidationError as e:
        failures.append(f"{schema_name}: {e.message}")


def check(cond, message):
    if not cond:
        failures.append(message)


# chain: canonical chain and coarse subchain between (3,1,0) and (3,3,3)
out = run(["chain", "--alpha", "[3,1,0]", "--beta", "[3,3,3]"])
chain = json.loads(out.stdout)
validate(chain, "chain_output.schema.json")
check(
    chain["chain"]
    == [[3, 1, 0], [3, 2, 0], [3, 3, 0], [3, 3, 1], [3, 3, 2], [3, 3, 3]],
    "chain steps",
)
check(chain["subchain"] == [[3, 1, 0], [3, 1, 0], [3, 3, 0], [3, 3, 3]], "subchain")

# family: the fixed nine-term example, then pipe into good and verify
out = run(["family", "--kind", "example_g2_310"])
combo = json.loads(out.stdout)
validate(combo, "schur_combination.schema.json")
check(len(combo["terms"]) == 9, "example has nine terms")

out = run(["good"], stdin=json.dumps(combo))
good = json.loads(out.stdout)
validate(good, "goodness_report.schema.json")
check(good["good"] is True, "example is good")
check(good["condition_b"]["chain"][0] == [3, 1, 0], "chain starts at (3,1,0)")

out = run(["verify", "--t-max", "2"], stdin=json.dumps(combo))
verify = json.loads(out.stdout)
validate(verify, "verify_report.schema.json")
check(verify["snp"]["holds"] is True, "example has SNP")
check(verify["idp"]["holds"] is True, "example polytope has IDP")
check(verify["theorem_violation"] is False, "no violation")

# snp: the cancelling combination loses the orbit of (2,2,0)
cancelling = {
    "m": 3,
    "terms": [
        {"coeff": "1", "partition": [3, 1, 0]},
        {"coeff": "-1", "partition": [2, 2, 0]},
    ],
}
out = run(["snp"], stdin=json.dumps(cancelling))
snp = json.loads(out.stdout)
validate(snp, "snp_report.schema.json")
check(snp["holds"] is False, "snp fails")
check([2, 2, 0] in snp["missing_points"], "missing point [2,2,0]")

# idp: the non-IDP pyramid has witness (1,1,1) at t = 2
pyramid = {"m": 3, "generators": [[0, 0, 0], [1, 0, 0], [0, 0, 1], [1, 2, 1]]}
out = run(["idp", "--t-max", "2"], stdin=json.dumps(pyramid))
idp = json.loads(out.stdout)
validate(idp, "idp_report.schema.json")
check(idp["holds"] is False, "pyramid fails IDP")
check(idp["witness"] == {"t": 2, "point": [1, 1, 1]}, "witness (1,1,1)")

# rado
out = run(["rado", "--alpha", "[2,1,1]", "--beta", "[3,1,0]"])
rado = json.loads(out.stdout)
validate(rado, "rado_output.schema.json")
check(rado["contained"] is True, "rado containment")

# expand: json output matches the schema, csv output has one row per term
single = {"m": 3, "terms": [{"coeff": "1", "partition": [3, 1, 0]}]}
out = run(["expand"], stdin=json.dumps(single))
poly = json.loads(out.stdout)
validate(poly, "sparse_polynomial.schema.json")
check(len(poly) == 12, "twelve monomials")
coeffs = {tuple(t["exponent"]): t["coeff"] for t in poly}
check(coeffs[(2, 1, 1)] == "2", "coefficient 2 on (2,1,1)")

out = run(["expand", "--format", "csv"], stdin=json.dumps(single))
lines = out.stdout.strip().splitlines()
check(lines[0] == "coeff,x1,x2,x3,degree", "csv header")
check(len(lines) == 13, "csv rows")

# newton: vertices and lattice points, json and csv
out = run(["newton"], stdin=json.dumps(single))
newton = json.loads(out.stdout)
validate(newton, "newton_output.schema.json")
check(len(newton["vertices"]) == 6, "six vertices")
check(len(newton["lattice_points"]) == 12, "twelve lattice points")

out = run(["newton", "--format", "csv"], stdin=json.dumps(single))
rows = out.stdout.strip().splitlines()
check(rows[0] == "kind,x1,x2,x3,degree", "newton csv header")
check(sum(1 for r in rows if r.startswith("vertex,")) == 6, "csv vertices")
check(sum(1 for r in rows if r.startswith("point,")) == 12, "csv points")

# search: deterministic for a fixed seed; candidates, when present, must be
# internally consistent (SNP true, IDP false)
args = ["search", "--seed", "7", "--count", "8", "--max-size", "4", "--t-max", "2"]
first = run(args)
second = run(args)
report = json.loads(first.stdout)
validate(report, "search_report.schema.json")
check(first.stdout == second.stdout, "seeded search is byte-identical")
check(report["seed"] == 7, "seed echoed")
for candidate in report["candidates"]:
    check(candidate["snp"]["holds"] is True, "candidate must have SNP")
    check(candidate["idp"]["holds"] is False, "candidate must fail IDP")

# byte-identical reports for identical inputs
a = run(["good"], stdin=json.dumps(combo)).stdout
b = run(["good"], stdin=json.dumps(combo)).stdout
check(a == b, "good output deterministic")

# input errors exit with 1
run(["snp"], stdin="not json", expect=1)
run(["idp"], stdin='{"m": 2, "generators": [[1]]}', expect=1)
run(["chain", "--alpha", "[1,2]", "--beta", "[2,2]"], expect=1)
run(["expand"], stdin='{"m": 3, "terms": [{"coeff": "0x", "partition": [1, 0, 0]}]}', expect=1)
run(["verify"], stdin='{"m": 2, "terms": []}', expect=1)

if failures:
    for f in failures:
        print("FAIL:", f)
    sys.exit(1)
print(f"cli checks passed")
