"""End-to-end checks of the ncode command line: exit codes, output and JSON schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BIN = sys.argv[1]
SCHEMA = json.loads(Path(sys.argv[2]).read_text())

C22 = "134,1357,257,356,13,35,57"
C24 = "123,1246,145,356,12,14,3,5,6"
C18B = "123,1346,145,67,13,14,6"
WHEEL = "123,145,246,1356,13,15,2,4,6"

failures = []


def run(*args, stdin=None):
    return subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True, timeout=120)


def check(name, cond, detail=""):
    if not cond:
        failures.append(f"{name}: {detail}")


r = run("decide", C22)
check("decide C22", r.returncode == 0 and r.stdout.startswith("CONVEX"), r.stdout)
r = run("decide", C24)
check("decide C24", r.returncode == 1 and "((3,6,5,1),(12,14))" in r.stdout, r.stdout)
r = run("decide", WHEEL)
check("decide wheel code", r.returncode == 1 and r.stdout.startswith("NONCONVEX"), r.stdout)
r = run("decide", "-", stdin=C22)
check("decide stdin", r.returncode == 0, r.stderr)
r = run("decide", "12,3x")
check("parse error", r.returncode == 64 and "position" in r.stderr, r.stderr)
r = run("bogus")
check("unknown subcommand", r.returncode == 64)

for code in (C22, C24, WHEEL, "", "123"):
    for cmd in ("decide", "analyze"):
        r = run(cmd, code, "--json")
        try:
            jsonschema.validate(json.loads(r.stdout), SCHEMA)
        except Exception as e:  # noqa: BLE001
            failures.append(f"{cmd} --json {code!r}: {e}")

r = run("analyze", C22, "--json")
doc = json.loads(r.stdout)
check("analyze realization", doc["realization"] is not None and doc["realization"]["dimension"] == 2)
check("analyze deterministic", run("analyze", C22, "--json").stdout == r.stdout)

with tempfile.TemporaryDirectory() as tmp:
    svg = Path(tmp) / "c22.svg"
    r = run("realize", C22, "--svg", str(svg))
    check("realize C22", r.returncode == 0 and svg.read_text().startswith("<svg"), r.stderr)
    real = Path(tmp) / "c22.json"
    real.write_text(r.stdout)
    v = run("verify", C22, str(real))
    check("verify C22", v.returncode == 0 and v.stdout.strip().endswith("OK"), v.stdout)
    v = run("verify", "134,1357,356,13,35", str(real))
    check("verify wrong code", v.returncode == 1 and "MISMATCH" in v.stdout, v.stdout)

r = run("realize", C18B)
check("realize C18b", r.returncode == 0 and json.loads(r.stdout)["dimension"] == 2, r.stderr)
r = run("realize", C24)
check("realize C24 precondition", r.returncode == 5, r.stderr)
r = run("realize", "134,1357,356,13,35,1")
check("realize not covered", r.returncode == 3 and "TheoremNoLocalObstruction" in r.stdout, r.stdout + r.stderr)
r = run("realize", C22, "--out", "svg")
check("realize svg", r.returncode == 0 and r.stdout.startswith("<svg"))

r = run("nerve", C24)
check("nerve C24", r.returncode == 0 and "class: L24" in r.stdout, r.stdout)
r = run("nerve", C22, "--json")
check("nerve json", json.loads(r.stdout)["class"] == "L22", r.stdout)

r = run("atlas", "-N", "4", "-K", "2")
lines = r.stdout.strip().splitlines()
check("atlas header", lines[0] == "code,n,facets,nerve_class,minimal,verdict,certificate,sprocket", lines[0])
check("atlas K=2 convex", all(",CONVEX," in line for line in lines[1:]), r.stdout)
check("atlas deterministic", run("atlas", "-N", "4", "-K", "2").stdout == r.stdout)
check("atlas summary", "summary" in r.stderr)
r = run("atlas", "-N", "7", "-K", "2")
check("atlas cap", r.returncode == 64, r.stderr)
r = run("atlas", "-N", "3", "-K", "2", "--meta")
check("atlas meta", r.stdout.startswith("# "))

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("cli: all checks passed")
