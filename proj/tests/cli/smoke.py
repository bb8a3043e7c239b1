"""Runs the hocalc binary on the shipped fixtures and checks outputs and exit codes."""
import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
FIX = sys.argv[2]
failures = []


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def doc(*args):
    code, out, err = run(*args)
    if code != 0:
        failures.append(f"{args}: exit {code}: {err.strip()}")
        return {}
    return json.loads(out)


def expect(cond, what):
    if not cond:
        failures.append(what)


def fx(name):
    return os.path.join(FIX, name + ".json")


expect(doc("theta", "hom", "[]", "[2]").get("count") == 3, "theta hom [] [2]")
expect(doc("--n", "2", "theta", "hom", "[1]", "[1,1]").get("count") == 4, "theta hom [1] [1,1]")
ident = '{"source":[1,1],"target":[1,1],"components":[[0,1],[0,1]]}'
comp = doc("--n", "2", "theta", "compose", ident, ident).get("composite", {})
expect(comp == json.loads(ident), "theta compose round-trips identities")

h = doc("homclasses", fx("arrow"), fx("arrow"))
expect(h.get("classes") == 3, "homclasses arrow arrow")
expect(h.get("schema") == "v1", "schema field")
expect(doc("check", fx("arrow")).get("n_category") is True, "check arrow")
expect(doc("--n", "2", "--degree-bound", "2", "check", fx("iso")).get("n_category") is True, "check iso n=2")

r = doc("resolve", fx("arrow"))
expect(r.get("f0", {}).get("cells") == 3, "resolve arrow F0")
expect(r.get("structure_failures") == [], "resolve arrow structure")
r2 = doc("--degree-bound", "2", "resolve", "--f2", fx("point"))
expect(r2.get("latch", {}).get("cells") == 15, "latching object of the point")

m = doc("maps", fx("arrow"), "--shape", "[1]")
expect(m.get("count") == 3, "maps h((1)) -> arrow")
m1 = doc("maps", fx("arrow"), "--from", fx("point"), "--stage", "1")
expect(m1.get("count") == 2, "maps F1(point) -> arrow")

ms = doc("--degree-bound", "2", "mapping-space", fx("point"), fx("iso"), "--levels", "3")
expect(ms.get("pi0") == 1 and ms.get("identity_failures") == [], "mapping space point iso")

o = doc("oracle", "homcat", fx("point"), fx("retract"))
expect(o.get("count") == 2, "oracle homcat point retract")
t = doc("--n", "2", "oracle", "theta", "--bound", "2")
expect(t.get("agrees_with_canonical_forms") is True, "oracle theta")

rep = doc("report", "--suite", "acceptance")
expect(rep.get("mismatches") == 0, "acceptance suite agrees")
disc = doc("report", "--suite", "discrepancy")
flagged = {(x["a"], x["b"]) for x in disc.get("rows", []) if x["flagged"]}
expect(("point", "retract") in flagged, "retract pair flagged")

e1 = doc("exercise1")
census = e1.get("census", {})
expect(census.get("()") == 3 and census.get("(2)") == 1 and census.get("(1,1)", 0) > 0, "exercise1 census")
e2 = doc("exercise2")
expect(e2.get("maps") == 3 and e2["cells"][-1]["candidates"] == 3, "exercise2 candidates")

# exit codes
code, _, _ = run("--pass-limit", "1", "resolve", fx("arrow"))
expect(code == 2, f"pass limit exit code {code}")
with tempfile.TemporaryDirectory() as d:
    bad = os.path.join(d, "bad.json")
    with open(bad, "w") as f:
        json.dump({"schema": "v1", "objects": ["0"], "arrows": [{"name": "f", "src": "0", "dst": "9"}]}, f)
    code, _, err = run("check", bad)
    expect(code == 3 and "/arrows/0/dst" in err, f"malformed fixture exit {code}: {err.strip()}")
    with open(bad, "w") as f:
        f.write("{not json")
    code, _, _ = run("check", bad)
    expect(code == 3, "unparsable fixture")
    # determinism and --out
    a, b = os.path.join(d, "a.json"), os.path.join(d, "b.json")
    run("--out", a, "homclasses", fx("iso"), fx("arrow"), "--oracle")
    run("--out", b, "homclasses", fx("iso"), fx("arrow"), "--oracle")
    expect(open(a).read() == open(b).read() and os.path.getsize(a) > 0, "byte-identical output")
code, _, _ = run("--n", "2", "--mode", "full", "check", fx("arrow"))
expect(code == 3, "full mode needs n = 1")
code, _, _ = run("--n", "3", "check", fx("arrow"))
expect(code == 3, "n out of range")

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
