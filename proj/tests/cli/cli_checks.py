import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
failures = []


def run(*args, stdin=None, env=None):
    proc = subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True, env=env)
    return proc.returncode, proc.stdout, proc.stderr


def check(name, cond, detail=""):
    print(("PASS " if cond else "FAIL ") + name + ("" if cond else "  " + detail))
    if not cond:
        failures.append(name)


pair = {
    "left": {"alpha": 1, "N": 1, "entries": [["1", "0"], ["1", "1"]]},
    "right": {"alpha": 1, "N": 1, "entries": [["1", "1"], ["0", "1"]]},
}
swapped = {"left": pair["right"], "right": pair["left"]}

code, out, _ = run("product", "-i", json.dumps(pair))
check("product exit", code == 0)
check("product value", json.loads(out)["entries"] == [["1", "0", "1"], ["1", "1", "1"], ["0", "0", "1"]], out)
code, out, _ = run("product", "-i", json.dumps(swapped))
check("product swapped", json.loads(out)["entries"] == [["1", "1", "0"], ["0", "1", "0"], ["1", "0", "1"]], out)

code, out, _ = run("equal-quotient", "-i", json.dumps(pair))
check("equal-quotient", code == 0 and json.loads(out) == {"equal": True}, out)

code, out, _ = run("verify", "--suite", "th-product", "--seed", "1", "--count", "100")
report = json.loads(out)
check("verify th-product", code == 0 and report["pass"] and report["suites"][0]["instances"] == 300, out[:200])

code2, out2, _ = run("verify", "--suite", "th-product", "--seed", "1", "--count", "100")
check("verify deterministic", out == out2)

with tempfile.TemporaryDirectory() as tmp:
    swap = {"colligation": {"alpha": 1, "N": 1, "entries": [["0", "1"], ["1", "0"]]}}
    target = os.path.join(tmp, "ball.json")
    code, _, err = run("ball-map", "-i", json.dumps(swap), "--p", "2", "--radius", "1", "-o", target)
    rep = json.load(open(target))
    check("ball-map exit", code == 0, err)
    check("ball-map vertices", len(rep["vertices"]) == 4, str(rep["vertices"]))
    src = open(os.path.join(tmp, "ball.source.dot")).read()
    check("ball-map source dot", src.startswith("graph source") and src.count("--") == 3, src)
    check("ball-map image dot", os.path.exists(os.path.join(tmp, "ball.image.dot")))

    env = dict(os.environ, COLLIGO_P="3")
    code, out, _ = run("ball-map", "-i", json.dumps(swap), "--radius", "1", "--dot-prefix", os.path.join(tmp, "e"), env=env)
    check("prime from environment", json.loads(out)["p"] == 3 and len(json.loads(out)["vertices"]) == 5, out[:200])
    code, out, _ = run("ball-map", "-i", json.dumps(swap), "--radius", "1", "--p", "5", "--dot-prefix", os.path.join(tmp, "f"), env=env)
    check("flag overrides environment", json.loads(out)["p"] == 5)

g = {"alpha": 2, "N": 2, "entries": [["1", "2", "0", "-1"], ["0", "1/2", "3", "1"], ["2", "0", "1", "1"], ["1", "1", "0", "-2"]]}
for cmd, doc in [("char-field", {"colligation": g}), ("divisor", {"colligation": g}), ("invariants", {"colligation": g}),
                 ("realize", {"function": {"num": ["1", "2"], "den": ["1", "-3", "2"]}}),
                 ("char-tree", {"colligation": g, "lattice": {"p": 3, "dim": 2, "columns": [["1", "0"], ["1", "3"]], "exponents": [0, 1]}})]:
    code, out, err = run(cmd, "-i", json.dumps(doc))
    code2, out2, _ = run(cmd, "-i", json.dumps(doc))
    check(cmd + " runs", code == 0, err)
    check(cmd + " deterministic", out == out2)
    check(cmd + " output is JSON", isinstance(json.loads(out), (dict, list)))

code, out, _ = run("realize", "-i", json.dumps({"function": {"num": ["1", "2"], "den": ["1", "-3", "2"]}}))
code, out2, _ = run("char-field", "-i", json.dumps({"colligation": json.loads(out)}))
check("realize round trip through char-field",
      json.loads(out2)["char_fun"] == {"numerator": [[["1/2", "1"]]], "denominator": ["1/2", "-3/2", "1"]}, out2)

code, out, _ = run("boundary-limit", "-i", json.dumps({"colligation": {"alpha": 1, "N": 1, "entries": [["0", "1"], ["1", "0"]]},
                                                       "lambda": "1", "params": {"j_max": 10, "k": 3}}), "--p", "2")
check("boundary-limit", code == 0 and json.loads(out)["converges"] is True, out)

code, _, err = run("boundary-limit", "-i", json.dumps({"colligation": {"alpha": 1, "N": 1, "entries": [["1", "1"], ["1", "1"]]}, "lambda": "1"}))
check("pole is an input error", code == 2 and "pole" in err, err)

code, _, err = run("divisor", "-i", '{"colligation": {"alpha": 1, "N": 1, "entries": [["1", "x"], ["1", "1"]]}}')
check("parse error location", code == 2 and "/colligation/entries/0/1" in err, err)
code, _, err = run("divisor", "-i", '{"colligation": ')
check("malformed JSON", code == 2, err)
code, _, _ = run("verify", "--suite", "no-such-suite")
check("unknown suite", code == 2)
code, _, _ = run("frobnicate")
check("unknown command", code == 2)

sys.exit(1 if failures else 0)
