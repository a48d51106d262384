#!/usr/bin/env python3
"""End-to-end checks for the urm command line tool.

Usage: cli_checks.py /path/to/urm /path/to/tests/data
"""

import json
import os
import subprocess
import sys
import tempfile

URM = sys.argv[1]
DATA = sys.argv[2]

checks = 0


def run(args, expect_code=0, env_extra=None, stdin_text=None):
    global checks
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [URM] + args,
        capture_output=True,
        text=True,
        input=stdin_text,
        env=env,
        timeout=120,
    )
    if proc.returncode != expect_code:
        raise SystemExit(
            f"FAIL: urm {' '.join(args)} exited {proc.returncode}, expected {expect_code}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    checks += 1
    return proc


def check(cond, what):
    global checks
    if not cond:
        raise SystemExit(f"FAIL: {what}")
    checks += 1


def main():
    tmp = tempfile.mkdtemp(prefix="urm_cli_")

    # construct -> resolve round trip through structured output
    out = run(["construct", "--n", "2", "--m", "5", "--format", "structured"]).stdout
    inst = json.loads(out)
    check(inst["claimed_size"] == 6, "construct 2 5 claims 6")
    check(inst["provenance"] == "THEOREM12", "construct 2 5 uses theorem12")

    ms_path = os.path.join(tmp, "ms.json")
    with open(ms_path, "w") as f:
        json.dump({"m": inst["m"], "components": inst["components"]}, f)
    out = run(["resolve", "--n", "2", ms_path, "--format", "structured"]).stdout
    rep = json.loads(out)
    check(rep["status"] == "UNIQUE", "theorem12 instance resolves UNIQUE")
    check(len(rep["witnesses"]) == 1, "UNIQUE carries one witness")

    # fixture statuses in table form
    out = run(["resolve", "--n", "2", os.path.join(DATA, "fig2.json")]).stdout
    check("UNIQUE" in out, "fig2 table output says UNIQUE")
    out = run(["resolve", "--n", "3", os.path.join(DATA, "fig3.json")]).stdout
    check("MULTIPLE" in out, "fig3 table output says MULTIPLE")
    out = run(["resolve", "--n", "1", os.path.join(DATA, "unbalanced.json")]).stdout
    check("UNRESOLVABLE" in out, "unbalanced table output says UNRESOLVABLE")

    # bounds, both formats
    out = run(["bounds", "--n", "7", "--m", "10", "--format", "structured"]).stdout
    rep = json.loads(out)
    check(rep["lower"] == 21 and rep["upper"] == 70, "bounds 7 10 says [21, 70]")
    check(rep["exact"] is None, "bounds 7 10 has no exact value")
    out = run(["bounds", "--n", "13", "--m", "5"]).stdout
    check("27" in out, "bounds 13 5 prints the exact value")

    out = run(["table", "--m-min", "3", "--m-max", "5", "--n-min", "1", "--n-max", "4"]).stdout
    check(len(out.strip().splitlines()) == 13, "table prints a header plus one row per (n, m)")
    out = run(["table", "--m", "4", "--format", "structured"]).stdout
    rows = json.loads(out)
    check([r["n"] for r in rows] == list(range(1, 10)), "table covers n up to 2^{m-1}+1")

    # exhaustive search
    out = run(["exact", "--n", "2", "--m", "3", "--format", "structured"]).stdout
    res = json.loads(out)
    check(res["value"] == 4 and res["exhausted"], "exact 2 3 certifies 4")

    # zebra generate -> solve -> check round trip
    pz_path = os.path.join(tmp, "pz.json")
    run(["zebra", "gen", "--n", "2", "--m", "5", "--seed", "1",
         "--format", "structured", "-o", pz_path])
    with open(pz_path) as f:
        pz = json.load(f)
    check(len(pz["rules"]) == 4, "zebra gen 2 5 emits 4 rules")

    out = run(["zebra", "solve", pz_path, "--format", "structured"]).stdout
    sols = json.loads(out)
    check(len(sols) == 1, "generated puzzle has one solution")
    check(len(sols[0]["values"]) == 5, "solution carries one row per category")

    out = run(["zebra", "check", pz_path, "--format", "structured"]).stdout
    chk = json.loads(out)
    check(chk["status"] == "UNIQUE", "generated puzzle folds back to a UNIQUE multiset")
    check(chk["rules"] == chk["min_rules_this_multiset"], "minimal puzzle has no redundant rule")
    check(chk["best_known_rules"] == 4, "best known rule count is nm - g")

    # exit codes: malformed input
    bad_path = os.path.join(tmp, "bad.json")
    with open(bad_path, "w") as f:
        f.write("{not json")
    run(["resolve", "--n", "2", bad_path], expect_code=2)
    with open(bad_path, "w") as f:
        json.dump({"m": 2, "components": [[3]]}, f)
    run(["resolve", "--n", "2", bad_path], expect_code=2)

    # exit codes: regime, capacity, inconsistent puzzle
    run(["construct", "--n", "8", "--m", "4", "--kind", "pair"], expect_code=3)
    run(["bounds", "--n", "4", "--m", "30"], expect_code=4)
    run(["bounds", "--n", "4", "--m", "10"], expect_code=4,
        env_extra={"URM_MAX_M": "6"})
    run(["bounds", "--n", "4", "--m", "6"], env_extra={"URM_MAX_M": "6"})

    pz["rules"] = [
        {"cat_a": 0, "val_a": 0, "cat_b": 1, "val_b": 0},
        {"cat_a": 0, "val_a": 1, "cat_b": 1, "val_b": 0},
    ]
    with open(pz_path, "w") as f:
        json.dump(pz, f)
    run(["zebra", "solve", pz_path], expect_code=5)

    # output file writing
    out_path = os.path.join(tmp, "out.json")
    run(["construct", "--n", "5", "--m", "4", "--format", "structured", "-o", out_path])
    with open(out_path) as f:
        check(json.load(f)["claimed_size"] == 11, "construct 5 4 writes claimed size 11")

    print(f"cli_checks: {checks} checks passed")


if __name__ == "__main__":
    main()
