#!/usr/bin/env python3
"""End-to-end checks for the command line tool. Usage: cli_checks.py PATH."""

import json
import os
import subprocess
import sys
import tempfile

CLI = None
failures = []
passed = 0


def run(*args, env_extra=None, expect=0):
    env = dict(os.environ)
    env.pop("DOMLAB_BUDGET", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [CLI, *args], capture_output=True, text=True, env=env, timeout=300
    )
    if expect is not None and proc.returncode != expect:
        raise AssertionError(
            f"{' '.join(args)}: exit {proc.returncode}, wanted {expect}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc


def check(name, fn):
    global passed
    try:
        fn()
        passed += 1
    except Exception as e:
        failures.append(f"{name}: {type(e).__name__}: {e}")


def solve_text():
    out = run("solve", "--family", "cycle", "-n", "6", "-m", "5", "--param", "dom").stdout
    assert "instance = C_6 x K_5" in out, out
    assert "gamma = 4" in out, out
    assert "nodes = " in out, out
    assert "certificate:" in out, out
    assert "millis" not in out and " ms" not in out, out


def solve_json():
    out = run(
        "solve", "--family", "cycle", "-n", "6", "-m", "5",
        "--param", "dom", "--format", "json",
    ).stdout
    doc = json.loads(out)
    assert doc["family"] == "cycle-clique", doc
    assert doc["n"] == 6 and doc["m"] == 5, doc
    assert doc["param"] == "dom" and doc["symbol"] == "gamma", doc
    assert doc["value"] == 4, doc
    assert doc["canonical"] is False, doc
    assert len(doc["certificate"]) == 4, doc
    for pair in doc["certificate"]:
        assert isinstance(pair, list) and len(pair) == 2, doc
        assert 1 <= pair[0] <= 6 and 1 <= pair[1] <= 5, doc


def canonical_deterministic():
    args = (
        "solve", "--family", "path", "-n", "6", "-m", "3",
        "--param", "sdom", "--canonical", "--format", "json",
    )
    first, second = run(*args).stdout, run(*args).stdout
    assert first == second, f"{first!r} != {second!r}"
    assert json.loads(first)["canonical"] is True


def gen_round_trip():
    with tempfile.TemporaryDirectory() as tmp:
        edges = os.path.join(tmp, "edges.txt")
        run("gen", "--family", "cycle", "-n", "6", "-m", "5", "--out", edges)
        out = run("solve", "--edges", edges, "--param", "dom").stdout
        assert "gamma = 4" in out, out
        assert "instance =" not in out, out  # a file-born graph carries no meta


def verify_ok_and_fail():
    with tempfile.TemporaryDirectory() as tmp:
        cert = os.path.join(tmp, "cert.txt")
        run(
            "solve", "--family", "cycle", "-n", "6", "-m", "5",
            "--param", "dom", "--cert-out", cert,
        )
        out = run(
            "verify", "--family", "cycle", "-n", "6", "-m", "5",
            "--param", "dom", "--cert", cert,
        ).stdout
        assert out.strip() == "ok", out

        with open(cert, "w") as fh:
            fh.write("1 1\n")
        proc = run(
            "verify", "--family", "cycle", "-n", "6", "-m", "5",
            "--param", "dom", "--cert", cert, expect=1,
        )
        assert proc.stdout.startswith("fail:"), proc.stdout
        assert "undominated" in proc.stdout, proc.stdout


def verify_defense_plan():
    with tempfile.TemporaryDirectory() as tmp:
        cert = os.path.join(tmp, "cert.txt")
        with open(cert, "w") as fh:
            fh.write("".join(f"{i} 1\n" for i in range(1, 6)))  # row R_1
        out = run(
            "verify", "--family", "cycle", "-n", "5", "-m", "3",
            "--param", "sdom", "--cert", cert, "--format", "json",
        ).stdout
        doc = json.loads(out)
        assert doc["ok"] is True and doc["size"] == 5, doc
        assert len(doc["defense"]) == 10, doc  # one guard per outside vertex
        for entry in doc["defense"]:
            assert entry["guard"][1] == 1, doc  # guards come from the row


def construct_commands():
    out = run(
        "construct", "--kind", "dom-cycle", "-n", "6", "-m", "5", "--format", "json"
    ).stdout
    doc = json.loads(out)
    assert doc["size"] == 4 and doc["primary_ok"] is True, doc
    assert doc["checks"]["dominating"] is True, doc
    assert doc["checks"]["independent"] is True, doc

    # Secure path sets stay primary-ok while the 2-domination check records
    # the known gap at the endpoints.
    out = run(
        "construct", "--kind", "sdom-path-rowplus", "-n", "5", "-m", "4",
        "--format", "json",
    ).stdout
    doc = json.loads(out)
    assert doc["primary_ok"] is True, doc
    assert doc["checks"]["secure"] is True, doc
    assert doc["checks"]["2-dominating"] is False, doc

    run("construct", "--kind", "dom-cycle", "-n", "5", "-m", "3", expect=4)
    run("construct", "--kind", "no-such-kind", "-n", "6", "-m", "3", expect=4)


def formula_commands():
    out = run(
        "formula", "--family", "cycle", "--param", "dom", "-n", "6", "-m", "5"
    ).stdout
    assert "gamma = 4" in out and "source = cycle-dom-3k" in out, out
    doc = json.loads(
        run(
            "formula", "--family", "path", "--param", "sdom", "-n", "7", "-m", "3",
            "--format", "json",
        ).stdout
    )
    assert doc["value"] == 9 and doc["source"] == "path-sdom-m3-3k1", doc
    # Outside every proven guard: independent domination below n = 6.
    run("formula", "--family", "cycle", "--param", "idom", "-n", "5", "-m", "3", expect=4)


def erratum_commands():
    lines = run("erratum", "--format", "json").stdout.strip().splitlines()
    assert len(lines) == 3, lines
    expected = {
        "sitthiwirattham-path": (6, 5),
        "sitthiwirattham-cycle": (6, 4),
        "gravier-bound": (4, 5),
    }
    for line in lines:
        doc = json.loads(line)
        assert set(doc.keys()) == {"claim", "n", "m", "claimed", "exact", "verdict"}, doc
        claimed, exact = expected[doc["claim"]]
        assert doc["claimed"] == claimed and doc["exact"] == exact, doc
        assert doc["verdict"] == "refuted", doc

    out = run("erratum", "--claim", "sitthiwirattham-path").stdout
    assert "P_6 x K_8 claimed 6, exact 5, refuted" in out, out
    run("erratum", "--budget", "10", expect=5)


def table_commands():
    proc = run(
        "table", "--param", "dom", "--family", "both",
        "--n-range", "2..5", "--m-range", "3..4",
    )
    rows = [json.loads(line) for line in proc.stdout.strip().splitlines()]
    assert len(rows) == 16, len(rows)
    for row in rows:
        assert set(row.keys()) == {
            "family", "param", "n", "m", "formula", "solver", "construction", "agree",
        }, row
        assert row["agree"] is True, row
        assert row["formula"] == row["solver"], row
        if row["construction"] is not None:
            assert row["construction"] == row["solver"], row

    # The published 2-domination claim misses on the path strip; the table
    # records the disagreement and signals it through the exit code.
    proc = run(
        "table", "--param", "2dom", "--family", "path-clique",
        "--n-range", "5..5", "--m-range", "4..4", expect=1,
    )
    row = json.loads(proc.stdout.strip())
    assert row["formula"] == 7 and row["solver"] == 8, row
    assert row["agree"] is False, row


def exit_codes():
    run("no-such-command", expect=2)
    run("solve", "--family", "cycle", "-n", "6", "-m", "5", expect=2)  # missing --param
    run(
        "verify", "--family", "cycle", "-n", "6", "-m", "5",
        "--param", "dom", "--cert", "/nonexistent/cert.txt", expect=3,
    )
    run("solve", "--family", "cycle", "-n", "1", "-m", "3", "--param", "dom", expect=4)
    run(
        "solve", "--family", "cycle", "-n", "6", "-m", "5",
        "--param", "dom", "--budget", "1", expect=5,
    )


def budget_env():
    run(
        "solve", "--family", "cycle", "-n", "6", "-m", "5", "--param", "dom",
        env_extra={"DOMLAB_BUDGET": "1"}, expect=5,
    )
    run(
        "solve", "--family", "cycle", "-n", "6", "-m", "5", "--param", "dom",
        env_extra={"DOMLAB_BUDGET": "junk"}, expect=4,
    )
    # An explicit --budget wins over the environment.
    run(
        "solve", "--family", "cycle", "-n", "6", "-m", "5", "--param", "dom",
        "--budget", "1000000", env_extra={"DOMLAB_BUDGET": "1"},
    )


def parse_error_line_numbers():
    with tempfile.TemporaryDirectory() as tmp:
        edges = os.path.join(tmp, "bad.txt")
        with open(edges, "w") as fh:
            fh.write("3\n0 1\n1 1\n")
        proc = run("solve", "--edges", edges, "--param", "dom", expect=3)
        assert "line 3" in proc.stderr, proc.stderr


def main():
    global CLI
    if len(sys.argv) != 2:
        print("usage: cli_checks.py PATH-TO-CLI", file=sys.stderr)
        return 2
    CLI = sys.argv[1]

    check("solve text output", solve_text)
    check("solve json output", solve_json)
    check("canonical runs are byte-identical", canonical_deterministic)
    check("gen/solve edge list round trip", gen_round_trip)
    check("verify accepts and rejects", verify_ok_and_fail)
    check("verify reports a defense plan", verify_defense_plan)
    check("construct variants", construct_commands)
    check("formula variants", formula_commands)
    check("erratum reports", erratum_commands)
    check("table rows", table_commands)
    check("exit codes", exit_codes)
    check("budget environment variable", budget_env)
    check("parse errors carry line numbers", parse_error_line_numbers)

    for f in failures:
        print(f"FAIL {f}")
    print(f"{passed} passed, {len(failures)} failed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
