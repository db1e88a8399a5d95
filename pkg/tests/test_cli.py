import io
import json
import os
import subprocess
import sys

import pytest

from spincong.cli import main


def run(*argv):
    out = io.StringIO()
    code = main([*argv, "--quiet"], out=out)
    return code, out.getvalue()


def test_series_order_zero():
    code, out = run("series", "--function", "f-shat", "--order", "0")
    assert code == 0
    assert out == "0 1\n"


def test_series_json_and_csv():
    code, out = run("series", "--function", "f-pbar", "--p", "7", "--order", "31", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["order"] == 31 and data["coeffs"][31] == "4"
    code, out = run("series", "--function", "p", "--order", "5", "--format", "csv")
    assert out.splitlines() == ["n,coeff", "0,1", "1,1", "2,2", "3,3", "4,5", "5,7"]


def test_enumerate_cores_json():
    code, out = run("enumerate", "--kind", "pbar-core", "--n", "31", "--p", "7", "--format", "json")
    assert code == 0
    assert json.loads(out) == [[17, 10, 3, 1], [16, 9, 4, 2], [16, 9, 3, 2, 1], [12, 10, 5, 3, 1]]


def test_enumerate_text():
    code, out = run("enumerate", "--kind", "bar", "--n", "5")
    assert out.splitlines() == ["(5)", "(4,1)", "(3,2)", "count 3"]


def test_verify_mod2_progressions():
    code, out = run("verify", "--source", "corollary-3.3", "--p", "5", "--n-max", "200", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert len(rows) == 4 and all(r["holds"] for r in rows)
    assert {"source", "counter", "A", "B", "M", "n_max", "holds", "counterexample"} <= set(rows[0])
    assert [r["B"] for r in rows] == [6, 11, 16, 21]


def test_abacus_and_degree():
    code, out = run("abacus", "--partition", "16,9,4,2", "--p", "7", "--format", "json")
    data = json.loads(out)
    assert data["is_core"] and data["runners"][2] == [0, 1, 2]
    code, out = run("degree", "--partition", "5,3,2", "--primes", "3", "--format", "json")
    data = json.loads(out)
    assert data["degree"] == 432 and data["defects"] == {"3": 1}
    assert data["bar_lengths"] == [[8, 7, 5, 4, 1], [5, 3, 2], [2, 1]]


def test_identities_and_search():
    code, out = run("identities", "--check", "all", "--order", "50")
    assert code == 0 and len(out.splitlines()) == 8 and "MISMATCH" not in out
    code, out = run("search", "--counter", "f-shat", "--A-max", "25", "--moduli", "2", "--format", "json")
    assert {"M": 2, "A": 25, "B": 6} in json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        ["series", "--function", "f-pbar", "--order", "5"],
        ["series", "--function", "f-pbar", "--p", "9", "--order", "5"],
        ["series", "--function", "p", "--order", "10", "--order-cap", "5"],
        ["enumerate", "--kind", "bar", "--n", "x"],
        ["enumerate", "--kind", "pbar-core", "--n", "5"],
        ["abacus", "--partition", "3,3", "--p", "5"],
        ["abacus", "--partition", "a,b", "--p", "5"],
        ["verify", "--source", "corollary-3.3", "--p", "7"],
        ["verify", "--source", "nonsense"],
        ["search", "--counter", "p", "--n-max", "10"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv + (["--quiet"] if argv and argv[0] != "bogus" else []), out=io.StringIO()) == 2


def test_output_is_deterministic():
    args = ["verify", "--source", "theorem-4.1", "--n-max", "100", "--jobs", "3"]
    first = run(*args)
    assert first == run(*args)
    assert first[0] == 0


def test_console_entry_and_header():
    env = dict(os.environ)
    proc = subprocess.run(
        [sys.executable, "-m", "spincong.cli", "series", "--function", "f-ahat", "--order", "2"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0
    assert proc.stdout == "0 2\n1 2\n2 1\n"
    assert proc.stderr.startswith("# spincong")
    quiet = subprocess.run(
        [sys.executable, "-m", "spincong.cli", "series", "--function", "f-ahat", "--order", "2", "--quiet"],
        capture_output=True, text=True, env=env,
    )
    assert quiet.stderr == "" and quiet.stdout == proc.stdout
