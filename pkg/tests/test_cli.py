import csv
import io
import json
import subprocess
import sys

import pytest

from ptekit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def json_rows(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_expand_stated_gf(capsys):
    code, out, _ = run(capsys, "expand", "--gf", "(x^2+164x+3)/(x^3-99x^2+99x-1)", "--terms", "2", "--format", "json")
    assert code == 0
    assert [r["value"] for r in json_rows(out)] == ["-3", "-461"]


def test_expand_geometric_and_seed(capsys):
    code, out, _ = run(capsys, "expand", "--gf", "3/(1-x)", "--terms", "3", "--format", "json")
    assert code == 0 and [r["value"] for r in json_rows(out)] == ["3", "3", "3"]
    code, out, _ = run(capsys, "expand", "--seed-paper", "a", "--terms", "2", "--format", "json")
    assert [r["value"] for r in json_rows(out)] == ["-3", "-461"]


def test_expand_non_integral(capsys):
    code, _, err = run(capsys, "expand", "--gf", "1/(2-x)", "--terms", "2")
    assert code == 1 and "NonIntegralSeries" in err
    code, out, _ = run(capsys, "expand", "--gf", "1/(2-x)", "--terms", "2", "--rational", "--format", "json")
    assert code == 0 and [r["value"] for r in json_rows(out)] == ["1/2", "1/4"]


@pytest.mark.parametrize(
    "argv",
    [
        ["expand", "--gf", "1/x"],
        ["expand", "--gf", "x^^2"],
        ["expand", "--seed-paper", "z"],
        ["expand"],
        ["verify", "theorem", "--max-k", "-1"],
        ["verify", "nonsense"],
        ["find-recurrence", "--terms", "1,2,3", "--max-order", "2"],
        ["find-recurrence", "--terms", "1,x"],
        ["search", "--size", "7", "--bound", "3", "--degree", "1"],
        ["chernick", "--m", "1", "--n", "0", "--affine", "1"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "theorem", "--max-k", "200")[0] == 0
    assert run(capsys, "verify", "ramanujan", "--max-n", "200")[0] == 0
    code, out, _ = run(capsys, "verify", "theorem", "--max-k", "1", "--powers", "6", "--format", "json")
    assert code == 1
    rows = json_rows(out)
    # the k=0 tuple happens to satisfy j=6 as well
    assert [(r["index"], r["label"], r["status"]) for r in rows] == [("1", "j=6", "FAIL")]
    for target in ("closed-forms", "h-forms", "pell"):
        assert run(capsys, "verify", target, "--max-k", "30")[0] == 0


def test_chernick_commands(capsys):
    code, out, _ = run(capsys, "chernick", "--m", "3", "--n", "1", "--format", "json")
    rows = {r["label"]: r["value"] for r in json_rows(out)}
    assert code == 0 and rows["degree"] == "Exact(5)" and rows["ideal"] == "true"
    code, out, err = run(capsys, "chernick", "--m", "1", "--n", "0", "--format", "json")
    rows = {r["label"]: r["value"] for r in json_rows(out)}
    assert code == 0 and rows["degree"] == "IdenticalMultisets" and "identical" in err
    code, out, _ = run(capsys, "chernick", "--m", "10", "--n", "1", "--affine", "1,2", "--format", "json")
    assert json_rows(out)[0] == {"label": "a", "value": "-461"}


def test_find_recurrence_command(capsys):
    code, out, _ = run(capsys, "find-recurrence", "--terms", "0,1,10,99,980,9701,96030,950599", "--format", "json")
    rows = {r["field"]: r["value"] for r in json_rows(out)}
    assert code == 0 and rows["order"] == "2"
    assert rows["recurrence"] == "s_n = 10 s_{n-1} - s_{n-2}"
    code, _, err = run(capsys, "find-recurrence", "--terms", "1,2,4,8,1", "--max-order", "1")
    assert code == 1 and "NotFound" in err


def test_hadamard_command(capsys):
    code, out, _ = run(capsys, "hadamard", "--gf1", "x/(1-10x+x^2)", "--gf2", "x/(1-10x+x^2)", "--format", "json")
    rows = {r["field"]: r["value"] for r in json_rows(out)}
    assert code == 0
    assert rows["gf_display"] == "(-x^2-x)/(x^3-99x^2+99x-1)"
    assert rows["gf"] == "(x^2+x)/(-x^3+99x^2-99x+1)"


def test_search_command(capsys):
    code, out, err = run(capsys, "search", "--size", "2", "--bound", "3", "--degree", "1", "--format", "json")
    assert code == 0
    assert {"A": "{0,3}", "B": "{1,2}", "degree": "Exact(1)", "ideal": "true"} in json_rows(out)


def _table_rows(out):
    lines = out.splitlines()
    header = lines[0].split()
    return [dict(zip(header, line.split())) for line in lines[1:]]


@pytest.mark.parametrize(
    "argv",
    [
        ["expand", "--seed-paper", "c", "--terms", "12"],
        ["chernick", "--m", "3", "--n", "1"],
        ["verify", "theorem", "--max-k", "2", "--powers", "5-7", "--all"],
    ],
)
def test_formats_are_row_equivalent(capsys, argv):
    _, j, _ = run(capsys, *argv, "--format", "json")
    _, c, _ = run(capsys, *argv, "--format", "csv")
    _, t, _ = run(capsys, *argv, "--format", "table")
    jr = json_rows(j)
    cr = list(csv.DictReader(io.StringIO(c)))
    assert jr == cr == _table_rows(t)


def test_json_integers_round_trip(capsys):
    _, out, _ = run(capsys, "expand", "--seed-paper", "a", "--terms", "40", "--format", "json")
    from ptekit.cfinite import expand
    from ptekit.exactalg import parse_gf
    from ptekit.paperseq import THEOREM_GF_TEXT

    values = [int(r["value"]) for r in json_rows(out)]
    assert values == expand(parse_gf(THEOREM_GF_TEXT["a"]), 40)
    assert abs(values[-1]) > 2**53
    assert all(isinstance(r["value"], str) for r in json_rows(out))


def test_workers_flag_keeps_output_bytes(capsys):
    _, a, _ = run(capsys, "verify", "theorem", "--max-k", "40", "--all", "--format", "csv")
    _, b, _ = run(capsys, "verify", "theorem", "--max-k", "40", "--all", "--format", "csv", "--workers", "3")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ptekit", "expand", "--gf", "3/(1-x)", "--terms", "2", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["index,value", "0,3", "1,3"]
