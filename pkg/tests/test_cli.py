import csv
import io
import json
import subprocess
import sys

import pytest

from dedsum.cli import SCAN_FIELDS, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_sum():
    assert run("sum", "15", "49") == (0, "s = -8/49\n")
    assert run("sum", "15", "49", "--method", "def") == (0, "s = -8/49\n")
    assert run("sum", "1", "2") == (0, "s = 0\n")


def test_sum_all():
    code, text = run("sum", "2", "15", "--all")
    assert code == 0
    assert text.splitlines() == ["s = 7/18", "T = 7", "D = 9", "a* = 8", "mu = 0", "I = 28"]
    code, text = run("sum", "2", "15", "--all", "--json")
    assert json.loads(text) == {"a": 2, "b": 15, "s": "7/18", "T": 7, "D": 9, "a*": 8, "mu": 0, "I": 28}


def test_check_json():
    code, text = run("check", "1", "15", "49", "--json")
    rec = json.loads(text)
    assert code == 0
    assert rec == {"b": 49, "a1": 1, "a2": 15, "s1": "188/49", "s2": "-8/49", "delta12s": "48/1",
                   "ladder": 8, "equal": False, "cond_c": True, "jabuka": True}


def test_check_text_and_csv():
    code, text = run("check", "3", "3", "7")
    assert code == 0 and "equal = true" in text and "delta12s = 0\n" in text
    code, text = run("check", "1", "3", "8")
    assert "ladder = none" in text and "jabuka = false" in text
    code, text = run("check", "1", "3", "8", "--csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows == [{"b": "8", "a1": "1", "a2": "3", "s1": "7/16", "s2": "1/16", "delta12s": "9/2",
                     "ladder": "none", "equal": "false", "cond_c": "false", "jabuka": "false"}]


def test_inv_cf_jacobi():
    for method in ("naive", "fast", "meyer"):
        assert run("inv", "15", "49", "--method", method) == (0, "I = 588\n")
    assert run("cf", "15", "49") == (0, "digits = [0; 3, 3, 1, 2, 1]\nT = 0\nD = 10\n")
    assert json.loads(run("cf", "2", "15", "--json")[1])["digits"] == [7, 1, 1]
    assert run("jacobi", "49", "15") == (0, "1\n")
    assert run("jacobi", "2", "5") == (0, "-1\n")


@pytest.mark.parametrize("argv", [
    ["sum", "2", "4"], ["check", "2", "3", "4"], ["jacobi", "3", "8"], ["cf", "3", "1"],
    ["verify", "bogus", "2", "3"], ["scan", "2", "3", "foo"], ["scan", "3", "2", "equal"],
])
def test_domain_errors_exit_2(argv, capsys):
    code, text = run(*argv)
    assert code == 2 and text == ""
    assert "error" in capsys.readouterr().err


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["sum", "x", "2"])
    assert exc.value.code == 2


def test_verify_exit_codes():
    code, text = run("verify", "salie", "2", "40")
    assert code == 0 and "violations=0 PASS" in text
    code, text = run("verify", "all", "2", "12", "--json")
    reports = [json.loads(line) for line in text.splitlines()]
    assert [r["theorem"] for r in reports][:2] == ["zolotarev", "meyer"]
    assert all(r["status"] == "pass" and r["violations"] == [] for r in reports)


def test_verify_reports_violations(monkeypatch):
    import dedsum.theorems as th
    monkeypatch.setattr(th, "check_bhk", lambda a, b: a != 2)
    code, text = run("verify", "bhk", "2", "6")
    assert code == 1
    # coprime pairs for b = 2..6: 1 + 2 + 2 + 4 + 2
    assert text.splitlines() == ["bhk: b=2..6 checked=11 violations=2 FAIL", "  2 3", "  2 5"]


def test_scan_csv_json_identical():
    _, c = run("scan", "2", "30", "ladder=4", "--csv")
    _, j = run("scan", "2", "30", "ladder=4", "--json")
    assert c.splitlines()[0] == ",".join(SCAN_FIELDS)
    csv_rows = list(csv.DictReader(io.StringIO(c)))
    json_rows = [json.loads(line) for line in j.splitlines()]
    assert len(csv_rows) == len(json_rows) > 0
    for cr, jr in zip(csv_rows, json_rows):
        assert list(jr) == list(SCAN_FIELDS)
        assert cr == {k: ("none" if v is None else str(v).lower() if isinstance(v, bool) else str(v))
                      for k, v in jr.items()}


def test_rationals_rendered_in_lowest_terms():
    _, j = run("scan", "2", "25", "ladder=none", "--json")
    from fractions import Fraction
    for line in j.splitlines():
        rec = json.loads(line)
        for key in ("s1", "s2", "delta12s"):
            num, den = map(int, rec[key].split("/"))
            assert den > 0 and Fraction(num, den).denominator == den


def test_scan_examples():
    _, text = run("scan", "49", "49", "cond-c-not-equal")
    assert "49,1,15,188/49,-8/49,48/1,8,false,true,true" in text.splitlines()
    _, text = run("scan", "2", "2", "equal")
    assert text == ",".join(SCAN_FIELDS) + "\n"
    _, text = run("scan", "5", "5", "equal")
    assert text.splitlines()[1:] == ["5,2,3,0/1,0/1,0/1,8,true,true,true"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dedsum", "sum", "15", "49"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "s = -8/49\n"
    proc = subprocess.run([sys.executable, "-m", "dedsum", "verify", "lerch", "2", "20", "--progress"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.count("\n") == 1 and "b=20" in proc.stderr
