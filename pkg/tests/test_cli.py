import io
import json
from fractions import Fraction

import pytest

from minorsum.cli import main, random_integer_matrix
from minorsum.linalg import determinant


def run(argv, capsys=None):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_verify_json_lines():
    code, text = run(["--seed", "42", "verify", "--n", "6", "--k", "3", "--trials", "100"])
    assert code == 0
    records = [json.loads(line) for line in text.splitlines()]
    assert len(records) == 100
    assert all(r["match"] and r["okada"] == r["brute"] for r in records)
    assert records[0]["seed"] == 42 and records[-1]["seed"] == 141
    assert set(records[0]) == {"n", "k", "seed", "okada", "brute", "match"}


def test_verify_deterministic():
    argv = ["--seed", "7", "verify", "--n", "5", "--k", "2", "--trials", "20"]
    assert run(argv) == run(argv)
    assert run(argv)[1] != run(["--seed", "8"] + argv[2:])[1]


def test_verify_trial_reproducible_alone():
    _, text = run(["--seed", "3", "verify", "--n", "4", "--k", "2", "--trials", "5"])
    last = json.loads(text.splitlines()[-1])
    _, again = run(["--seed", str(last["seed"]), "verify", "--n", "4", "--k", "2", "--trials", "1"])
    assert json.loads(again) == last


def test_verify_more_columns_than_rows():
    code, text = run(["verify", "--n", "2", "--k", "3", "--trials", "3"])
    assert code == 0
    assert all(json.loads(l)["okada"] == "0" == json.loads(l)["brute"] for l in text.splitlines())


def test_verify_square_equals_determinant():
    code, text = run(["--seed", "11", "verify", "--n", "5", "--k", "5", "--trials", "10"])
    assert code == 0
    for line in text.splitlines():
        r = json.loads(line)
        assert Fraction(r["brute"]) == determinant(random_integer_matrix(5, 5, 5, r["seed"]))


def test_verify_tsv_and_guard():
    code, text = run(["--format", "tsv", "verify", "--n", "4", "--k", "2", "--trials", "2"])
    assert code == 0
    assert text.splitlines()[0] == "n\tk\tseed\tokada\tbrute\tmatch"
    assert text.splitlines()[1].endswith("\ttrue")
    assert run(["verify", "--n", "40", "--k", "10"])[0] == 2
    assert run(["verify", "--n", "4", "--k", "0"])[0] == 2


def test_integral():
    assert run(["integral", "--exponents", "1,2"]) == (0, "1/6\n")
    code, text = run(["integral", "--exponents", "1,2,3", "--check"])
    assert code == 0 and text.splitlines()[0] == "1/180"
    assert "agree\ttrue" in text
    assert run(["integral", "--exponents", "2,2"]) == (0, "0\n")
    assert run(["integral", "--exponents", "1,0"])[0] == 2
    assert run(["integral", "--exponents", "1,x"])[0] == 2


def test_integral_json():
    code, text = run(["--format", "json", "integral", "--exponents", "5/2,1,3", "--check"])
    record = json.loads(text)
    assert code == 0
    assert record["value"] == "-1/385"
    assert record["checks"] == {"rhs_product": "-1/385", "lhs_pfaffian": "-1/385",
                                "iterated_oracle": "-1/385"}


def test_converge_json():
    code, text = run(["converge", "--exponents", "1,2", "--grid", "10,100,1000"])
    rows = json.loads(text)
    assert code == 0 and [r["n"] for r in rows] == [10, 100, 1000]
    errors = [r["abs_error"] for r in rows]
    assert errors == sorted(errors, reverse=True)
    assert rows[0]["exact"] == "1/6"


def test_converge_tsv():
    code, text = run(["--format", "tsv", "converge", "--exponents", "1", "--grid", "10"])
    header, row = text.splitlines()
    assert header == "n\tapprox\texact\tabs_error"
    n, approx, exact, err = row.split("\t")
    assert (n, exact) == ("10", "1")
    assert float(err) == pytest.approx(0.1, abs=1e-12)


def test_converge_relative_error():
    _, text = run(["converge", "--exponents", "1,2,3", "--grid", "2000"])
    (row,) = json.loads(text)
    assert row["abs_error"] / (1 / 180) < 0.01


def test_converge_bad_grid():
    assert run(["converge", "--exponents", "1", "--grid", "100,10"])[0] == 2
    assert run(["converge", "--exponents", "1", "--grid", ""])[0] == 2
    assert run(["converge", "--exponents", "1,2,3", "--grid", "2"])[0] == 2


def write(tmp_path, obj):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(obj))
    return str(path)


def test_pfaffian_command(tmp_path):
    f = write(tmp_path, {"rows": 2, "cols": 2, "entries": [[0, "1/2"], ["-1/2", 0]]})
    assert run(["pfaffian", f]) == (0, "1/2\n")
    upper = {(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)}
    entries = [[1 if (i, j) in upper else -1 if (j, i) in upper else 0 for j in range(4)]
               for i in range(4)]
    f4 = write(tmp_path, {"rows": 4, "cols": 4, "entries": entries})
    assert run(["pfaffian", f4]) == (0, "1\n")
    assert json.loads(run(["--format", "json", "pfaffian", f4])[1]) == {"dim": 4, "pfaffian": "1"}


def test_pfaffian_command_errors(tmp_path, capsys):
    odd = write(tmp_path, {"rows": 3, "cols": 3, "entries": [[0, 1, 1], [-1, 0, 1], [-1, -1, 0]]})
    assert run(["pfaffian", odd])[0] == 2
    assert "even dimension" in capsys.readouterr().err
    sym = write(tmp_path, {"rows": 2, "cols": 2, "entries": [[0, 1], [1, 0]]})
    assert run(["pfaffian", sym])[0] == 2
    assert run(["pfaffian", str(tmp_path / "missing.json")])[0] == 2


def test_symbolic_command():
    assert run(["symbolic", "--k", "1"]) == (0, "OK k=1\n")
    assert run(["symbolic", "--k", "4"]) == (0, "OK k=4\n")
    assert run(["symbolic", "--k", "9"])[0] == 2
    code, text = run(["symbolic", "--k", "3", "--show"])
    assert code == 0 and text.startswith("OK k=3\n") and "reduced:" in text


def test_usage_errors_exit_2():
    assert run([])[0] == 2
    assert run(["nonsense"])[0] == 2
    assert run(["--seed", "-1", "verify", "--n", "2", "--k", "1"])[0] == 2
