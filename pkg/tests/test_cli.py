import csv
import io

import pytest

from pentafield.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reduce(capsys):
    assert run(capsys, "reduce", "100", "--shape", "2,1") == (0, "9\n", "")


def test_reduce_rejects_oversize_input(capsys):
    code, _, err = run(capsys, "reduce", "3FF", "--shape", "2,1")
    assert code != 0
    assert "exceeds" in err


def test_reduce_rejects_malformed_hex(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["reduce", "xyz", "--shape", "2,1"])
    assert exc.value.code != 0


def test_mul_identity(capsys):
    assert run(capsys, "mul", "1", "1B", "--shape", "2,1") == (0, "1B\n", "")


def test_mul_needs_a_field(capsys):
    code, _, err = run(capsys, "mul", "1", "5", "--shape", "81,1")
    assert code != 0
    assert "reducible" in err


def test_invalid_shape(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--shape", "3,3"])
    assert exc.value.code != 0
    assert "b > c" in capsys.readouterr().err


def test_verify_exhaustive(capsys):
    code, out, _ = run(capsys, "verify", "--shape", "2,1", "--trials", "512")
    assert code == 0
    assert "exhaustive" in out
    assert "counted 13 x512; formula 13" in out


def test_verify_is_reproducible(capsys):
    first = run(capsys, "verify", "--shape", "81,1", "--trials", "300", "--seed", "42")
    second = run(capsys, "verify", "--shape", "81,1", "--trials", "300", "--seed", "42")
    assert first == second
    assert first[0] == 0
    assert "seed 42" in first[1]


def test_seed_range(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "--shape", "2,1", "--seed", str(1 << 64)])


def test_enumerate_small(capsys, tmp_path):
    path = tmp_path / "fam.csv"
    code, out, _ = run(capsys, "enumerate", "--max-degree", "5", "--csv", str(path))
    assert code == 0
    rows = list(csv.reader(path.open()))
    assert rows == [["m", "b", "c", "subfamily", "red_xor"], ["5", "2", "1", "c=1", "13"]]
    assert "b≠2c: 0, b=2c: 1" in out


def test_enumerate_empty(capsys):
    code, out, err = run(capsys, "enumerate", "--max-degree", "4")
    assert code == 0
    assert out == "m,b,c,subfamily,red_xor\n"
    assert "b≠2c: 0, b=2c: 0" in err


def test_enumerate_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "enumerate", "--max-degree", "5", "--csv", str(tmp_path / "no" / "x.csv"))
    assert code != 0
    assert "cannot write" in err


def test_cost_shape(capsys):
    code, out, _ = run(capsys, "cost", "--shape", "62,31")
    assert code == 0
    assert "XOR 371" in out
    assert "depth 3 XOR" in out


def test_cost_nist(capsys, tmp_path):
    path = tmp_path / "nist.csv"
    code, out, _ = run(capsys, "cost", "--nist", "--csv", str(path))
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert [r["red_xor"] for r in rows] == ["487", "847", "1711"]
    assert [(r["m"], r["b"], r["c"]) for r in rows] == [("163", "63", "37"), ("283", "111", "61"), ("571", "218", "135")]
    assert rows[0].keys() == {"m", "b", "c", "mul_xor", "mul_and", "red_xor", "total_xor", "depth"}


def test_cost_constant_series(capsys):
    code, out, _ = run(capsys, "cost", "--constant-series", "64")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["m", "C"]
    assert [int(r[0]) for r in rows[1:]] == list(range(2, 65))


def test_cost_needs_a_mode(capsys):
    code, _, err = run(capsys, "cost")
    assert code != 0
    assert "--shape" in err
