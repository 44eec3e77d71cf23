import subprocess
import sys

import pytest

from multihilb.cli import main
from multihilb.geometry import format_pointset, gen_grid, gen_random, parse_pointset
from multihilb.staircase import format_staircase, random_artinian_staircase


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def test_hilbert_single_point(capsys, write):
    f = write("one.pts", "pointset k=2 n=1,1\n1,0 | 1,0\n")
    assert run(capsys, "hilbert", f) == (0, "H\t0\t1\n0\t1\t1\n1\t1\t1\n", "")


def test_hilbert_window_and_field(capsys, write):
    f = write("g.pts", format_pointset(gen_grid(2, 2)))
    code, out, _ = run(capsys, "hilbert", f, "--window", "3,1", "--field", "prime:101")
    assert code == 0
    assert out.splitlines()[1:] == ["0\t1\t2", "1\t2\t4", "2\t2\t4", "3\t2\t4"]


def test_delta(capsys, write):
    f = write("d.pts", "pointset k=2 n=1,1\n1,0 | 1,0\n0,1 | 0,1\n")
    code, out, _ = run(capsys, "delta", f)
    assert code == 0
    assert out.splitlines()[2] == "1\t1\t-1\t0"


def test_delta_three_factors(capsys, write):
    f = write("d3.pts", "pointset k=3 n=1,1,1\n1,0 | 1,0 | 1,0\n0,1 | 0,1 | 0,1\n")
    code, out, _ = run(capsys, "delta", f)
    assert code == 0
    assert out.startswith("slice i_3,...,i_k=0\n")


def test_acm_not_acm(capsys, write):
    f = write("d.pts", "pointset k=2 n=1,1\n1,0 | 1,0\n0,1 | 0,1\n")
    code, out, _ = run(capsys, "acm", f)
    assert code == 0
    assert out.splitlines()[0] == "NOT ACM"
    assert "alpha*=(2) beta=(1,1)" in out
    assert "witness condition=ii at=1,1 DeltaH=-1" in out


def test_betti(capsys, write):
    f = write("g.pts", format_pointset(gen_grid(2, 3)))
    assert run(capsys, "betti", f) == (0, "C\t0\t3\nC\t2\t0\nV\t2\t3\n", "")
    bad = write("d.pts", "pointset k=2 n=1,1\n1,0 | 1,0\n0,1 | 0,1\n")
    code, out, err = run(capsys, "betti", bad)
    assert code == 1 and out == "" and err.startswith("error:")


def test_border(capsys, write):
    f = write("g.pts", format_pointset(gen_grid(2, 2)))
    assert run(capsys, "border", f) == (0, "B_C\t2\t4\nB_R\t2\t4\n", "")


def test_lift_then_acm(capsys, write, tmp_path):
    for seed in range(10):
        stf = write(f"s{seed}.st", format_staircase(random_artinian_staircase(2, 9, seed)))
        out = str(tmp_path / f"l{seed}.pts")
        assert run(capsys, "lift", stf, "--out", out)[0] == 0
        code, text, _ = run(capsys, "acm", out)
        assert code == 0 and text.startswith("ACM\n")


def test_lift_with_dims(capsys, write):
    f = write("s.st", "staircase k=3\n1,0,0\n0,2,0\n0,0,1\n")
    code, out, _ = run(capsys, "lift", f, "--dims", "2,1")
    assert code == 0
    assert parse_pointset(out).dims == (2, 1) and len(parse_pointset(out)) == 2


def test_gen_round_trip(capsys):
    code, out, _ = run(capsys, "gen", "random", "6", "4")
    assert code == 0 and parse_pointset(out) == gen_random((1, 1), 6, 4)
    assert format_pointset(parse_pointset(out)) == out
    assert run(capsys, "gen", "random", "6", "--seed", "4")[1] == out
    code, out, _ = run(capsys, "gen", "grid", "2", "3")
    assert parse_pointset(out) == gen_grid(2, 3)
    code, out, _ = run(capsys, "gen", "depth", "3", "2", "--dims", "1,2,1")
    assert code == 0 and parse_pointset(out).dims == (1, 2, 1)


def test_peel(capsys, write):
    f = write("g.pts", format_pointset(gen_grid(3, 2)))
    code, out, _ = run(capsys, "peel", f)
    assert code == 0 and len(parse_pointset(out)) == 4
    one = write("one.pts", "pointset k=2 n=1,1\n1,0 | 1,0\n")
    assert run(capsys, "peel", one)[0] == 1


@pytest.mark.parametrize("argv", [
    ["hilbert", "MISSING"],
    ["gen", "grid", "2"],
    ["hilbert", "-", "--field", "prime:x"],
])
def test_malformed_exit_2(capsys, argv, monkeypatch):
    monkeypatch.setattr(sys, "stdin", __import__("io").StringIO("pointset k=2 n=1,1\n1,0 | 1,0\n"))
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:") and len(err.splitlines()) == 1


def test_malformed_file_names_line(capsys, write):
    f = write("bad.pts", "pointset k=2 n=1,1\n1,0 | 0,0\n")
    code, _, err = run(capsys, "hilbert", f)
    assert code == 2 and "line 2" in err


def test_unknown_verb_is_usage_error():
    proc = subprocess.run([sys.executable, "-m", "multihilb.cli", "frobnicate"],
                          capture_output=True, text=True)
    assert proc.returncode == 2


def test_deterministic_bytes(write):
    f = write("r.pts", format_pointset(gen_random((1, 1), 7, 9)))
    outs = {subprocess.run([sys.executable, "-m", "multihilb.cli", "hilbert", f],
                           capture_output=True, text=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1
