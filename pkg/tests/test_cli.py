import re
from pathlib import Path

import pytest

from potequiv.cli import main
from potequiv.frobenius import LEVEL11_CURVE, ap_table_from_curve, kronecker_character, twist_ap_table, write_ap_table

GOLDEN = Path(__file__).parent / "golden"
KV = re.compile(r"^@[A-Za-z0-9_.]+=\S*$")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bound(capsys):
    assert run(capsys, "bound", "--degree", "2", "--format", "kv")[1] == "@degree=2\n@bound=12\n"
    code, out, _ = run(capsys, "bound", "--degree", "4", "--factorial", "--format", "kv")
    assert code == 0 and "@bound=120" in out and "@factorial_bound=479001600" in out
    assert "@bound=2" in run(capsys, "bound", "--degree", "1", "--format", "kv")[1]
    assert run(capsys, "bound", "--degree", "0")[0] == 2


def test_cm_demo_golden(capsys):
    code, out, _ = run(capsys, "cm-demo", "--xmax", "50", "--format", "kv")
    assert code == 0
    assert out == (GOLDEN / "cm_demo_50.kv").read_text()
    assert all(KV.match(line) for line in out.splitlines())


def test_cm_demo_human(capsys):
    code, out, _ = run(capsys, "cm-demo", "--xmax", "1000")
    assert code == 0
    assert "all equivalent with m = 4: True" in out and "all inequivalent: True" in out


def test_cm_demo_rejects_tiny_x(capsys):
    assert run(capsys, "cm-demo", "--xmax", "5")[0] == 2


def test_compare_round_trip(capsys, tmp_path):
    path = tmp_path / "cm.txt"
    code, demo, _ = run(capsys, "cm-demo", "--xmax", "200", "--write-table", str(path), "--format", "kv")
    assert code == 0
    code, out, _ = run(capsys, "compare", "--table", str(path), "--format", "kv", "--predicted", "1/2")
    assert code == 0
    lines = dict(line[1:].split("=", 1) for line in out.splitlines())
    inert = int(dict(line[1:].split("=", 1) for line in demo.splitlines())["inert"])
    assert sum(1 for k, v in lines.items() if k.startswith("prime.") and v == "equivalent/4") == inert
    assert lines["hits"] == str(inert)


def test_compare_force_m(capsys, tmp_path):
    path = tmp_path / "cm.txt"
    run(capsys, "cm-demo", "--xmax", "300", "--write-table", str(path))
    code, out, _ = run(capsys, "compare", "--table", str(path), "--force-m", "4", "--format", "kv")
    assert code == 0
    for line in out.splitlines():
        if line.startswith("@prime."):
            p = int(line.split("=")[0].split(".")[1])
            assert line.endswith("X:yes,Y:yes") == (p % 4 == 3)


def test_compare_errors(capsys, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("#degree=2\n")
    code, _, err = run(capsys, "compare", "--table", str(empty))
    assert code == 2 and "no entries" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("#degree=2\n7;1 -14 49;1 0 49\n5;1 -10 25;1 0 25\n")
    code, _, err = run(capsys, "compare", "--table", str(bad))
    assert code == 2 and "line 3" in err
    assert run(capsys, "compare", "--table", str(tmp_path / "missing.txt"))[0] == 2


def test_lattice(capsys):
    code, out, _ = run(capsys, "lattice", "--matrix", "[[0,1],[-1,0]]", "--format", "kv")
    assert code == 0
    kv = dict(line[1:].split("=", 1) for line in out.splitlines())
    assert kv["n"] == "4" and kv["fixed_rank"] == "0" and kv["invariant_order"] == "2"
    assert kv["coset_bound_ok"] == "true"
    code, out, _ = run(capsys, "lattice", "--matrix", "[[1,0],[0,1]]", "--format", "kv")
    assert "@n=1" in out and "@fixed_rank=2" in out
    code, out, _ = run(capsys, "lattice", "--matrix", "[[0,1,0],[0,0,1],[1,0,0]]", "--format", "kv")
    assert "@fixed_basis=[(1, 1, 1)]" in out


def test_lattice_infinite_order(capsys):
    code, _, err = run(capsys, "lattice", "--matrix", "[[1,1],[0,1]]")
    assert code == 2 and "matrix_order cap" in err
    assert run(capsys, "lattice", "--matrix", "not a matrix")[0] == 2


def test_powermap(capsys):
    code, out, _ = run(capsys, "powermap", "--demo", "torus", "--samples", "50", "--format", "kv")
    assert code == 0 and "@collapse=true" in out
    code, out, _ = run(capsys, "powermap", "--demo", "swap", "--samples", "200", "--format", "kv")
    assert code == 0 and "@collapse=false" in out and "@witnesses_verified=200" in out
    with pytest.raises(SystemExit):
        main(["powermap", "--demo", "klein"])


def test_powermap_byte_determinism(capsys):
    a = run(capsys, "powermap", "--demo", "swap", "--samples", "40", "--seed", "99")[1]
    b = run(capsys, "powermap", "--demo", "swap", "--samples", "40", "--seed", "99")[1]
    assert a == b


@pytest.fixture(scope="module")
def ap_files(tmp_path_factory):
    d = tmp_path_factory.mktemp("ap")
    base = ap_table_from_curve(LEVEL11_CURVE, 2000, 11, "11a")
    twisted = twist_ap_table(base, kronecker_character(8, 8), 8)
    corrupted = twist_ap_table(base, kronecker_character(8, 8), 8)
    corrupted.ap[1009] = -corrupted.ap[1009]
    paths = {}
    for name, table in (("g", base), ("f", twisted), ("bad", corrupted)):
        paths[name] = d / f"{name}.txt"
        write_ap_table(table, paths[name])
    return paths


def test_twist(capsys, ap_files):
    code, out, _ = run(capsys, "twist", "--f", str(ap_files["f"]), "--g", str(ap_files["g"]), "--q", "8", "--format", "kv")
    assert code == 0
    assert "@chi.1=1\n@chi.3=-1\n@chi.5=-1\n@chi.7=1\n" in out
    code, out, _ = run(capsys, "twist", "--f", str(ap_files["g"]), "--g", str(ap_files["g"]), "--q", "1")
    assert code == 0 and "chi(0) = 1" in out
    code, out, _ = run(capsys, "twist", "--f", str(ap_files["bad"]), "--g", str(ap_files["g"]), "--q", "8")
    assert code == 1 and "no character" in out


def test_twist_inconclusive(capsys, tmp_path):
    small = ap_table_from_curve(LEVEL11_CURVE, 40, 11, "11a")
    path = tmp_path / "small.txt"
    write_ap_table(small, path)
    code, out, _ = run(capsys, "twist", "--f", str(path), "--g", str(path), "--q", "8")
    assert code == 3 and "inconclusive" in out


def test_ap_table_command(capsys, tmp_path):
    out_path = tmp_path / "t.txt"
    code, _, _ = run(capsys, "ap-table", "--curve", "0,-1,1,-10,-20", "--level", "11", "--xmax", "100",
                     "--out", str(out_path), "--twist", "8")
    assert code == 0
    g = tmp_path / "g.txt"
    run(capsys, "ap-table", "--curve", "0,-1,1,-10,-20", "--level", "11", "--xmax", "100", "--out", str(g))
    code, out, _ = run(capsys, "twist", "--f", str(out_path), "--g", str(g), "--q", "8", "--min-per-class", "1",
                       "--format", "kv")
    assert code == 0 and "@chi.3=-1" in out
