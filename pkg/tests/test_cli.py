import csv
import io
import xml.etree.ElementTree as ET

import pytest

from affinv.affine_core import identity, reflection, simple
from affinv.cli import emit_winding_svg, parse_involution, parse_weighted, run, winding_svg
from affinv.genfunc import count_N
from affinv.involutions import involution_from_cycles

Z8 = involution_from_cycles(8, [(1, 12), (7, 10), (3, 6)])


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_forms():
    z6 = involution_from_cycles(6, [(1, 12), (2, 11), (3, 4)])
    assert parse_involution("[cycles (1,12),(2,11),(3,4)]", 6) == z6
    assert parse_involution("(1,12)(2,11)(3,4)", 6) == z6
    assert parse_involution("[-4,2,3,9]", 4) == reflection(4, 0, 5)
    theta = parse_weighted("(1,2:2)(3,10:3)", 5)
    assert theta.phi(1, 2) == 2 and theta.phi(8, 15) == 3


def test_atoms_command(capsys):
    code, out, _ = _run(capsys, "atoms", "--z", "[-4,2,3,9]", "--n", "4", "--check")
    assert code == 0 and len(out.splitlines()) == 3


def test_poset_dot(capsys):
    code, out, _ = _run(capsys, "poset", "--z", "[cycles (1,12),(2,11),(3,4)]", "--n", "6", "--dot")
    assert code == 0 and out.count("label=") == 29


def test_counts_csv(capsys):
    code, out, _ = _run(capsys, "counts", "--n", "6", "--max-m", "10", "--check")
    assert code == 0
    rows = [r for r in csv.DictReader(io.StringIO(out)) if r["k"] == "total"]
    assert [int(r["N"]) for r in rows] == [count_N(6, m) for m in range(1, 11)]


def test_output_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(["counts", "--n", "5", "--csv", str(a)]) == 0
    assert run(["counts", "--n", "5", "--csv", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_other_commands(capsys):
    assert _run(capsys, "enumerate", "--n", "3", "--max-hat", "2")[0] == 0
    code, out, _ = _run(capsys, "covers", "--z", "[1,2,3]", "--n", "3")
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = _run(capsys, "tau", "--z", "(1,3)(5,7)", "--n", "7", "--i", "1", "--j", "4")
    assert code == 0 and "(1,4)(5,7)" in out
    code, out, _ = _run(capsys, "standardize", "--z", "(1,3)(2,12)(6,8)", "--n", "8", "--E", "2,4,6,7,8")
    assert code == 0 and out.strip() == "[7, -4, 5, 4, 3]"
    code, out, _ = _run(capsys, "winding", "--z", "(1,12)(7,10)(3,6)", "--n", "8")
    assert code == 0 and len(out.splitlines()) == 3


def test_verify_small(capsys):
    code, out, _ = _run(capsys, "verify", "series", "--n", "4", "--cap", "8")
    assert code == 0 and out.startswith("PASS series")


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["atoms", "--n", "4"],
    ["atoms", "--z", "[1,2]", "--n", "4"],
    ["atoms", "--z", "(1,2)(2,3)", "--n", "4"],
    ["tau", "--z", "[1,2,3]", "--n", "3", "--i", "2", "--j", "1"],
    ["enumerate", "--n", "0"],
])
def test_usage_errors(capsys, argv):
    assert run(argv) == 2


def test_resource_bound_exit(monkeypatch, capsys):
    import affinv.cli as cli
    from affinv.atoms import atoms_bruteforce
    monkeypatch.setattr(cli, "atoms_bruteforce", lambda z: atoms_bruteforce(z, max_elements=10))
    code, _, err = _run(capsys, "atoms", "--z", "[-4,2,3,9]", "--n", "4", "--check")
    assert code == 3 and "max_elements" in err


def _svg(z):
    root = ET.fromstring(winding_svg(z))
    ns = "{http://www.w3.org/2000/svg}"
    dots = [c for c in root.iter(ns + "circle") if c.get("fill") == "black"]
    arcs = list(root.iter(ns + "polyline"))
    labels = [t.text for t in root.iter(ns + "text")]
    return dots, arcs, labels


def test_winding_svg(tmp_path):
    dots, arcs, _ = _svg(identity(5))
    assert len(dots) == 5 and arcs == []
    dots, arcs, labels = _svg(Z8)
    assert len(dots) == 8 and len(arcs) == 3
    assert sorted(labels[:3], key=int) == ["-1", "0", "1"]
    dots, arcs, labels = _svg(simple(4, 1))
    assert len(arcs) == 1 and labels[0] == "0"
    path = tmp_path / "z.svg"
    emit_winding_svg(Z8, path)
    assert path.read_text() == winding_svg(Z8)
