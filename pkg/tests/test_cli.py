import json

import pytest

from hyparr.cli import run


@pytest.fixture
def triangle_file(tmp_path):
    p = tmp_path / "ex.arr"
    p.write_text("dim 2\n1 0 | 0\n0 1 | 0\n1 1 | 1\n")
    return str(p)


@pytest.fixture
def square_graph(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text("vertices 4\n1 2\n2 3\n3 4\n1 4\n")
    return str(p)


def _json(capsys, argv):
    assert run(argv + ["--json"]) == 0
    text = capsys.readouterr().out
    data = json.loads(text)
    assert json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n" == text
    return data


def test_chi_file(capsys, triangle_file):
    assert run(["chi", "--file", triangle_file]) == 0
    assert "chi\tt^2 - 3t + 3" in capsys.readouterr().out


def test_chi_shi_all_methods(capsys):
    data = _json(capsys, ["chi", "--family", "shi", "--n", "3", "--method", "all"])
    assert data["chi"]["text"] == "t^3 - 6t^2 + 9t"
    assert data["chi"]["coefficients"] == ["0", "9", "-6", "1"]
    assert data["agree"] and set(data["methods"]) == {"mobius", "delcon", "finitefield"}


def test_linial_chi_has_rational_coefficients(capsys):
    data = _json(capsys, ["chi", "--family", "linial", "--n", "3"])
    assert all(isinstance(c, str) for c in data["chi"]["coefficients"])


def test_regions_catalan(capsys):
    data = _json(capsys, ["regions", "--family", "catalan", "--n", "3"])
    assert (data["regions"], data["bounded"]) == (30, 12)


def test_regions_enumerate_and_plot(capsys, tmp_path, triangle_file):
    png = tmp_path / "ex.png"
    assert run(["regions", "--file", triangle_file, "--enumerate", "--plot", str(png)]) == 0
    out = capsys.readouterr().out
    assert png.stat().st_size > 0
    table = out.split("# region_table\n")[1].splitlines()
    assert table[0] == "index\tsigns\tsample\tbounded"
    assert len(table) == 8
    data = _json(capsys, ["regions", "--file", triangle_file, "--bounded"])
    assert [r["signs"] for r in data["region_table"]] == ["++-"]


def test_generic_family_needs_d(capsys):
    assert run(["chi", "--family", "generic", "--n", "3"]) == 2
    assert _json(capsys, ["chi", "--family", "generic", "--n", "3", "--d", "2"])["chi"]["text"] == "t^2 - 3t + 3"


def test_parking_and_ballot(capsys):
    data = _json(capsys, ["parking", "--n", "3", "--labels"])
    assert data["parking_functions"] == 16 and data["bijective"]
    assert len({tuple(r["label"]) for r in data["labels"]}) == 16
    data = _json(capsys, ["ballot", "--n", "3"])
    assert data["chamber_regions"] == 5 and data["bounded"] == 2


def test_os(capsys, tmp_path):
    p = tmp_path / "os.arr"
    p.write_text("dim 2\n1 0 | 0\n0 1 | 0\n1 1 | 0\n1 -1 | 1\n")
    data = _json(capsys, ["os", "--file", str(p)])
    assert data["graded_dimensions"] == [1, 4, 5]
    assert data["hilbert"]["text"] == "5t^2 + 4t + 1"


def test_linial_roots(capsys, tmp_path):
    png = tmp_path / "roots.png"
    data = _json(capsys, ["linial-roots", "--n", "6", "--plot", str(png)])
    assert data["agree"] and data["max_deviation"] < 1e-6 and data["center"] == "3"
    assert len(data["roots"]) == 5 and png.exists()


def test_graph(capsys, square_graph):
    data = _json(capsys, ["graph", "--file", square_graph, "--chromatic", "--acyclic"])
    assert data["chromatic"]["text"] == "t^4 - 4t^3 + 6t^2 - 3t"
    assert data["acyclic_orientations"] == 14
    data = _json(capsys, ["chi", "--family", "graphical", "--graph", square_graph, "--method", "all"])
    assert data["chi"]["text"] == "t^4 - 4t^3 + 6t^2 - 3t"


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.arr"
    bad.write_text("dim 2\n1 0\n")
    assert run(["chi", "--file", str(bad)]) == 2
    assert run(["chi", "--file", str(tmp_path / "missing.arr")]) == 2
    assert run(["chi", "--family", "braid"]) == 2
    assert run(["chi", "--family", "braid", "--n", "5", "--method", "finitefield", "--max-points", "100"]) == 1
    assert run(["regions", "--family", "generic", "--n", "6", "--d", "2", "--enumerate", "--max-regions", "5"]) == 1
    with pytest.raises(SystemExit) as exc:
        run(["chi", "--method", "guess"])
    assert exc.value.code == 2


def test_selftest_subset(capsys):
    assert run(["selftest", "--only", "2", "12"]) == 0
    out = capsys.readouterr().out
    assert "[PASS]  2." in out and "[PASS] 12." in out


def test_deterministic(capsys):
    argv = ["regions", "--family", "shi", "--n", "3", "--enumerate", "--json"]
    run(argv)
    first = capsys.readouterr().out
    run(argv + ["--threads", "2"])
    assert capsys.readouterr().out == first
