import json
import xml.etree.ElementTree as ET

import pytest

from wordattractors.cli import run
from wordattractors.enumeration import AttractorFamily
from wordattractors.plot import plot, plot_spec

from test_enumeration import ATT_F7


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_closed_form_pd_json(capsys):
    code, out, err = call(capsys, "closed-form", "pd", "3", "--json")
    assert code == 0
    assert json.loads(out) == {"k": 2, "attractors": [[3, 6], [4, 6]]}
    assert out.strip() == '{"k":2,"attractors":[[3,6],[4,6]]}'


def test_closed_form_labels_method(capsys):
    _, out, _ = call(capsys, "closed-form", "fib", "7")
    assert out.splitlines()[0] == "# k=2 count=12 method=closed-form"
    assert out.splitlines()[1:] == [f"{u},{v}" for u, v in ATT_F7]
    _, out, err = call(capsys, "closed-form", "fib", "5", "--json")
    assert "enumeration" in err
    assert json.loads(out)["attractors"] == [[3, 5], [3, 7], [4, 5], [4, 7]]


def test_count(capsys):
    code, out, _ = call(capsys, "count", "fib", "8")
    assert code == 0 and out.strip() == "20"
    _, out, _ = call(capsys, "count", "fib", "6", "--json")
    assert json.loads(out) == {"n": 6, "count": 7, "method": "enumeration"}


def test_verify(capsys):
    code, out, _ = call(capsys, "verify", "--word", "abaa", "--gamma", "3,4", "--json")
    assert code == 1
    assert json.loads(out) == {"attractor": False, "witness": [2, 2]}
    code, out, _ = call(capsys, "verify", "--word", "abaa", "--gamma", "3,4")
    assert code == 1 and "[2,2]" in out
    code, out, _ = call(capsys, "verify", "--word", "fib:7", "--gamma", "8,13", "--naive")
    assert code == 0 and out.strip() == "attractor"


def test_verify_word_from_file(tmp_path, capsys):
    path = tmp_path / "w.txt"
    path.write_text("abaa\n")
    code, _, _ = call(capsys, "verify", "--word", str(path), "--gamma", "2,3")
    assert code == 0


def test_usage_errors(capsys):
    code, _, err = call(capsys, "verify", "--word", "abaa", "--gamma", "3,x")
    assert code == 2 and "comma-separated" in err
    code, _, err = call(capsys, "verify", "--word", "abca", "--gamma", "1")
    assert code == 2
    code, _, _ = call(capsys, "gen", "fib", "99")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_gen(capsys):
    assert call(capsys, "gen", "fib", "5")[1].strip() == "abaababa"
    assert call(capsys, "gen", "sing", "5")[1].strip() == "babaabab"
    assert call(capsys, "gen", "pd", "3")[1].strip() == "abaaabab"
    out = call(capsys, "gen", "fib", "5", "--factorization")[1]
    assert json.loads(out) == {"n": 5, "factors": [0, 1, 2, 3, 0], "spans": [[1, 1], [2, 2], [3, 4], [5, 7], [8, 8]]}


def test_mus(capsys):
    _, out, _ = call(capsys, "mus", "--word", "fib:7", "--json")
    assert json.loads(out)["mus"][1] == {"span": [13, 20], "substring": "babaabab"}
    _, out, _ = call(capsys, "mus", "--word", "ab")
    assert out.splitlines() == ["[1,1] a", "[2,2] b"]


def test_enumerate_text_and_json_agree(capsys):
    _, text, _ = call(capsys, "enumerate", "--word", "pd:2", "--prune")
    _, js, _ = call(capsys, "enumerate", "--word", "pd:2", "--json")
    rows = [tuple(map(int, line.split(","))) for line in text.splitlines()[1:]]
    assert AttractorFamily.from_json(js) == AttractorFamily(2, tuple(rows))
    _, js, _ = call(capsys, "enumerate", "--word", "aaa", "--k", "2", "--json")
    assert json.loads(js) == {"k": 2, "attractors": [[1, 2], [1, 3], [2, 3]]}


def test_crosscheck(capsys):
    code, out, _ = call(capsys, "crosscheck", "fib", "7", "8", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and [r["status"] for r in data["results"]] == ["match", "match"]
    code, out, _ = call(capsys, "crosscheck", "pd", "2", "4")
    assert code == 0 and "all match" in out


def test_lrl_and_tree(capsys):
    _, out, _ = call(capsys, "lrl", "6", "--json")
    assert json.loads(out) == {"k": 6, "L": [21, 22, 24, 25], "R": [29, 30, 32, 33], "Lp": [21, 22]}
    _, out, _ = call(capsys, "lrl", "6", "--from-parse", "9", "--json")
    assert json.loads(out)["L"] == [21, 22, 24, 25]
    _, out, _ = call(capsys, "tree", "4")
    assert json.loads(out)["tree"]["label"] == "F_4"


def test_fuzz(capsys):
    code, out, _ = call(capsys, "fuzz", "--trials", "50", "--seed", "3", "--json")
    assert code == 0 and json.loads(out)["ok"]


def _rows(text):
    return text.splitlines()[2:]


def test_plot_fib7(capsys):
    code, out, _ = call(capsys, "plot", "fib", "7")
    assert code == 0
    rows = _rows(out)
    assert len(rows) == 12
    columns = {i + 1 for row in rows for i, ch in enumerate(row) if ch == "o"}
    assert columns == {8, 9, 11, 12, 13, 15, 18, 20}
    assert [tuple(i + 1 for i, ch in enumerate(r) if ch == "o") for r in rows] == ATT_F7


def test_plot_pd2_and_fib8():
    rows = _rows(plot(plot_spec("pd", 2)))
    assert rows == [".oo.", ".o.o"]
    assert len(_rows(plot(plot_spec("fib", 8)))) == 20


def test_plot_svg(tmp_path, capsys):
    path = tmp_path / "f8.svg"
    assert call(capsys, "plot", "fib", "8", "--svg", "-o", str(path))[0] == 0
    root = ET.fromstring(path.read_text())
    groups = [g for g in root.iter("{http://www.w3.org/2000/svg}g")]
    assert len(groups) == 20
    assert groups[0].get("data-positions") == "13,21"
    assert all(len(list(g)) == 2 for g in groups)


def test_plot_too_wide_hints_svg(capsys):
    code, _, err = call(capsys, "plot", "fib", "12")
    assert code == 2 and "--svg" in err
