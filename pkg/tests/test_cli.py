import json

import pytest

from pentagram.cli import main
from pentagram.errors import ParseError
from pentagram.polygon import iterate, random_polygon
from pentagram.serialize import dumps_polygon, loads_polygon, polygon_to_dict


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("closed", [False, True])
def test_polygon_round_trip(closed):
    A = random_polygon(7, 3, closed=closed)
    B = loads_polygon(dumps_polygon(A))
    assert B.vertices == A.vertices and B.monodromy == A.monodromy and B.offset == A.offset
    assert dumps_polygon(B) == dumps_polygon(A)


def test_parse_errors_are_positional():
    data = polygon_to_dict(random_polygon(5, 1))
    data["vertices"][2][1] = "3/0"
    with pytest.raises(ParseError, match=r"vertices\[2\]\[1\].*zero denominator"):
        loads_polygon(json.dumps(data))
    with pytest.raises(ParseError, match="line 1"):
        loads_polygon("{")
    data = polygon_to_dict(random_polygon(5, 1))
    data["n"] = 6
    with pytest.raises(ParseError, match=r"\$\.n"):
        loads_polygon(json.dumps(data))


def test_fpoly_prints_canonical_text(capsys):
    assert run(capsys, "fpoly", "--j", "0", "--k", "1") == (0, "1 + y0\n", "")
    for route in ("recurrence", "ideals", "asm"):
        code, out, _ = run(capsys, "fpoly", "--k", "2", "--route", route)
        assert code == 0 and out.count("+") == 7


def test_gen_map_composes(tmp_path, capsys):
    src = tmp_path / "a.json"
    assert main(["gen", "--n", "6", "--seed", "5", "--out", str(src)]) == 0
    one, two, direct = tmp_path / "b.json", tmp_path / "c.json", tmp_path / "d.json"
    assert main(["map", str(src), "--out", str(one)]) == 0
    with open(one) as fh:
        (tmp_path / "b_poly.json").write_text(json.dumps(json.load(fh)["polygon"]))
    assert main(["map", str(tmp_path / "b_poly.json"), "--out", str(two)]) == 0
    assert main(["map", str(src), "--k", "2", "--out", str(direct)]) == 0
    assert json.loads(two.read_text()) == {**json.loads(direct.read_text()), "k": 1}
    A = loads_polygon(src.read_text())
    assert json.loads(direct.read_text())["polygon"] == polygon_to_dict(iterate(A, 2))


def test_map_text_table(tmp_path, capsys):
    src = tmp_path / "a.json"
    src.write_text(dumps_polygon(random_polygon(5, 2)))
    code, out, _ = run(capsys, "map", str(src), "--format", "text")
    assert code == 0 and out.count("\n") > 5 and "y_j" in out


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    data = polygon_to_dict(random_polygon(5, 1))
    data["monodromy"][0][0] = "3/0"
    bad.write_text(json.dumps(data))
    code, _, err = run(capsys, "map", str(bad))
    assert code == 2 and "zero denominator" in err
    assert run(capsys, "map", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "verify-tk", "--k", "0")[0] == 2
    assert run(capsys, "fpoly", "--k", "-3")[0] == 2


@pytest.mark.parametrize("argv", [
    ["verify-tk", "--n", "6", "--k", "2", "--trials", "2"],
    ["verify-tkx", "--n", "6", "--k", "2", "--trials", "2"],
    ["verify-fpoly", "--n", "6", "--k", "2"],
    ["verify-collapse", "--n", "3", "4", "--trials", "2"],
    ["verify-collapse", "--mode", "twisted", "--n", "3", "--trials", "2"],
    ["verify-cluster", "--n", "6", "--trials", "2"],
])
def test_verify_commands_pass_and_are_deterministic(argv, capsys):
    code, first, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    report = json.loads(first)
    assert report["summary"]["fail"] == 0 and report["summary"]["pass"] > 0
    assert "timing_ms" not in report
    assert run(capsys, *argv, "--format", "json")[1] == first


def test_timing_flag(capsys):
    code, out, _ = run(capsys, "verify-cluster", "--n", "5", "--trials", "1", "--format", "json", "--timing")
    assert code == 0 and isinstance(json.loads(out)["timing_ms"], int)
