import json

import pytest

from trinv.cli import fixture_path, main
from trinv.errors import EvenCharacteristic, ParseError, SingularGenerator
from trinv.invariants import construct_A_invariants, construct_B_sigma_invariants, hilbert_falsify
from trinv.group import example_group
from trinv.parsing import (
    dump_group_document, group_document, load_group_document, parse_group_file, parse_poly,
)
from trinv.poly import Polynomial, render

from helpers import random_poly

EX3 = str(fixture_path("example_p3.json"))
EX5 = str(fixture_path("example_p5.json"))
AP3 = str(fixture_path("a_p3.json"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def record(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "record")
    assert code == 0, err
    return json.loads(out)


def test_parse_group_file_fixtures():
    assert parse_group_file(EX3).order == 18
    assert parse_group_file(EX5).order == 50


def write(tmp_path, doc):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(doc) if isinstance(doc, dict) else doc)
    return path


def test_parse_group_file_errors(tmp_path):
    with pytest.raises(EvenCharacteristic):
        parse_group_file(write(tmp_path, group_document(2, [[[1, 1, 0], [0, 1, 0], [0, 0, 1]]])))
    with pytest.raises(SingularGenerator):
        parse_group_file(write(tmp_path, group_document(3, [[[1, 1, 0], [1, 1, 0], [0, 0, 1]]])))
    with pytest.raises(ParseError):
        parse_group_file(write(tmp_path, "{not json"))
    with pytest.raises(ParseError):
        parse_group_file(write(tmp_path, {"schema": 2, "p": 3, "generators": []}))
    with pytest.raises(ParseError):
        parse_group_file(write(tmp_path, {"schema": 1, "p": 3, "generators": [[[1, 0], [0, 1]]]}))
    with pytest.raises(ParseError):
        parse_group_file(write(tmp_path, {"schema": 1, "p": 3, "generators": [[[1, 0, 0], [0, 1.5, 0], [0, 0, 1]]]}))


def test_dump_roundtrip():
    doc = group_document(5, [[[1, 1, 0], [0, -1, 0], [0, 0, 1]]], "x")
    assert json.loads(dump_group_document(doc)) == doc
    assert load_group_document(json.loads(dump_group_document(doc))).order == 2


def test_parse_poly_examples():
    assert parse_poly("z", 3) == Polynomial.var("z", 3)
    assert render(parse_poly("y*(0*z−y)+2*x*z", 3)) == "2*x*z + 2*y^2"
    assert render(parse_poly("x^3 − x*y^2", 3)) == "x^3 + 2*x*y^2"
    assert parse_poly("-(x + 1)^2", 5) == -(Polynomial.var("x", 5) + 1) ** 2
    assert parse_poly("2^3*x", 5) == 3 * Polynomial.var("x", 5)


@pytest.mark.parametrize("bad", ["2x", "x y", "x^y", "x^-1", "(x", "", "x + ", "w", "x**2", "1.5*x"])
def test_parse_poly_errors(bad):
    with pytest.raises(ParseError):
        parse_poly(bad, 3)


def test_render_roundtrip(rng):
    for _ in range(200):
        p = rng.choice([3, 5, 7])
        f = random_poly(rng, p, rng.randrange(6), homogeneous=False)
        assert parse_poly(render(f), p) == f
    for f in construct_A_invariants(5, 2, [1, 3]) + construct_B_sigma_invariants(5, 1, 4, [2]):
        assert parse_poly(render(f), 5) == f


def test_cli_order_and_classify(capsys):
    assert record(capsys, "order", "--group", EX3)["order"] == 18
    rows = record(capsys, "classify", "--example", "3")["elements"]
    assert len(rows) == 18
    assert sum(r["class"] == "Transvection" for r in rows) == 2


def test_cli_verdict(capsys):
    rec = record(capsys, "verdict", "--group", EX3)
    assert rec["outcome"] == "NonPolynomial" and rec["rule"] == "transvections_not_generating"
    rec = record(capsys, "verdict", "--group", EX3, "--cross-check")
    assert rec["falsifier"]["verdict"] == "non-polynomial (certified)" and rec["cross_check_agrees"]


def test_cli_certify(capsys):
    f1, f2, f3 = construct_A_invariants(3, 0, [0, 1])
    polys = ",".join(render(f) for f in (f1, f2, f3))
    rec = record(capsys, "certify", "--group", AP3, "--polys", polys, "--nmax", "6")
    assert rec["status"] == "certified" and rec["degrees"] == [1, 2, 3]
    assert rec["group_order"] == 6 and rec["degree_product_ok"]
    code, out, _ = run(capsys, "certify", "--group", AP3, "--polys", polys)
    assert code == 0 and "certified" in out


def test_cli_certify_unknown_exits_zero(capsys):
    rec = record(capsys, "certify", "--group", AP3, "--polys", "z, z^2, z^3")
    assert rec["status"] == "unknown" and rec["missing"] == ["x", "y"]


def test_cli_hilbert_invariants_norm_falsify(capsys):
    assert record(capsys, "hilbert", "--example", "3", "--max-degree", "0")["dims"] == [1]
    assert record(capsys, "hilbert", "--group", AP3, "--max-degree", "4")["dims"] == [1, 1, 2, 3, 4]
    rec = record(capsys, "invariants", "--example", "3", "--degree", "1")
    assert rec["basis"] == ["z"]
    rec = record(capsys, "norm", "--group", AP3, "--poly", "x")
    assert rec["stabilizer_order"] == 2 and rec["degree"] == 3
    rec = record(capsys, "falsify", "--example", "3", "--max-degree", "12")
    assert all(c["first_mismatch"] is not None for c in rec["candidates"])


def test_record_matches_report_values(capsys):
    rec = record(capsys, "falsify", "--example", "3")
    rep = hilbert_falsify(example_group(3), 12)
    assert rec["hilbert"] == list(rep.hf.dims)
    assert {tuple(c["degrees"]): c["first_mismatch"] for c in rec["candidates"]} == rep.candidates


def test_cli_errors_exit_nonzero(capsys, tmp_path):
    code, _, err = run(capsys, "order", "--example", "2")
    assert code == 1 and "characteristic 2" in err
    code, _, err = run(capsys, "order", "--group", str(tmp_path / "missing.json"))
    assert code == 1
    code, _, err = run(capsys, "certify", "--example", "3", "--polys", "x,y,z")
    assert code == 1 and "not invariant" in err
    code, _, err = run(capsys, "order")
    assert code == 1


def test_cli_example_command(capsys, tmp_path):
    code, out, _ = run(capsys, "example", "--p", "5")
    assert code == 0
    path = tmp_path / "ex.json"
    path.write_text(out)
    assert parse_group_file(path).order == 50


def test_cli_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("TRINV_CLOSURE_CAP", "5")
    code, _, err = run(capsys, "order", "--group", EX3)
    assert code == 1 and "exceeded" in err
