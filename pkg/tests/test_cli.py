import json

import pytest
from hypothesis import given, strategies as st

from willems.cli import main
from willems.cli.parse import parse_element, parse_poly, parse_signal
from willems.cli.problem import bounds_from, parse_problem
from willems.core import ModuleElement, Poly, format_element, format_poly
from willems.errors import ParseError
from util import I, P


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if "--out" not in argv else out)


def test_parse_circle():
    assert parse_poly("D1^2 + D2^2 - 1") == Poly(2, {(2, 0): 1, (0, 2): 1, (0, 0): -1})


def test_parse_pi_generator():
    p = parse_poly("(D1^2 - D2^2) + pi*(D1*D2 - 1)", transcendentals=("pi",))
    assert not p.is_rational() and p.n == 2


def test_parse_module_element():
    v = parse_element("[D1^2, D1*D2]")
    assert isinstance(v, ModuleElement) and v.q == 2


def test_undeclared_name_is_an_error():
    with pytest.raises(ParseError) as err:
        parse_poly("D1 + pi")
    assert err.value.column == 6


def test_syntax_error_position():
    with pytest.raises(ParseError) as err:
        parse_problem("n: 2\nD1^2 + * D2\n")
    assert (err.value.line, err.value.column) == (2, 8)


def test_problem_header_and_lists():
    spec = parse_problem("transcendentals: pi\nspace: torus-fin\n(D1^2, D1*D2 + pi)\n")
    assert spec.n == 2 and spec.q == 1 and len(spec.generators) == 2
    assert spec.options["space"] == "torus-fin"


def test_bounds_from_header():
    b = bounds_from({"height": "5", "denominator": "3", "degree-bound": "2"})
    assert (b.height, b.denominator, b.degree) == (5, 3, 2)


def test_signal_literal():
    f = parse_signal("e(1,2)*[-2, 1] + e(0,0)*[x1, i*x2]", 2, 2)
    assert f.support() == [(0, 0), (1, 2)]


def test_closure_command_circle(capsys):
    code, rep = run(capsys, "closure", "-e", "D1^2 + D2^2 - 1", "--space", "protorus-fin")
    assert code == 0 and rep["schema"] == "willems-report/1"
    assert rep["result"]["closure"] == ["D1^2 + D2^2 - 1"] and rep["conditional"] is False


def test_controllable_command(capsys):
    code, rep = run(capsys, "controllable", "-e", "[D1^2, D1*D2]", "--space", "protorus-poly")
    assert code == 0 and rep["result"]["verdict"] == "NotControllable"
    assert rep["result"]["witness_prime"] == ["D1"] and rep["result"]["witness_point"] is not None


def test_points_command_cone(capsys):
    code, rep = run(capsys, "points", "-e", "D1^2 + D2^2 - D3^2", "--ring", "Z", "--height", "5")
    assert code == 0 and len(rep["result"]["points"]) == 57
    assert ["3", "4", "5"] in rep["result"]["points"]


def test_points_with_density(capsys):
    code, rep = run(capsys, "points", "-e", "D1^2 + D2^2 - 1", "--density", "--degree-bound", "2")
    assert code == 0 and rep["result"]["density"]["kind"] == "Dense"


def test_decompose_and_groebner(capsys):
    code, rep = run(capsys, "decompose", "-e", "D1^2, D1*D2")
    assert code == 0 and len(rep["result"]["components"]) == 2
    code, rep = run(capsys, "groebner", "-e", "D1^2 + D2^2 - 1; D1 - D2", "--order", "lex")
    assert sorted(rep["result"]["groebner_basis"]) == ["D1 - D2", "D2^2 - 1/2"]


def test_eval_command(capsys):
    code, rep = run(capsys, "eval", "-e", "[D1^2, D1*D2]", "--signal", "e(1,2)*[-2, 1]", "--at", "1,2")
    assert code == 0 and rep["result"]["in_behavior"] is True
    assert rep["result"]["values"] == [["1", "2"]]


def test_conditional_exit_code(capsys):
    code, rep = run(capsys, "closure", "-e", "D2^2 - D1^3 - 1", "--space", "protorus-fin", "--strict",
                    "--height", "6", "--denominator", "4")
    assert code == 1 and rep["status"] == "conditional"


def test_input_error_exit_code(capsys):
    code, rep = run(capsys, "groebner", "-e", "D1^2 +")
    assert code == 2 and rep["error"]["kind"] == "SyntaxError"
    code, rep = run(capsys, "groebner", "-e", "[D1, D2]\n[D1]")
    assert code == 2 and rep["error"]["kind"] == "DimensionMismatch"


def test_missing_file(capsys):
    code, rep = run(capsys, "groebner", "/nonexistent/problem.txt")
    assert code == 2


def test_computation_error_exit_code(capsys):
    text = "transcendentals: pi\n(D1^2 - D2^2) + pi*(D1^2 + D3^3) + pi^2*(D1*D2*D3 - 1)"
    code, rep = run(capsys, "closure", "-e", text, "--space", "torus-fin", "--depth-cap", "0")
    assert code == 3 and rep["status"] == "error" and rep["error"]["kind"] == "NonTermination"


def test_hints_are_used_and_verified(capsys, tmp_path):
    hints = tmp_path / "h.json"
    hints.write_text(json.dumps({"points": ["(0,1)", "(5,5)"]}))
    code, rep = run(capsys, "points", "-e", "D1^2 + D2^2 - 1", "--density", "--hints", str(hints),
                    "--height", "2", "--denominator", "1", "--degree-bound", "2")
    assert code in (0, 1) and ["5", "5"] not in rep["result"]["density"]["points"]


def test_pretty_output(capsys):
    code, text = run(capsys, "closure", "-e", "D1^2, D1*D2", "--out", "pretty")
    assert code == 0 and text.startswith("closure: ok")


def test_output_file_matches_stdout(capsys, tmp_path):
    out = tmp_path / "r.json"
    main(["closure", "-e", "D1^2 + D2^2 - 1", "--output", str(out)])
    _, rep = run(capsys, "closure", "-e", "D1^2 + D2^2 - 1")
    assert json.loads(out.read_text()) == rep


mono = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))
coef = st.fractions(-9, 9, max_denominator=7)
polys = st.dictionaries(mono, coef, max_size=5).map(lambda t: Poly(3, t))


@given(polys)
def test_poly_round_trip(p):
    assert parse_poly(format_poly(p), 3) == p


@given(st.lists(polys, min_size=2, max_size=3))
def test_element_round_trip(ps):
    v = ModuleElement.from_polys(ps, 3)
    assert parse_element(format_element(v), 3) == v
