import random

import pytest
from hypothesis import given, settings

from qmin import FunctionSpec, minimize
from qmin.core import Cube
from qmin.errors import ParseError
from qmin.io import (
    display_order,
    format_result,
    parse_minterm_list,
    parse_pla,
    parse_sop_expression,
    parse_truth_table,
    write_pla,
)
from qmin.verify import check_equivalence

from conftest import EXAMPLE1_ON, random_spec, specs


def test_minterm_list(example1):
    parsed = parse_minterm_list(4, "0 5 6 7 9 10 13 14 15")
    assert parsed.spec == example1
    assert parsed.source_format == "minterm-list"
    assert parse_minterm_list(2, "", "").spec == FunctionSpec(2, ())
    spec = parse_minterm_list(3, "1 1 2", "5").spec
    assert spec.on_set == (1, 2) and spec.dc_set == (5,)


@pytest.mark.parametrize(
    "n, on, dc",
    [(3, "8", None), (3, "1 2", "2"), (3, "1 a", None), (3, "-1", None), (0, "", None), (25, "", None)],
)
def test_minterm_list_errors(n, on, dc):
    with pytest.raises(ParseError):
        parse_minterm_list(n, on, dc)


def test_truth_table():
    spec = parse_truth_table(["0 0 1", "0 1 1", "1 X 0"]).spec
    assert spec.num_vars == 2
    assert spec.on_set == (0, 1) and spec.dc_set == ()
    assert minimize(parse_truth_table(["X 1"]).spec).constant == 1
    partial = parse_truth_table(["01 1"]).spec
    assert partial.on_set == (1,) and partial.dc_set == (0, 2, 3)


@pytest.mark.parametrize(
    "rows",
    [["0 1", "0 0"], ["0 0 1", "1 1"], ["0 2 1"], ["0 1 X"], [], ["   "]],
)
def test_truth_table_errors(rows):
    with pytest.raises(ParseError):
        parse_truth_table(rows)


def test_truth_table_agrees_with_minterm_list():
    rng = random.Random(6)
    for _ in range(50):
        n = rng.randint(1, 5)
        on = sorted(rng.sample(range(1 << n), rng.randint(0, 1 << n)))
        rows = [f"{format(m, f'0{n}b')} {int(m in on)}" for m in range(1 << n)]
        assert parse_truth_table(rows).spec == parse_minterm_list(n, " ".join(map(str, on))).spec


def test_sop_expression():
    parsed = parse_sop_expression("f = AB' + C")
    assert parsed.spec.var_names == ("A", "B", "C")
    assert parsed.spec.on_set == (1, 3, 4, 5, 7)
    one = parse_sop_expression("A").spec
    assert one.num_vars == 1 and one.on_set == (1,)
    assert minimize(parse_sop_expression("A + A'").spec).constant == 1
    # first appearance is most significant
    assert parse_sop_expression("C'B").spec.var_names == ("C", "B")
    assert parse_sop_expression("AA'").spec.on_set == ()


@pytest.mark.parametrize("text", ["", "f =", "A +", "A''", "'A", "A*B", "A + (B)", "1"])
def test_sop_expression_errors(text):
    with pytest.raises(ParseError):
        parse_sop_expression(text)


def _eval_products(text, names, m):
    """Direct evaluator over the expression text, independent of the parser."""
    n = len(names)
    env = {v: bool(m >> (n - 1 - i) & 1) for i, v in enumerate(names)}
    for term in text.split("+"):
        term = term.strip()
        ok = True
        i = 0
        while i < len(term):
            v = term[i]
            neg = i + 1 < len(term) and term[i + 1] == "'"
            ok &= env[v] != neg
            i += 2 if neg else 1
        if ok:
            return True
    return False


def test_expression_expansion_matches_evaluator():
    rng = random.Random(12)
    letters = "PQRSTU"
    for _ in range(200):
        k = rng.randint(1, 6)
        terms = []
        for _ in range(rng.randint(1, 5)):
            vs = rng.sample(letters[:k], rng.randint(1, k))
            terms.append("".join(v + ("'" if rng.random() < 0.5 else "") for v in vs))
        text = " + ".join(terms)
        spec = parse_sop_expression(text).spec
        for m in range(1 << spec.num_vars):
            assert (m in spec.on_set) == _eval_products(text, spec.var_names, m)


def test_pla_parse():
    assert parse_pla(".i 2\n.o 1\n11 1\n.e").spec.on_set == (3,)
    spec = parse_pla(".i 2\n.o 1\n0- -\n11 1\n.e").spec
    assert spec.on_set == (3,) and spec.dc_set == (0, 1)
    spec = parse_pla(".i 3\n.o 1\n.ilb x y z\n.type fd\n.p 1\n1-1 1\n.e\n").spec
    assert spec.var_names == ("x", "y", "z") and spec.on_set == (5, 7)
    # on wins where a dc cube overlaps
    assert parse_pla(".i 1\n.o 1\n- -\n1 1\n").spec.dc_set == (0,)


@pytest.mark.parametrize(
    "text",
    [
        "11 1\n.e",
        ".i 2\n.o 2\n11 1\n.e",
        ".i 2\n.o 1\n1x 1\n.e",
        ".i 2\n.o 1\n111 1\n.e",
        ".i 2\n.o 1\n11 0\n.e",
        ".i 2\n.o 1\n.foo\n",
        ".o 1\n",
    ],
)
def test_pla_errors(text):
    with pytest.raises(ParseError):
        parse_pla(text)


def test_write_pla_example1(example1):
    text = write_pla(minimize(example1))
    lines = text.splitlines()
    assert lines[0] == ".i 4" and lines[1] == ".o 1" and lines[-1] == ".e"
    cubes = [line for line in lines if not line.startswith(".")]
    assert len(cubes) == 5
    assert "-1-1 1" in cubes


@settings(max_examples=100, deadline=None)
@given(specs(max_vars=5))
def test_pla_roundtrip(spec):
    back = parse_pla(write_pla(minimize(spec))).spec
    assert back.num_vars == spec.num_vars
    covered = set(back.on_set)
    assert set(spec.on_set) <= covered
    assert not covered & set(spec.off_set)


def test_constant_pla():
    zero = write_pla(minimize(FunctionSpec(2, ())))
    assert parse_pla(zero).spec.on_set == ()
    one = write_pla(minimize(FunctionSpec(2, (0, 1, 2, 3))))
    assert "-- 1" in one


def test_format_expression(example1, cyclic):
    assert format_result(minimize(example1)) == "f(A,B,C,D) = A'B'C'D' + AC'D + ACD' + BD + BC\n"
    assert format_result(minimize(FunctionSpec(3, ()))) == "f = 0\n"
    assert format_result(minimize(FunctionSpec(1, (0, 1)))) == "f = 1\n"
    text = format_result(minimize(cyclic), all_solutions=True)
    assert text.splitlines() == [
        "F = A'B' + BC' + AC",
        "F = A'C' + B'C + AB",
        "f(A,B,C) = A'B' + BC' + AC",
    ]


def test_format_table(example1):
    text = format_result(minimize(example1), "table")
    assert "5,7-13,15" in text
    assert "01x1" in text
    assert "minimal expression is unique" in text
    assert text.rstrip().endswith("BD + BC")
    decimal = format_result(minimize(example1), "table", engine="decimal", bits=6)
    assert "5,7-13,15 (2,8)" in decimal
    assert "  x1x1" in decimal


def test_display_order():
    cubes = [Cube.from_string(s) for s in ("-1-1", "0000", "1-10", "-11-", "1-01")]
    assert [str(c) for c in display_order(cubes)] == ["0000", "1-01", "1-10", "-1-1", "-11-"]
