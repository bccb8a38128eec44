from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from freevl import ParseError, canonicalize, free_boolean_algebra, parse, parse_formal_sum, print_element, print_sum
from freevl.lattice import FormalSum
from freevl.parse import Bottom, Gen, Join, Meet, Not, SumAst, Term, Top, parse_ba_element, parse_element

F = Fraction


def test_element_grammar(ba2):
    algebra, (g1, g2) = ba2
    assert parse("g1 & !g2", algebra, "element") == Meet(Gen("g1"), Not(Gen("g2")))
    assert parse_ba_element("g1 & !g2", algebra) == g1 & ~g2
    assert parse_element("g1 | g2 & g1") == Join(Gen("g1"), Meet(Gen("g2"), Gen("g1")))
    assert parse_element("!g1 & g2") == Meet(Not(Gen("g1")), Gen("g2"))
    assert parse_element(" ( 0 |1 ) ") == Join(Bottom(), Top())
    assert parse_element("a | b | c") == Join(Join(Gen("a"), Gen("b")), Gen("c"))


def test_merge_generator_sum(ba2):
    algebra, (g1, g2) = ba2
    ast = parse("1*(g1|g2) - 1*g1 - 1*g2", algebra)
    assert len(ast.terms) == 3
    e = parse_formal_sum("1*(g1|g2) - 1*g1 - 1*g2", algebra)
    expected = FormalSum.of((1, g1 | g2), (-1, g1), (-1, g2))
    assert e == expected
    assert canonicalize(e) == canonicalize(expected)


def test_rational_coefficients(ba2):
    algebra, (g1, _) = ba2
    assert parse("-3/4*g1 + 2*1", algebra) == SumAst((Term(F(-3, 4), Gen("g1")), Term(F(2), Top())))
    assert parse_formal_sum("5*0", algebra) == FormalSum(algebra)
    assert parse("g1", algebra) == SumAst((Term(F(1), Gen("g1")),))


@pytest.mark.parametrize(
    "text, reason, position",
    [
        ("g3", "unknown generator", 0),
        ("g1 + g9", "unknown generator", 5),
        ("1/0*g1", "zero denominator", 2),
        ("1/*g1", "denominator", 1),
        ("1/2 g1", "followed by '*'", 4),
        ("2 g1", "must be 0 or 1", 0),
        ("(g1 | g2", "missing ')'", 0),
        ("g1)", "unexpected ')'", 2),
        ("2", "must be 0 or 1", 0),
        ("g1 $ g2", "unexpected character", 3),
        ("g1 +", "expected an element", 4),
    ],
)
def test_parse_errors(ba2, text, reason, position):
    with pytest.raises(ParseError) as info:
        parse(text, ba2[0])
    assert reason in info.value.reason
    assert info.value.position == position


def elem_asts():
    leaves = st.sampled_from([Gen("g1"), Gen("g2"), Gen("a3"), Bottom(), Top()])
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            st.builds(Not, inner), st.builds(Meet, inner, inner), st.builds(Join, inner, inner)
        ),
        max_leaves=8,
    )


sum_asts = st.builds(
    lambda terms: SumAst(tuple(terms)),
    st.lists(st.builds(Term, st.fractions(min_value=-9, max_value=9, max_denominator=7), elem_asts()),
             min_size=1, max_size=4),
)


@given(elem_asts())
def test_element_round_trip(ast):
    algebra, _ = free_boolean_algebra(2)
    assert parse_element(print_element(ast), algebra) == ast


@given(sum_asts)
def test_sum_round_trip(ast):
    algebra, _ = free_boolean_algebra(2)
    assert parse(print_sum(ast), algebra) == ast
