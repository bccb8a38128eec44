from fractions import Fraction
from math import ceil

import pytest
from hypothesis import given, strategies as st

from freevl import (
    BooleanAlgebra,
    DomainError,
    FormalSum,
    LatticeElement,
    MembershipError,
    SizeError,
    canonicalize,
    common_disjoint_representation,
    cone_certificate,
    cone_contains_atoms,
    cone_contains_quantifier,
    embed_phi,
    equivalent,
    indicator_sum,
    ppp_stabilization_index,
    ppp_sup,
)
from freevl.lattice import componentwise

from conftest import algebra_with, lattice_elements_of, rationals, sums_of

F = Fraction


@pytest.fixture
def alg4():
    return BooleanAlgebra(4)


def test_formal_sum_prunes_bottom_and_zero(alg4):
    a = alg4.element([0])
    e = FormalSum(alg4, [(alg4.bottom, 5), (a, 2), (a, -2)])
    assert len(e) == 0 and e == FormalSum(alg4)


def test_formal_sum_algebra(alg4):
    a, b = alg4.element([0]), alg4.element([1, 2])
    e = FormalSum.of((2, a), (-3, b))
    assert e + e == 2 * e
    assert e - e == FormalSum(alg4)
    assert (-e).terms == {a: -2, b: 3}


def test_cone_generator_examples(alg4):
    b, d = alg4.element([0]), alg4.element([2, 3])
    merge = FormalSum.of((1, b | d), (-1, b), (-1, d))
    for form in ("simplified", "original"):
        assert cone_contains_quantifier(merge, form)
        assert cone_contains_quantifier(-merge, form)
    for a in alg4.elements():
        assert cone_contains_quantifier(indicator_sum(a))
        if not a.is_zero:
            assert not cone_contains_quantifier(-indicator_sum(a))


def test_atom_oracle_examples(alg4):
    a = alg4.element([0, 1])
    assert cone_contains_atoms(FormalSum(alg4))
    assert not cone_contains_atoms(indicator_sum(a) - indicator_sum(alg4.top))
    assert cone_contains_atoms(FormalSum.of((2, a), (3, ~a)))


def test_quantifier_cap():
    big = BooleanAlgebra(9)
    with pytest.raises(SizeError, match="cone_contains_atoms"):
        cone_contains_quantifier(indicator_sum(big.top))
    assert cone_contains_quantifier(indicator_sum(big.top), max_atoms=9)


@given(algebra_with(sums_of, lo=1, hi=6))
def test_oracle_agreement(data):
    _, e = data
    atoms = cone_contains_atoms(e)
    assert cone_contains_quantifier(e) == atoms
    assert cone_contains_quantifier(e, "original") == atoms


@given(algebra_with(sums_of, count=2, lo=1, hi=6), st.fractions(min_value=0, max_value=7, max_denominator=5))
def test_cone_axioms(data, lam):
    _, e, f = data
    if cone_contains_atoms(e) and cone_contains_atoms(f):
        assert cone_contains_atoms(e + f)
        assert cone_contains_atoms(lam * e)
        assert cone_contains_quantifier(e + f)


def test_certificate_merge_example(alg4):
    b, d = alg4.element([0]), alg4.element([1])
    e = FormalSum.of((1, b | d), (-1, b), (-1, d))
    cert = cone_certificate(e)
    assert [(g.tag, g.weight) for g in cert.generators] == [("merge", 1)]
    assert set(cert.generators[0].parts) == {b, d}
    assert all(v == 0 for v in cert.beta.values())
    assert cert.verify()
    split = cone_certificate(-e)
    assert [(g.tag, g.weight) for g in split.generators] == [("split", 1)]


def test_certificate_single(alg4):
    a = alg4.element([1, 3])
    cert = cone_certificate(indicator_sum(a))
    assert [(g.tag, g.parts, g.weight) for g in cert.generators] == [("single", (a,), 1)]


def test_certificate_rejects_with_witness(alg4):
    a = alg4.element([1, 3])
    with pytest.raises(MembershipError) as info:
        cone_certificate(-indicator_sum(a))
    assert info.value.witness in a.atom_indices and info.value.total == -1


@given(algebra_with(sums_of, lo=1, hi=6))
def test_certificate_soundness(data):
    _, e = data
    if not cone_contains_atoms(e):
        with pytest.raises(MembershipError) as info:
            cone_certificate(e)
        w = info.value.witness
        assert sum((c for a, c in e.items() if w in a.atom_set), F(0)) < 0
        return
    cert = cone_certificate(e)
    assert cert.reconstruct() == e
    assert all(g.weight >= 0 for g in cert.generators)
    assert cert.verify()


def test_equivalence_examples(alg4):
    b, d = alg4.element([0]), alg4.element([2])
    assert equivalent(indicator_sum(b) + indicator_sum(d), indicator_sum(b | d))
    e = FormalSum.of((3, b), (-1, d))
    assert equivalent(e, e)
    assert not equivalent(indicator_sum(b), indicator_sum(d))


def test_canonicalize_examples(ba2):
    algebra, (g1, g2) = ba2
    assert canonicalize(indicator_sum(algebra.top)) == LatticeElement.constant(algebra, 1)
    assert canonicalize(FormalSum(algebra, [(algebra.bottom, 7)])).is_zero
    v = canonicalize(indicator_sum(g1) + indicator_sum(g2))
    by_pattern = {algebra.sign_pattern(i): v.valuation[i] for i in range(4)}
    assert by_pattern == {"++": 2, "+-": 1, "-+": 1, "--": 0}


@given(algebra_with(sums_of, count=2, lo=1, hi=6))
def test_quotient_consistency(data):
    _, e, f = data
    assert equivalent(e, f) == (canonicalize(e) == canonicalize(f))
    # cone membership is invariant under ~: shift e by a null sum
    null = e - canonicalize(e).to_formal_sum()
    assert cone_contains_atoms(null) and cone_contains_atoms(-null)
    assert cone_contains_atoms(f + null) == cone_contains_atoms(f)


def test_common_representation_examples(alg4, ba2):
    b, d = alg4.element([0]), alg4.element([1, 2])
    rep = common_disjoint_representation([indicator_sum(b) + indicator_sum(d)])
    assert set(rep.family) == {b, d} and rep.coefficients == ((1, 1),)
    assert equivalent(rep.row(0), indicator_sum(b | d))
    single = common_disjoint_representation([indicator_sum(b | d)])
    assert list(single.family) == [b | d]

    x, y = alg4.element([3]), alg4.element([0, 1])
    rep = common_disjoint_representation([FormalSum.of((2, x), (-1, y)), FormalSum.of((5, y))])
    assert dict(zip(rep.family, zip(*rep.coefficients))) == {y: (-1, 5), x: (2, 0)}

    algebra, (g1, g2) = ba2
    rep = common_disjoint_representation([indicator_sum(g1), indicator_sum(g2)])
    assert 3 <= len(rep.family) <= 4
    assert all(len(m) == 1 for m in rep.family)
    assert all(c in (0, 1) for row in rep.coefficients for c in row)


@given(algebra_with(sums_of, count=3, lo=1, hi=6))
def test_common_representation_reconstructs(data):
    _, *sums = data
    rep = common_disjoint_representation(sums)
    for r, s in enumerate(sums):
        assert equivalent(rep.row(r), s)
    members = list(rep.family)
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            assert x.disjoint(y)


def test_abs_example(alg4):
    a = alg4.element([0, 3])
    f = canonicalize(FormalSum.of((2, a), (-3, ~a)))
    assert abs(f) == canonicalize(FormalSum.of((2, a), (3, ~a)))
    assert abs(abs(f)) == abs(f)
    assert (embed_phi(a) & embed_phi(~a)).is_zero


@given(algebra_with(lattice_elements_of, count=2, lo=1, hi=6))
def test_vector_lattice_identities(data):
    algebra, f, h = data
    assert abs(f) == f | -f
    assert f + h == (f & h) + (f | h)
    assert abs(f + h) <= abs(f) + abs(h)
    assert abs(f) >= f and abs(f) >= -f
    assert f.positive_part() - f.negative_part() == f
    # agrees with the coefficientwise computation on a common disjoint representation
    fs, hs = f.to_formal_sum(), h.to_formal_sum()
    assert componentwise(min, fs, hs) == f & h
    assert componentwise(max, fs, hs) == f | h
    assert componentwise(abs, fs) == abs(f)


def test_ppp_examples(alg4):
    a1, a2 = alg4.element([0]), alg4.element([1, 2])
    f = canonicalize(FormalSum.of((2, a1), (3, a2)))
    assert ppp_sup(f, embed_phi(a1)) == canonicalize(FormalSum.of((2, a1)))
    assert ppp_sup(f, LatticeElement.zero(alg4)).is_zero
    assert ppp_sup(f, f) == f
    h = canonicalize(FormalSum.of((F(1, 2), a1), (4, alg4.element([3]))))
    support = alg4.element([0, 3])
    assert ppp_sup(embed_phi(alg4.top), h) == embed_phi(support)


def test_ppp_rejects_negative(alg4):
    with pytest.raises(DomainError):
        ppp_sup(-embed_phi(alg4.top), embed_phi(alg4.top))


@given(algebra_with(lambda a: lattice_elements_of(a, positive=True), count=2, lo=1, hi=6))
def test_ppp_least_upper_bound(data):
    algebra, f, h = data
    sup = ppp_sup(f, h)
    n_stab = ppp_stabilization_index(f, h)
    for n in range(1, n_stab + 3):
        assert f & (n * h) <= sup
    assert sup == f & (n_stab * h)
    # brute force supremum over n, pointwise
    brute = [max(min(x, n * y) for n in range(1, n_stab + 3)) for x, y in zip(f.valuation, h.valuation)]
    assert sup.valuation == tuple(brute)


def test_stabilization_index_value(alg4):
    f = LatticeElement(alg4, (7, 0, 1, 2))
    h = LatticeElement(alg4, (0, F(3, 2), 2, 0))
    assert ppp_stabilization_index(f, h) == ceil(F(7) / F(3, 2))


def test_phi_examples(alg4):
    a, b = alg4.element([0]), alg4.element([2, 3])
    assert embed_phi(alg4.bottom).is_zero
    assert embed_phi(alg4.top) == LatticeElement.constant(alg4, 1)
    assert embed_phi(a | b) == embed_phi(a) + embed_phi(b)


@given(algebra_with(lattice_elements_of, lo=1, hi=6))
def test_strong_unit_and_archimedean(data):
    algebra, f = data
    unit = embed_phi(algebra.top)
    n = max(1, ceil(max(abs(v) for v in f.valuation)))
    assert abs(f) <= n * unit
    pos = abs(f)
    # inf (1/n) pos = 0 : for large n every atom value drops below any positive bound
    big = 10**6
    assert all(v / big < F(1, 1000) for v in pos.valuation)


def test_mixed_algebra_errors(alg4):
    other = BooleanAlgebra(3)
    with pytest.raises(DomainError):
        equivalent(indicator_sum(alg4.top), indicator_sum(other.top))
    with pytest.raises(DomainError):
        embed_phi(alg4.top) & embed_phi(other.top)
