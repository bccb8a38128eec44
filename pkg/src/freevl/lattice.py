"""The free vector lattice F(A) over a finite Boolean algebra.

Formal sums live in the free vector space on the elements of ``A``.  The cone
``C`` of "positive" sums is available in two independent forms: the quantifier
definition evaluated over bitmasks (:mod:`freevl.kernels`) and the atom test
(every atom sees a nonnegative coefficient sum).  F(A) is the quotient by
``e ~ f  iff  e - f in C and f - e in C``; its elements are stored canonically
by their atom valuation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Callable, Iterable, Mapping, Sequence

from . import config, kernels
from .boolean import BaElement, BooleanAlgebra, BooleanRing, DisjointFamily, disjoint_refinement, join_all
from .errors import DomainError, MembershipError, PreconditionError, SizeError, ValidationError
from .exact import as_fraction, rank, solve

ZERO = Fraction(0)
ONE = Fraction(1)


class FormalSum:
    """A finitely supported rational combination of Boolean algebra elements.

    Duplicate elements are merged, zero coefficients dropped and the bottom
    element pruned (``alpha * O`` is equivalent to zero for every alpha).
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: BooleanAlgebra, terms: Mapping[BaElement, object] | Iterable = ()):
        self.algebra = algebra
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[BaElement, Fraction] = {}
        for element, coeff in pairs:
            if not isinstance(element, BaElement):
                raise DomainError(f"formal sum term must be an element, got {type(element).__name__}")
            algebra.check_same(element.algebra)
            if element.is_zero:
                continue
            acc[element] = acc.get(element, ZERO) + as_fraction(coeff)
        self._terms = {k: v for k, v in sorted(acc.items(), key=lambda kv: kv[0].sort_key()) if v != 0}

    @classmethod
    def of(cls, *pairs: tuple[object, BaElement]) -> FormalSum:
        """``FormalSum.of((2, a), (-3, b))`` builds ``2*a - 3*b``."""
        if not pairs:
            raise DomainError("FormalSum.of needs at least one term; use FormalSum(algebra) for zero")
        algebra = pairs[0][1].algebra
        return cls(algebra, [(element, coeff) for coeff, element in pairs])

    @property
    def terms(self) -> dict[BaElement, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    @property
    def support(self) -> list[BaElement]:
        return list(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: FormalSum) -> None:
        if not isinstance(other, FormalSum):
            raise DomainError(f"expected a FormalSum, got {type(other).__name__}")
        self.algebra.check_same(other.algebra)

    def __add__(self, other: FormalSum) -> FormalSum:
        self._check(other)
        return FormalSum(self.algebra, list(self.items()) + list(other.items()))

    def __neg__(self) -> FormalSum:
        return FormalSum(self.algebra, [(k, -v) for k, v in self.items()])

    def __sub__(self, other: FormalSum) -> FormalSum:
        return self + (-other)

    def __mul__(self, scalar) -> FormalSum:
        s = as_fraction(scalar)
        return FormalSum(self.algebra, [(k, s * v) for k, v in self.items()])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.algebra, tuple(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "FormalSum(0)"
        return "FormalSum(" + " + ".join(f"{v}*{k!r}" for k, v in self.items()) + ")"


def indicator_sum(element: BaElement) -> FormalSum:
    """The formal sum ``1*a``."""
    return FormalSum(element.algebra, [(element, ONE)])


@dataclass(frozen=True)
class LatticeElement:
    """An element of F(A), stored as its valuation on atoms."""

    algebra: BooleanAlgebra
    valuation: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(as_fraction(v) for v in self.valuation)
        if len(values) != self.algebra.atom_count:
            raise DomainError(f"valuation has {len(values)} entries for {self.algebra.atom_count} atoms")
        object.__setattr__(self, "valuation", values)

    @classmethod
    def zero(cls, algebra: BooleanAlgebra) -> LatticeElement:
        return cls(algebra, (ZERO,) * algebra.atom_count)

    @classmethod
    def constant(cls, algebra: BooleanAlgebra, value) -> LatticeElement:
        return cls(algebra, (as_fraction(value),) * algebra.atom_count)

    def _zip(self, other: LatticeElement, op: Callable) -> LatticeElement:
        if not isinstance(other, LatticeElement):
            raise DomainError(f"expected a LatticeElement, got {type(other).__name__}")
        self.algebra.check_same(other.algebra)
        return LatticeElement(self.algebra, tuple(op(x, y) for x, y in zip(self.valuation, other.valuation)))

    def __add__(self, other: LatticeElement) -> LatticeElement:
        return self._zip(other, lambda x, y: x + y)

    def __sub__(self, other: LatticeElement) -> LatticeElement:
        return self._zip(other, lambda x, y: x - y)

    def __neg__(self) -> LatticeElement:
        return LatticeElement(self.algebra, tuple(-x for x in self.valuation))

    def __mul__(self, scalar) -> LatticeElement:
        s = as_fraction(scalar)
        return LatticeElement(self.algebra, tuple(s * x for x in self.valuation))

    __rmul__ = __mul__

    def meet(self, other: LatticeElement) -> LatticeElement:
        return self._zip(other, min)

    def join(self, other: LatticeElement) -> LatticeElement:
        return self._zip(other, max)

    __and__ = meet
    __or__ = join

    def __abs__(self) -> LatticeElement:
        return LatticeElement(self.algebra, tuple(abs(x) for x in self.valuation))

    def positive_part(self) -> LatticeElement:
        return self.join(LatticeElement.zero(self.algebra))

    def negative_part(self) -> LatticeElement:
        return (-self).positive_part()

    def __le__(self, other: LatticeElement) -> bool:
        self.algebra.check_same(other.algebra)
        return all(x <= y for x, y in zip(self.valuation, other.valuation))

    def __ge__(self, other: LatticeElement) -> bool:
        return other <= self

    def __lt__(self, other: LatticeElement) -> bool:
        return self <= other and self != other

    def __gt__(self, other: LatticeElement) -> bool:
        return other < self

    @property
    def is_positive(self) -> bool:
        return all(x >= 0 for x in self.valuation)

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.valuation)

    def to_formal_sum(self) -> FormalSum:
        """A disjoint representative: each nonzero value times the join of the atoms carrying it."""
        groups: dict[Fraction, int] = {}
        for i, v in enumerate(self.valuation):
            if v != 0:
                groups[v] = groups.get(v, 0) | (1 << i)
        return FormalSum(self.algebra, [(BaElement(self.algebra, m), v) for v, m in groups.items()])


# ---------------------------------------------------------------- cone


def _atom_sums(e: FormalSum) -> list[Fraction]:
    sums = [ZERO] * e.algebra.atom_count
    for element, coeff in e.items():
        for i in element.atom_indices:
            sums[i] += coeff
    return sums


def cone_contains_atoms(e: FormalSum) -> bool:
    """Every atom ``c`` has ``sum(alpha_k for c <= a_k) >= 0``."""
    return all(s >= 0 for s in _atom_sums(e))


def cone_witness(e: FormalSum) -> int | None:
    """The first atom index with a negative coefficient sum, if any."""
    for i, s in enumerate(_atom_sums(e)):
        if s < 0:
            return i
    return None


def cone_contains_quantifier(
    e: FormalSum,
    form: str = "simplified",
    backend: str | None = None,
    max_atoms: int | None = None,
) -> bool:
    """Cone membership straight from the quantifier definition.

    ``form="simplified"``: for all ``a > O`` there is ``b`` in ``(O, a]`` whose
    coefficient sum over terms above ``b`` is nonnegative.
    ``form="original"``: the same with "for all ``c`` in ``(O, b]``" inside.
    Evaluated by exhaustive search over all elements, so the atom count is capped.
    """
    cap = config.QUANTIFIER_MAX_ATOMS if max_atoms is None else max_atoms
    n = e.algebra.atom_count
    if n > cap:
        raise SizeError(
            f"quantifier-form cone check is capped at {cap} atoms (got {n}); use cone_contains_atoms instead"
        )
    masks = [element.mask for element in e.support]
    coeffs = [coeff for _, coeff in e.items()]
    return kernels.quantifier_check(n, masks, coeffs, form=form, backend=backend)


@dataclass(frozen=True)
class ConeGenerator:
    """One of the generating elements of the cone.

    ``single``: ``1*a``.  ``merge``: ``1*(b_1 | ... | b_n) - sum 1*b_i``.
    ``split``: ``sum 1*b_i - 1*(b_1 | ... | b_n)``.  The ``b_i`` are disjoint.
    """

    tag: str
    parts: tuple[BaElement, ...]
    weight: Fraction

    def as_sum(self) -> FormalSum:
        algebra = self.parts[0].algebra
        if self.tag == "single":
            return indicator_sum(self.parts[0])
        whole = join_all(algebra, self.parts)
        pieces = [(b, ONE) for b in self.parts]
        sign = ONE if self.tag == "merge" else -ONE
        return FormalSum(algebra, [(whole, sign)] + [(b, -sign * c) for b, c in pieces])


@dataclass(frozen=True)
class ConeCertificate:
    target: FormalSum
    refinement: DisjointFamily
    generators: tuple[ConeGenerator, ...]
    beta: Mapping[BaElement, Fraction] = field(default_factory=dict)

    def reconstruct(self) -> FormalSum:
        total = FormalSum(self.target.algebra)
        for g in self.generators:
            total = total + g.weight * g.as_sum()
        return total

    def verify(self) -> bool:
        for g in self.generators:
            if g.weight < 0:
                return False
            if g.tag != "single":
                seen = 0
                for b in g.parts:
                    if seen & b.mask:
                        return False
                    seen |= b.mask
        return self.reconstruct() == self.target


def cone_certificate(e: FormalSum) -> ConeCertificate:
    """Decompose ``e`` into nonnegatively weighted cone generators.

    With ``B`` the disjoint refinement of the support, each term contributes
    ``alpha_k * (a_k - sum_{b <= a_k} b)`` (a merge or split generator) and the
    remainder is ``sum_b beta_b * b`` with ``beta_b = sum_{b <= a_k} alpha_k``,
    which is nonnegative exactly when ``e`` is in the cone.
    """
    witness = cone_witness(e)
    if witness is not None:
        raise MembershipError(
            f"not in the cone: atom {witness} has coefficient sum {_atom_sums(e)[witness]}",
            witness,
            _atom_sums(e)[witness],
        )
    algebra = e.algebra
    family = disjoint_refinement(e.support or [algebra.top])
    generators: list[ConeGenerator] = []
    beta = {b: ZERO for b in family}
    for element, alpha in e.items():
        below = tuple(family.below(element))
        for b in below:
            beta[b] += alpha
        if len(below) > 1:
            tag = "merge" if alpha > 0 else "split"
            generators.append(ConeGenerator(tag, below, abs(alpha)))
    for b in family:
        if beta[b] != 0:
            generators.append(ConeGenerator("single", (b,), beta[b]))
    return ConeCertificate(e, family, tuple(generators), beta)


# ---------------------------------------------------------------- quotient


def equivalent(e: FormalSum, f: FormalSum) -> bool:
    """``e - f`` lies in ``C`` and in ``-C``."""
    e.algebra.check_same(f.algebra)
    d = e - f
    return cone_contains_atoms(d) and cone_contains_atoms(-d)


def canonicalize(e: FormalSum) -> LatticeElement:
    """The quotient map: ``valuation(c) = sum(alpha_k for c <= a_k)``."""
    return LatticeElement(e.algebra, tuple(_atom_sums(e)))


def embed_phi(a: BaElement) -> LatticeElement:
    return canonicalize(indicator_sum(a))


@dataclass(frozen=True)
class DisjointRepresentation:
    family: DisjointFamily
    coefficients: tuple[tuple[Fraction, ...], ...]

    def row(self, r: int) -> FormalSum:
        return FormalSum(self.family.algebra, list(zip(self.family.members, self.coefficients[r])))

    def column(self, member: BaElement) -> tuple[Fraction, ...]:
        j = self.family.index(member)
        return tuple(row[j] for row in self.coefficients)


def _as_sum(x) -> FormalSum:
    if isinstance(x, LatticeElement):
        return x.to_formal_sum()
    if isinstance(x, FormalSum):
        return x
    raise DomainError(f"expected a FormalSum or LatticeElement, got {type(x).__name__}")


def common_disjoint_representation(sums: Sequence[FormalSum | LatticeElement]) -> DisjointRepresentation:
    """Rewrite several sums over one disjoint family.

    Members whose column is zero in every row are dropped; if that leaves
    nothing (all inputs equivalent to zero) the family is ``{E}``.
    """
    sums = [_as_sum(s) for s in sums]
    if not sums:
        raise DomainError("need at least one formal sum")
    algebra = sums[0].algebra
    for s in sums:
        algebra.check_same(s.algebra)
    support = [x for s in sums for x in s.support]
    family = disjoint_refinement(support or [algebra.top])
    rows = []
    for s in sums:
        rows.append([sum((alpha for a, alpha in s.items() if b.leq(a)), ZERO) for b in family])
    keep = [j for j in range(len(family)) if any(row[j] != 0 for row in rows)]
    if not keep:
        return DisjointRepresentation(DisjointFamily((algebra.top,)), tuple((ZERO,) for _ in rows))
    members = tuple(family[j] for j in keep)
    return DisjointRepresentation(DisjointFamily(members), tuple(tuple(row[j] for j in keep) for row in rows))


def componentwise(op: Callable[..., Fraction], *elements: FormalSum | LatticeElement) -> LatticeElement:
    """Apply ``op`` coefficientwise on a common disjoint representation, then take the class."""
    rep = common_disjoint_representation(elements)
    coeffs = [op(*col) for col in zip(*rep.coefficients)]
    return canonicalize(FormalSum(rep.family.algebra, list(zip(rep.family.members, coeffs))))


def lattice_abs(f: LatticeElement) -> LatticeElement:
    return abs(f)


def lattice_meet(f: LatticeElement, h: LatticeElement) -> LatticeElement:
    return f.meet(h)


def lattice_join(f: LatticeElement, h: LatticeElement) -> LatticeElement:
    return f.join(h)


def positive_part(f: LatticeElement) -> LatticeElement:
    return f.positive_part()


def ppp_stabilization_index(f: LatticeElement, h: LatticeElement) -> int:
    """Smallest safe ``N`` with ``f & N*h == sup_n f & n*h`` for positive ``f, h``."""
    top = max(f.valuation, default=ZERO)
    positive = [v for v in h.valuation if v > 0]
    if not positive or top <= 0:
        return 1
    return max(1, ceil(top / min(positive)))


def ppp_sup(f: LatticeElement, h: LatticeElement) -> LatticeElement:
    """``sup_n f & n*h``: on a common disjoint representation keep ``alpha_i`` where ``beta_i > 0``."""
    f.algebra.check_same(h.algebra)
    for name, x in (("f", f), ("h", h)):
        if not x.is_positive:
            raise DomainError(f"ppp_sup needs positive arguments; {name} has a negative atom value")
    rep = common_disjoint_representation([f, h])
    kept = [(b, alpha) for b, alpha, beta in zip(rep.family, *rep.coefficients) if beta > 0]
    return canonicalize(FormalSum(f.algebra, kept))


# ---------------------------------------------------------------- universal property


@dataclass(frozen=True)
class OrderedTarget:
    """``Q^m`` with the coordinatewise order."""

    dimension: int

    def __post_init__(self):
        if self.dimension < 1:
            raise DomainError("target dimension must be positive")

    def vector(self, values: Iterable) -> tuple[Fraction, ...]:
        v = tuple(as_fraction(x) for x in values)
        if len(v) != self.dimension:
            raise DomainError(f"expected a {self.dimension}-vector, got length {len(v)}")
        return v

    def zero(self) -> tuple[Fraction, ...]:
        return (ZERO,) * self.dimension

    @staticmethod
    def is_positive(v: Sequence[Fraction]) -> bool:
        return all(x >= 0 for x in v)

    @staticmethod
    def leq(v: Sequence[Fraction], w: Sequence[Fraction]) -> bool:
        return all(x <= y for x, y in zip(v, w))

    @staticmethod
    def meet(v, w) -> tuple[Fraction, ...]:
        return tuple(min(x, y) for x, y in zip(v, w))

    @staticmethod
    def join(v, w) -> tuple[Fraction, ...]:
        return tuple(max(x, y) for x, y in zip(v, w))

    @staticmethod
    def add(v, w) -> tuple[Fraction, ...]:
        return tuple(x + y for x, y in zip(v, w))

    @staticmethod
    def sub(v, w) -> tuple[Fraction, ...]:
        return tuple(x - y for x, y in zip(v, w))

    @staticmethod
    def scale(s, v) -> tuple[Fraction, ...]:
        return tuple(s * x for x in v)

    @staticmethod
    def abs(v) -> tuple[Fraction, ...]:
        return tuple(abs(x) for x in v)


def hom_from_atom_images(algebra: BooleanAlgebra, images: Sequence[Sequence]) -> dict[BaElement, tuple[Fraction, ...]]:
    """The additive map determined by its values on atoms: ``psi(a) = sum(images[c] for c <= a)``."""
    if len(images) != algebra.atom_count:
        raise DomainError(f"need one image per atom ({algebra.atom_count}), got {len(images)}")
    rows = [tuple(as_fraction(x) for x in row) for row in images]
    dim = len(rows[0])
    if any(len(r) != dim for r in rows):
        raise DomainError("atom images have inconsistent dimensions")
    psi = {}
    for a in algebra.elements():
        v = [ZERO] * dim
        for i in a.atom_indices:
            v = [x + y for x, y in zip(v, rows[i])]
        psi[a] = tuple(v)
    return psi


def _normalize_map(psi: Mapping[BaElement, Sequence], target: OrderedTarget | None):
    if not psi:
        raise PreconditionError("map is empty")
    algebra = next(iter(psi)).algebra
    if target is None:
        target = OrderedTarget(len(next(iter(psi.values()))))
    table = {}
    for a, v in psi.items():
        algebra.check_same(a.algebra)
        table[a] = target.vector(v)
    if len(table) != 1 << algebra.atom_count:
        raise PreconditionError(f"map must be total: {len(table)} of {1 << algebra.atom_count} elements given")
    return algebra, target, table


def verify_disjointness_additive(psi: Mapping[BaElement, Sequence], target: OrderedTarget | None = None) -> bool:
    """For every disjoint pair: ``psi(a) & psi(b) == 0`` and ``psi(a | b) == psi(a) + psi(b)``."""
    algebra, target, table = _normalize_map(psi, target)
    for a, v in table.items():
        if not target.is_positive(v):
            raise PreconditionError(f"psi({a!r}) = {v} is not in the positive cone")
    if any(x != 0 for x in table[algebra.bottom]):
        raise PreconditionError("psi(O) must be 0")
    full = algebra.full_mask
    for am in range(1 << algebra.atom_count):
        va = table[BaElement(algebra, am)]
        rest = full & ~am
        bm = rest
        while True:
            vb = table[BaElement(algebra, bm)]
            if any(x != 0 for x in target.meet(va, vb)):
                return False
            if table[BaElement(algebra, am | bm)] != target.add(va, vb):
                return False
            if bm == 0:
                break
            bm = (bm - 1) & rest
    return True


class LatticeHomomorphism:
    """The linear extension ``J_psi`` of a disjointness-preserving additive map."""

    def __init__(self, psi: Mapping[BaElement, Sequence], target: OrderedTarget | None = None):
        algebra, target, table = _normalize_map(psi, target)
        if not verify_disjointness_additive(table, target):
            raise PreconditionError("psi is not disjointness-preserving and additive")
        self.algebra = algebra
        self.target = target
        self.psi = table
        self.atom_images = [table[a] for a in algebra.atoms()]

    def apply_sum(self, e: FormalSum) -> tuple[Fraction, ...]:
        """``T(sum alpha_k a_k) = sum alpha_k psi(a_k)`` on an arbitrary representative."""
        self.algebra.check_same(e.algebra)
        v = self.target.zero()
        for a, alpha in e.items():
            v = self.target.add(v, self.target.scale(alpha, self.psi[a]))
        return v

    def __call__(self, f: LatticeElement | FormalSum) -> tuple[Fraction, ...]:
        if isinstance(f, FormalSum):
            return self.apply_sum(f)
        self.algebra.check_same(f.algebra)
        v = self.target.zero()
        for value, image in zip(f.valuation, self.atom_images):
            if value:
                v = self.target.add(v, self.target.scale(value, image))
        return v

    @property
    def psi_injective(self) -> bool:
        return len(set(self.psi.values())) == len(self.psi)

    @property
    def injective(self) -> bool:
        """``J_psi`` is injective iff the atom images are linearly independent."""
        return rank(self.atom_images) == self.algebra.atom_count

    def span_dimension(self) -> int:
        return rank(self.atom_images)

    def span_coordinates(self, v: Sequence) -> list[Fraction] | None:
        """Coefficients on atom images reproducing ``v``, or ``None`` when ``v`` is outside the span."""
        return solve(self.atom_images, self.target.vector(v))

    def in_span(self, v: Sequence) -> bool:
        return self.span_coordinates(v) is not None


def extend_hom(psi: Mapping[BaElement, Sequence], target: OrderedTarget | None = None) -> LatticeHomomorphism:
    return LatticeHomomorphism(psi, target)


# ---------------------------------------------------------------- rings


class RingLattice:
    """F(R) for a finite Boolean ring ``R`` inside a host algebra.

    A finite ring is the power set of its minimal nonzero members, so F(R) is
    built as F of the algebra on those ``k`` atoms; ``to_host`` is the
    extension of the inclusion ``R -> F(host)``.
    """

    def __init__(self, ring: BooleanRing):
        self.ring = ring
        self.host = ring.algebra
        self.ring_atoms = ring.atoms()
        if not self.ring_atoms:
            raise ValidationError("the ring {O} has a zero-dimensional lattice; need a nonzero member")
        self.algebra = BooleanAlgebra(len(self.ring_atoms))
        psi = {}
        for x in self.algebra.elements():
            psi[x] = embed_phi(self.from_local(x)).valuation
        self.hom = LatticeHomomorphism(psi, OrderedTarget(self.host.atom_count))

    def to_local(self, x: BaElement) -> BaElement:
        if x not in self.ring:
            raise DomainError(f"{x!r} is not a member of the ring")
        mask = 0
        for i, r in enumerate(self.ring_atoms):
            if r.leq(x):
                mask |= 1 << i
        return BaElement(self.algebra, mask)

    def from_local(self, x: BaElement) -> BaElement:
        self.algebra.check_same(x.algebra)
        return join_all(self.host, (self.ring_atoms[i] for i in x.atom_indices))

    def to_host(self, f: LatticeElement) -> LatticeElement:
        return LatticeElement(self.host, self.hom(f))

    def phi(self, x: BaElement) -> LatticeElement:
        return embed_phi(self.to_local(x))


@dataclass
class RingLatticeReport:
    dimension: int
    injective: bool
    homomorphism: bool
    onto_span: bool
    ppp_match: bool
    sublattice: bool
    checked_pairs: int

    @property
    def ok(self) -> bool:
        return self.injective and self.homomorphism and self.onto_span and self.ppp_match and self.sublattice


def random_lattice_element(algebra: BooleanAlgebra, rng: random.Random, lo: int = -5, hi: int = 5,
                           positive: bool = False) -> LatticeElement:
    low = 0 if positive else lo
    return LatticeElement(algebra, tuple(Fraction(rng.randint(low, hi), rng.choice((1, 1, 2, 3)))
                                         for _ in range(algebra.atom_count)))


def ring_lattice(ring: BooleanRing, samples: int = 20, rng: random.Random | None = None) -> tuple[RingLattice, RingLatticeReport]:
    """Build F(R), extend the inclusion to ``J`` and check it against host-side computations."""
    if not isinstance(ring, BooleanRing):
        raise ValidationError("ring_lattice needs a validated BooleanRing")
    rng = rng or random.Random(0)
    rl = RingLattice(ring)
    j = rl.to_host

    span_rank = rank([embed_phi(x).valuation for x in ring.elements])
    onto = span_rank == rl.algebra.atom_count and all(
        j(embed_phi(rl.to_local(x))) == embed_phi(x) for x in ring.elements
    )

    homomorphism = sublattice = ppp_match = True
    members = ring.sorted_elements()
    checked = 0
    for x in members:
        for y in members:
            fx, fy = embed_phi(rl.to_local(x)), embed_phi(rl.to_local(y))
            homomorphism &= j(fx & fy) == j(fx) & j(fy) and j(fx | fy) == j(fx) | j(fy)
            checked += 1
    for _ in range(samples):
        f = random_lattice_element(rl.algebra, rng)
        h = random_lattice_element(rl.algebra, rng)
        homomorphism &= j(f & h) == j(f) & j(h) and j(f | h) == j(f) | j(h) and j(abs(f)) == abs(j(f))
        sublattice &= rl.hom.in_span((j(f) & j(h)).valuation) and rl.hom.in_span(abs(j(f)).valuation)
        fp, hp = abs(f), abs(h)
        host_sup = ppp_sup(j(fp), j(hp))
        ppp_match &= j(ppp_sup(fp, hp)) == host_sup and rl.hom.in_span(host_sup.valuation)
        checked += 1
    report = RingLatticeReport(
        dimension=rl.algebra.atom_count,
        injective=rl.hom.injective,
        homomorphism=homomorphism,
        onto_span=onto,
        ppp_match=ppp_match,
        sublattice=sublattice,
        checked_pairs=checked,
    )
    return rl, report
