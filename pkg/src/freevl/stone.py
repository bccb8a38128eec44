"""Stone space of a finite Boolean algebra and simple functions on finite point sets.

For a finite algebra the Stone space is the discrete space of atoms (each
ultrafilter is principal at an atom), every subset is clopen, and every
function on it is simple and continuous.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .boolean import BaElement, BooleanAlgebra
from .errors import DomainError
from .exact import as_fraction, format_fraction
from .lattice import LatticeElement, embed_phi, ppp_stabilization_index

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class SimpleFunction:
    points: tuple[str, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))
        if len(self.points) != len(self.values):
            raise DomainError(f"{len(self.values)} values for {len(self.points)} points")
        if len(set(self.points)) != len(self.points):
            raise DomainError("point labels must be distinct")

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, object]) -> SimpleFunction:
        return cls(tuple(mapping), tuple(mapping.values()))

    @classmethod
    def constant(cls, points: Sequence[str], value) -> SimpleFunction:
        return cls(tuple(points), (as_fraction(value),) * len(points))

    @classmethod
    def indicator(cls, points: Sequence[str], subset: Iterable[str]) -> SimpleFunction:
        chosen = set(subset)
        unknown = chosen - set(points)
        if unknown:
            raise DomainError(f"points {sorted(unknown)} are not in the space")
        return cls(tuple(points), tuple(ONE if p in chosen else ZERO for p in points))

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.points, self.values))

    def to_json(self) -> dict[str, str]:
        return {p: format_fraction(v) for p, v in zip(self.points, self.values)}

    def __call__(self, point: str) -> Fraction:
        try:
            return self.values[self.points.index(point)]
        except ValueError:
            raise DomainError(f"unknown point {point!r}") from None

    def map(self, op: Callable[[Fraction], Fraction]) -> SimpleFunction:
        return SimpleFunction(self.points, tuple(op(v) for v in self.values))

    def _zip(self, other: SimpleFunction, op) -> SimpleFunction:
        if not isinstance(other, SimpleFunction):
            raise DomainError(f"expected a SimpleFunction, got {type(other).__name__}")
        if other.points != self.points:
            raise DomainError("simple functions live on different point sets")
        return SimpleFunction(self.points, tuple(op(x, y) for x, y in zip(self.values, other.values)))

    def __add__(self, other):
        return self._zip(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._zip(other, lambda x, y: x - y)

    def __neg__(self):
        return self.map(lambda x: -x)

    def __mul__(self, scalar):
        s = as_fraction(scalar)
        return self.map(lambda x: s * x)

    __rmul__ = __mul__

    def meet(self, other):
        return self._zip(other, min)

    def join(self, other):
        return self._zip(other, max)

    __and__ = meet
    __or__ = join

    def __abs__(self):
        return self.map(abs)

    def positive_part(self):
        return self.map(lambda x: max(x, ZERO))

    def __le__(self, other) -> bool:
        return all(x <= y for x, y in zip(self.values, self._zip(other, lambda x, y: y).values))

    def __ge__(self, other) -> bool:
        return other <= self

    @property
    def is_positive(self) -> bool:
        return all(v >= 0 for v in self.values)

    def support(self) -> frozenset[str]:
        return frozenset(p for p, v in zip(self.points, self.values) if v != 0)

    def sup_distance(self, other: SimpleFunction) -> Fraction:
        return max((abs(v) for v in (self - other).values), default=ZERO)


@dataclass(frozen=True)
class StoneSpace:
    source: BooleanAlgebra
    points: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.source.atom_label(i) for i in range(self.source.atom_count)))

    def point(self, atom_index: int) -> str:
        return self.points[atom_index]

    def clopen_of(self, a: BaElement) -> frozenset[str]:
        """``{p : atom(p) <= a}``."""
        self.source.check_same(a.algebra)
        return frozenset(self.points[i] for i in a.atom_indices)

    def element_of(self, clopen: Iterable[str]) -> BaElement:
        index = {p: i for i, p in enumerate(self.points)}
        try:
            return self.source.element(index[p] for p in clopen)
        except KeyError as exc:
            raise DomainError(f"unknown point {exc.args[0]!r}") from None


def stone_space(algebra: BooleanAlgebra) -> StoneSpace:
    return StoneSpace(algebra)


def verify_clopen_isomorphism(space: StoneSpace) -> bool:
    """Exhaustive check that ``clopen_of`` is a Boolean isomorphism onto the power set of points."""
    algebra = space.source
    elements = list(algebra.elements())
    images = [space.clopen_of(a) for a in elements]
    everything = frozenset(space.points)
    if len(set(images)) != len(elements) or len(elements) != 2 ** len(space.points):
        return False
    if images[0] != frozenset() or space.clopen_of(algebra.top) != everything:
        return False
    for a, ia in zip(elements, images):
        if space.clopen_of(~a) != everything - ia or space.element_of(ia) != a:
            return False
        for b, ib in zip(elements, images):
            if space.clopen_of(a & b) != ia & ib or space.clopen_of(a | b) != ia | ib:
                return False
            if (a <= b) != (ia <= ib):
                return False
    return True


def to_simple_function(f: LatticeElement, space: StoneSpace) -> SimpleFunction:
    if f.algebra != space.source:
        raise DomainError("lattice element and Stone space come from different algebras")
    return SimpleFunction(space.points, f.valuation)


def from_simple_function(s: SimpleFunction, space: StoneSpace) -> LatticeElement:
    if s.points != space.points:
        raise DomainError("simple function is not defined on this Stone space")
    return LatticeElement(space.source, s.values)


def urysohn_truncation(h: SimpleFunction) -> SimpleFunction:
    """``(3h - 1)^+ & 1`` pointwise."""
    return h.map(lambda x: min(max(3 * x - 1, ZERO), ONE))


def urysohn_hypothesis(h: SimpleFunction, g: SimpleFunction, inner: Iterable[str], outer: Iterable[str]) -> bool:
    """``inner <= outer``, ``1_inner <= g <= 1_outer`` and ``||h - g|| <= 1/3``."""
    inner, outer = set(inner), set(outer)
    if not inner <= outer:
        return False
    lower = SimpleFunction.indicator(g.points, inner)
    upper = SimpleFunction.indicator(g.points, outer)
    return lower <= g <= upper and h.sup_distance(g) <= Fraction(1, 3)


@dataclass
class SimplePPPReport:
    checked: list[tuple[SimpleFunction, SimpleFunction, SimpleFunction]]
    ok: bool


def simple_ppp_sup(f: SimpleFunction, h: SimpleFunction) -> SimpleFunction:
    """``sup_n f & n*h`` as the pointwise maximum over ``n = 1..N+1`` past the stabilization index."""
    if not (f.is_positive and h.is_positive):
        raise DomainError("PPP supremum needs positive functions")
    fake = BooleanAlgebra(len(f.points))
    n_stab = ppp_stabilization_index(LatticeElement(fake, f.values), LatticeElement(fake, h.values))
    sup = f.meet(h)
    for n in range(2, n_stab + 2):
        sup = sup.join(f.meet(h * n))
    return sup


def verify_simple_ppp(space: StoneSpace | Sequence[str], samples: int = 20, rng: random.Random | None = None,
                      pairs: Sequence[tuple[SimpleFunction, SimpleFunction]] | None = None) -> SimplePPPReport:
    """For positive ``f, h``: ``sup_n f & n*h`` exists and equals ``f`` masked to the support of ``h``."""
    points = space.points if isinstance(space, StoneSpace) else tuple(space)
    rng = rng or random.Random(0)
    if pairs is None:
        pairs = []
        for _ in range(samples):
            f = SimpleFunction(points, [Fraction(rng.randint(0, 6), rng.randint(1, 3)) for _ in points])
            h = SimpleFunction(points, [Fraction(rng.choice((0, 0, 1, 2, 5)), rng.randint(1, 4)) for _ in points])
            pairs.append((f, h))
    checked = []
    ok = True
    for f, h in pairs:
        sup = simple_ppp_sup(f, h)
        masked = SimpleFunction(points, [fv if hv > 0 else ZERO for fv, hv in zip(f.values, h.values)])
        ok &= sup == masked
        checked.append((f, h, sup))
    return SimplePPPReport(checked, ok)


def indicator_partition_holds(space: StoneSpace, a: BaElement) -> bool:
    """``phi(a)`` and ``phi(~a)`` become disjoint {0,1}-valued functions adding up to 1."""
    fa = to_simple_function(embed_phi(a), space)
    fb = to_simple_function(embed_phi(~a), space)
    binary = all(v in (ZERO, ONE) for v in fa.values + fb.values)
    disjoint = all(v == 0 for v in fa.meet(fb).values)
    return binary and disjoint and fa + fb == SimpleFunction.constant(space.points, 1)


def _dot_id(label: str) -> str:
    return '"' + label.replace('"', r"\"") + '"'


def to_dot(space: StoneSpace, hasse_max_atoms: int = 6) -> str:
    """Graphviz text: Stone points with the generator clopens containing them, plus the Hasse diagram."""
    algebra = space.source
    lines = ["graph stone {", "  subgraph cluster_points {", '    label="Stone space";']
    for i, p in enumerate(space.points):
        tag = algebra.sign_pattern(i) if algebra.is_free else p
        members = [name for name, g in zip(algebra.generator_labels, algebra.generators) if (g.mask >> i) & 1]
        clopens = ",".join(members) if members else "-"
        lines.append(f"    {_dot_id('pt:' + p)} [shape=box, label={_dot_id(tag)}, clopens={_dot_id(clopens)}];")
    lines.append("  }")
    if algebra.atom_count <= hasse_max_atoms:
        lines += ["  subgraph cluster_hasse {", '    label="Hasse diagram";']
        for a in algebra.elements():
            lines.append(f"    {_dot_id('el:' + repr(a))} [label={_dot_id(repr(a))}];")
        for a in algebra.elements():
            for i in range(algebra.atom_count):
                if not (a.mask >> i) & 1:
                    b = BaElement(algebra, a.mask | (1 << i))
                    lines.append(f"    {_dot_id('el:' + repr(a))} -- {_dot_id('el:' + repr(b))};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(space: StoneSpace) -> dict:
    algebra = space.source
    return {
        "algebra": {"atoms": algebra.atom_count, "generators": list(algebra.generator_labels)},
        "points": list(space.points),
        "generators": {
            name: sorted(space.clopen_of(g), key=space.points.index)
            for name, g in zip(algebra.generator_labels, algebra.generators)
        },
    }
