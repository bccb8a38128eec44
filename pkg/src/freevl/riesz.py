"""Positive functionals and measures on a finite discrete space.

On a finite discrete space every subset is clopen and Baire, nothing nonempty
is meager, and the measure of a positive functional is forced by its values
on point indicators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import DomainError
from .exact import as_fraction, format_fraction
from .stone import SimpleFunction

ZERO = Fraction(0)


def _check_points(points: Sequence[str]) -> tuple[str, ...]:
    points = tuple(points)
    if len(set(points)) != len(points):
        raise DomainError("point labels must be distinct")
    return points


@dataclass(frozen=True)
class FiniteFunctional:
    """``xi(f) = sum(weights[p] * f(p))``."""

    points: tuple[str, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", _check_points(self.points))
        object.__setattr__(self, "weights", tuple(as_fraction(w) for w in self.weights))
        if len(self.points) != len(self.weights):
            raise DomainError(f"{len(self.weights)} weights for {len(self.points)} points")

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, object]) -> FiniteFunctional:
        return cls(tuple(mapping), tuple(mapping.values()))

    def to_json(self) -> dict[str, str]:
        return {p: format_fraction(w) for p, w in zip(self.points, self.weights)}

    def __call__(self, f: SimpleFunction) -> Fraction:
        if f.points != self.points:
            raise DomainError("functional and function live on different point sets")
        return sum((w * v for w, v in zip(self.weights, f.values)), ZERO)

    def __add__(self, other: FiniteFunctional) -> FiniteFunctional:
        if other.points != self.points:
            raise DomainError("functionals live on different point sets")
        return FiniteFunctional(self.points, tuple(x + y for x, y in zip(self.weights, other.weights)))

    def __mul__(self, scalar) -> FiniteFunctional:
        s = as_fraction(scalar)
        return FiniteFunctional(self.points, tuple(s * w for w in self.weights))

    __rmul__ = __mul__

    @property
    def is_positive(self) -> bool:
        return all(w >= 0 for w in self.weights)

    def negative_point(self) -> str | None:
        for p, w in zip(self.points, self.weights):
            if w < 0:
                return p
        return None

    def norm(self) -> Fraction:
        """Operator norm over ``[-1, 1]``: ``xi(1)`` when positive, ``sum |w|`` in general."""
        if self.is_positive:
            return self(SimpleFunction.constant(self.points, 1))
        return sum((abs(w) for w in self.weights), ZERO)


def operator_norm_bruteforce(xi: FiniteFunctional) -> Fraction:
    """Max of ``|xi(f)|`` over the vertices of the unit ball; a linear functional peaks at a vertex."""
    best = ZERO
    for signs in product((-1, 1), repeat=len(xi.points)):
        best = max(best, abs(xi(SimpleFunction(xi.points, signs))))
    return best


@dataclass(frozen=True)
class FiniteMeasure:
    points: tuple[str, ...]
    mass: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", _check_points(self.points))
        object.__setattr__(self, "mass", tuple(as_fraction(m) for m in self.mass))
        if len(self.points) != len(self.mass):
            raise DomainError(f"{len(self.mass)} masses for {len(self.points)} points")
        for p, m in zip(self.points, self.mass):
            if m < 0:
                raise DomainError(f"negative mass {m} at point {p!r}")

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, object]) -> FiniteMeasure:
        return cls(tuple(mapping), tuple(mapping.values()))

    def to_json(self) -> dict[str, str]:
        return {p: format_fraction(m) for p, m in zip(self.points, self.mass)}

    def __call__(self, subset: Iterable[str]) -> Fraction:
        subset = set(subset)
        unknown = subset - set(self.points)
        if unknown:
            raise DomainError(f"points {sorted(unknown)} are not in the space")
        return sum((m for p, m in zip(self.points, self.mass) if p in subset), ZERO)

    @property
    def total(self) -> Fraction:
        return sum(self.mass, ZERO)


def functional_to_measure(xi: FiniteFunctional) -> FiniteMeasure:
    """``mass(p) = xi(1_{p})``."""
    bad = xi.negative_point()
    if bad is not None:
        raise DomainError(f"functional is not positive: weight at {bad!r} is negative")
    return FiniteMeasure(
        xi.points, tuple(xi(SimpleFunction.indicator(xi.points, [p])) for p in xi.points)
    )


def measure_to_functional(mu: FiniteMeasure) -> FiniteFunctional:
    return FiniteFunctional(mu.points, mu.mass)


def integrate(f: SimpleFunction, mu: FiniteMeasure) -> Fraction:
    if f.points != mu.points:
        raise DomainError("function and measure live on different point sets")
    return sum((v * m for v, m in zip(f.values, mu.mass)), ZERO)


@dataclass(frozen=True)
class NormReport:
    norm_nu: Fraction
    norm_mu: Fraction
    norm_sum: Fraction
    additive: bool

    def to_json(self) -> dict:
        return {
            "norm_nu": format_fraction(self.norm_nu),
            "norm_mu": format_fraction(self.norm_mu),
            "norm_sum": format_fraction(self.norm_sum),
            "additive": self.additive,
        }


def al_norm_check(nu: FiniteFunctional, mu: FiniteFunctional, allow_signed: bool = False) -> NormReport:
    """``||nu + mu|| = ||nu|| + ||mu||`` for positive functionals.

    With ``allow_signed`` mixed-sign inputs are accepted; ``additive`` then
    simply reports whether equality happens to hold (the triangle inequality
    always does).
    """
    if nu.points != mu.points:
        raise DomainError("functionals live on different point sets")
    if not allow_signed:
        for name, xi in (("nu", nu), ("mu", mu)):
            bad = xi.negative_point()
            if bad is not None:
                raise DomainError(f"{name} is not positive: weight at {bad!r} is negative")
    a, b, c = nu.norm(), mu.norm(), (nu + mu).norm()
    return NormReport(a, b, c, c == a + b)
