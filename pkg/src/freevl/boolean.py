"""Finite Boolean algebras represented by their atoms.

An element is a subset of atoms, stored as a Python ``int`` bitmask (bit ``i``
set iff atom ``i`` lies below the element).  Every finitely generated Boolean
algebra is finite, so this covers any algebra reachable from finitely many
generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import config
from .errors import DomainError, SizeError, ValidationError


@dataclass(frozen=True)
class BooleanAlgebra:
    atom_count: int
    generator_labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.atom_count, int) or self.atom_count < 1:
            raise SizeError(f"a Boolean algebra needs at least one atom, got {self.atom_count!r}")
        object.__setattr__(self, "generator_labels", tuple(self.generator_labels))
        if self.generator_labels and self.atom_count != 1 << len(self.generator_labels):
            raise DomainError(
                f"{len(self.generator_labels)} generators require {1 << len(self.generator_labels)} atoms, "
                f"got {self.atom_count}"
            )

    @property
    def full_mask(self) -> int:
        return (1 << self.atom_count) - 1

    @property
    def is_free(self) -> bool:
        return bool(self.generator_labels)

    @property
    def bottom(self) -> BaElement:
        return BaElement(self, 0)

    @property
    def top(self) -> BaElement:
        return BaElement(self, self.full_mask)

    def atom(self, index: int) -> BaElement:
        if not 0 <= index < self.atom_count:
            raise DomainError(f"atom index {index} out of range for {self.atom_count} atoms")
        return BaElement(self, 1 << index)

    def atoms(self) -> list[BaElement]:
        return [BaElement(self, 1 << i) for i in range(self.atom_count)]

    def element(self, atom_indices: Iterable[int]) -> BaElement:
        mask = 0
        for i in atom_indices:
            if not 0 <= i < self.atom_count:
                raise DomainError(f"atom index {i} out of range for {self.atom_count} atoms")
            mask |= 1 << i
        return BaElement(self, mask)

    def elements(self) -> Iterator[BaElement]:
        """All ``2**atom_count`` elements, in mask order."""
        for mask in range(1 << self.atom_count):
            yield BaElement(self, mask)

    @property
    def generators(self) -> list[BaElement]:
        return [self.generator(i) for i in range(len(self.generator_labels))]

    def generator(self, i: int) -> BaElement:
        # atom j carries sign + at generator i iff bit i of j is clear
        n = len(self.generator_labels)
        if not 0 <= i < n:
            raise DomainError(f"generator index {i} out of range for {n} generators")
        mask = 0
        for j in range(self.atom_count):
            if not (j >> i) & 1:
                mask |= 1 << j
        return BaElement(self, mask)

    def sign_pattern(self, atom_index: int) -> str:
        n = len(self.generator_labels)
        return "".join("-" if (atom_index >> i) & 1 else "+" for i in range(n))

    def atom_label(self, atom_index: int) -> str:
        """``a<k>`` (1-based), followed by the sign pattern for free algebras."""
        if self.is_free:
            return f"a{atom_index + 1}[{self.sign_pattern(atom_index)}]"
        return f"a{atom_index + 1}"

    def check_same(self, other: BooleanAlgebra) -> None:
        if self != other:
            raise DomainError("elements belong to different Boolean algebras")


def free_boolean_algebra(n: int, max_generators: int | None = None) -> tuple[BooleanAlgebra, list[BaElement]]:
    """Free Boolean algebra on ``n`` generators ``g1..gn``; its atoms are the ``2**n`` sign patterns."""
    cap = config.MAX_GENERATORS if max_generators is None else max_generators
    if not isinstance(n, int) or n < 1:
        raise SizeError(f"need at least one generator, got {n!r}")
    if n > cap:
        raise SizeError(f"{n} generators exceeds the cap of {cap} (set FREEVL_MAX_GENERATORS to raise it)")
    algebra = BooleanAlgebra(1 << n, tuple(f"g{i + 1}" for i in range(n)))
    return algebra, algebra.generators


@dataclass(frozen=True)
class BaElement:
    algebra: BooleanAlgebra
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.algebra.atom_count:
            raise DomainError(f"mask {self.mask:#x} has atoms outside the algebra")

    @property
    def atom_set(self) -> frozenset[int]:
        return frozenset(self.atom_indices)

    @property
    def atom_indices(self) -> tuple[int, ...]:
        m, out, i = self.mask, [], 0
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return tuple(out)

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    @property
    def is_top(self) -> bool:
        return self.mask == self.algebra.full_mask

    def __len__(self) -> int:
        return self.mask.bit_count()

    def _coerce(self, other: BaElement) -> int:
        if not isinstance(other, BaElement):
            raise DomainError(f"expected a Boolean algebra element, got {type(other).__name__}")
        self.algebra.check_same(other.algebra)
        return other.mask

    def meet(self, other: BaElement) -> BaElement:
        return BaElement(self.algebra, self.mask & self._coerce(other))

    def join(self, other: BaElement) -> BaElement:
        return BaElement(self.algebra, self.mask | self._coerce(other))

    def complement(self) -> BaElement:
        return BaElement(self.algebra, self.algebra.full_mask & ~self.mask)

    def leq(self, other: BaElement) -> bool:
        return self.mask & ~self._coerce(other) == 0

    def disjoint(self, other: BaElement) -> bool:
        return self.mask & self._coerce(other) == 0

    __and__ = meet
    __or__ = join
    __invert__ = complement
    __le__ = leq

    def __lt__(self, other: BaElement) -> bool:
        return self.leq(other) and self.mask != other.mask

    def __ge__(self, other: BaElement) -> bool:
        return other.leq(self)

    def __gt__(self, other: BaElement) -> bool:
        return other < self

    def sort_key(self) -> tuple[int, ...]:
        return self.atom_indices

    def __repr__(self) -> str:
        if self.mask == 0:
            return "O"
        if self.is_top:
            return "E"
        return "{" + ",".join(str(i) for i in self.atom_indices) + "}"


def meet(x: BaElement, y: BaElement) -> BaElement:
    return x.meet(y)


def join(x: BaElement, y: BaElement) -> BaElement:
    return x.join(y)


def complement(x: BaElement) -> BaElement:
    return x.complement()


def leq(x: BaElement, y: BaElement) -> bool:
    return x.leq(y)


def disjoint(x: BaElement, y: BaElement) -> bool:
    return x.disjoint(y)


def join_all(algebra: BooleanAlgebra, elements: Iterable[BaElement]) -> BaElement:
    return reduce(BaElement.join, elements, algebra.bottom)


@dataclass(frozen=True)
class DisjointFamily:
    """Pairwise-disjoint nonzero elements, sorted lexicographically by atom set."""

    members: tuple[BaElement, ...]

    def __post_init__(self):
        members = tuple(sorted(self.members, key=BaElement.sort_key))
        if not members:
            raise DomainError("a disjoint family needs at least one member")
        algebra = members[0].algebra
        seen = 0
        for m in members:
            algebra.check_same(m.algebra)
            if m.is_zero:
                raise ValidationError("disjoint family contains the zero element", (m,))
            if seen & m.mask:
                raise ValidationError("disjoint family members overlap", (m,))
            seen |= m.mask
        object.__setattr__(self, "members", members)

    @property
    def algebra(self) -> BooleanAlgebra:
        return self.members[0].algebra

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def index(self, member: BaElement) -> int:
        return self.members.index(member)

    def join(self) -> BaElement:
        return join_all(self.algebra, self.members)

    def below(self, element: BaElement) -> list[BaElement]:
        return [b for b in self.members if b.leq(element)]


def disjoint_refinement(elements: Sequence[BaElement]) -> DisjointFamily:
    """The nonzero sign-meets of ``elements``.

    Each member is ``a_1^{e_1} & ... & a_n^{e_n}`` for a sign vector ``e``; the
    nonzero ones are exactly the classes of atoms sharing a membership signature,
    which is how they are computed here (linear in atoms, not exponential in n).
    """
    elements = list(elements)
    if not elements:
        raise DomainError("disjoint refinement needs at least one element")
    algebra = elements[0].algebra
    for e in elements:
        algebra.check_same(e.algebra)
    classes: dict[tuple[bool, ...], int] = {}
    masks = [e.mask for e in elements]
    for atom in range(algebra.atom_count):
        signature = tuple(bool((m >> atom) & 1) for m in masks)
        classes[signature] = classes.get(signature, 0) | (1 << atom)
    return DisjointFamily(tuple(BaElement(algebra, m) for m in classes.values()))


@dataclass(frozen=True)
class BooleanRing:
    """A sub-ring of a finite Boolean algebra: contains O, closed under meet, join, relative complement."""

    algebra: BooleanAlgebra
    elements: frozenset[BaElement] = field(default_factory=frozenset)

    def __contains__(self, item: BaElement) -> bool:
        return item in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def atoms(self) -> list[BaElement]:
        """Minimal nonzero members, sorted by atom set; they are pairwise disjoint."""
        nonzero = [x for x in self.elements if not x.is_zero]
        minimal = [x for x in nonzero if not any(y < x for y in nonzero)]
        return sorted(minimal, key=BaElement.sort_key)

    @property
    def unit(self) -> BaElement:
        return join_all(self.algebra, self.elements)

    def sorted_elements(self) -> list[BaElement]:
        return sorted(self.elements, key=lambda x: (len(x), x.sort_key()))


def validate_ring(candidate: Iterable[BaElement]) -> BooleanRing:
    elements = frozenset(candidate)
    if not elements:
        raise ValidationError("a Boolean ring must be nonempty")
    algebra = next(iter(elements)).algebra
    for x in elements:
        algebra.check_same(x.algebra)
    if algebra.bottom not in elements:
        raise ValidationError("ring does not contain the zero element O")
    for x, y in combinations(sorted(elements, key=lambda e: e.mask), 2):
        for name, z in (
            ("meet", x.meet(y)),
            ("join", x.join(y)),
            ("relative complement", x.meet(y.complement())),
            ("relative complement", y.meet(x.complement())),
        ):
            if z not in elements:
                raise ValidationError(f"ring not closed under {name}: {x!r}, {y!r} -> {z!r}", (x, y))
    return BooleanRing(algebra, elements)
