"""JSON encodings.

* algebra: ``{"atoms": n, "generators": [names]}``
* element: sorted list of atom indices
* formal sum: ``[{"element": [...], "coeff": "p/q"}, ...]``
* lattice element: ``{"valuation": ["p/q", ...]}``
* simple function, functional, measure: ``{"point": "p/q"}``

Rationals are written with :func:`str` on :class:`~fractions.Fraction`
(``"3"``, ``"-1/2"``); integers and ``"p/q"`` strings are accepted on input.
"""

from __future__ import annotations

from .boolean import BaElement, BooleanAlgebra
from .errors import DomainError
from .exact import as_fraction, format_fraction
from .lattice import ConeCertificate, FormalSum, LatticeElement
from .stone import SimpleFunction


def algebra_to_json(algebra: BooleanAlgebra) -> dict:
    return {"atoms": algebra.atom_count, "generators": list(algebra.generator_labels)}


def algebra_from_json(data: dict) -> BooleanAlgebra:
    try:
        atoms = data["atoms"]
    except (KeyError, TypeError):
        raise DomainError('algebra JSON needs an "atoms" field') from None
    return BooleanAlgebra(int(atoms), tuple(data.get("generators", ())))


def element_to_json(a: BaElement) -> list[int]:
    return list(a.atom_indices)


def element_from_json(algebra: BooleanAlgebra, data) -> BaElement:
    if not isinstance(data, list):
        raise DomainError("an element is encoded as a list of atom indices")
    return algebra.element(int(i) for i in data)


def sum_to_json(e: FormalSum) -> list[dict]:
    return [{"element": element_to_json(a), "coeff": format_fraction(c)} for a, c in e.items()]


def sum_from_json(algebra: BooleanAlgebra, data) -> FormalSum:
    if not isinstance(data, list):
        raise DomainError("a formal sum is encoded as a list of terms")
    return FormalSum(algebra, [(element_from_json(algebra, t["element"]), as_fraction(t["coeff"])) for t in data])


def lattice_to_json(f: LatticeElement) -> dict:
    return {"valuation": [format_fraction(v) for v in f.valuation]}


def lattice_from_json(algebra: BooleanAlgebra, data: dict) -> LatticeElement:
    return LatticeElement(algebra, tuple(as_fraction(v) for v in data["valuation"]))


def certificate_to_json(cert: ConeCertificate) -> dict:
    gens = []
    for g in cert.generators:
        if g.tag == "single":
            gens.append({"single": element_to_json(g.parts[0]), "weight": format_fraction(g.weight)})
        else:
            gens.append({g.tag: [element_to_json(b) for b in g.parts], "weight": format_fraction(g.weight)})
    return {
        "refinement": [element_to_json(b) for b in cert.refinement],
        "generators": gens,
        "beta": [{"element": element_to_json(b), "coeff": format_fraction(v)} for b, v in cert.beta.items()],
    }


def function_from_json(data: dict) -> SimpleFunction:
    if not isinstance(data, dict):
        raise DomainError('expected a {"point": "p/q"} object')
    return SimpleFunction.from_mapping({str(k): as_fraction(v) for k, v in data.items()})
