"""The action g.f = f(g^-1 x) of a matrix group on polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from trinv.algebra import Matrix3, mat_inverse, mat_mul
from trinv.group import MatrixGroup
from trinv.poly import Polynomial, poly_mul, substitute_linear


def apply(g: Matrix3, f: Polynomial) -> Polynomial:
    return substitute_linear(f, mat_inverse(g))


def is_invariant(g: MatrixGroup, f: Polynomial) -> bool:
    """Checks the generators only; the action law does the rest."""
    return all(apply(h, f) == f for h in g.generators)


def is_invariant_all(g: MatrixGroup, f: Polynomial) -> bool:
    return all(apply(h, f) == f for h in g.elements)


def stabilizer(g: MatrixGroup, f: Polynomial) -> MatrixGroup:
    elems = tuple(h for h in g.elements if apply(h, f) == f)
    return MatrixGroup(g.p, elems, elems)


@dataclass(frozen=True)
class OrbitData:
    base: Polynomial
    stabilizer_order: int
    coset_reps: tuple


def left_coset_reps(elements: Sequence[Matrix3], sub: MatrixGroup) -> list[Matrix3]:
    """The first element of each left coset ``a*sub``, scanning ``elements`` in order."""
    covered: set = set()
    reps = []
    for a in elements:
        if a in covered:
            continue
        reps.append(a)
        covered.update(mat_mul(a, h) for h in sub.elements)
    return reps


def orbit_data(g: MatrixGroup, f: Polynomial, elements: Sequence[Matrix3] | None = None) -> OrbitData:
    st = stabilizer(g, f)
    reps = left_coset_reps(g.elements if elements is None else elements, st)
    assert st.order * len(reps) == g.order
    return OrbitData(f, st.order, tuple(reps))


def effective_norm(g: MatrixGroup, f: Polynomial, elements: Sequence[Matrix3] | None = None) -> Polynomial:
    """Product of ``a.f`` over one representative ``a`` of each coset of the stabilizer.

    ``elements`` overrides the scan order used to pick representatives.
    """
    data = orbit_data(g, f, elements)
    out = Polynomial.constant(1, f.p)
    for a in data.coset_reps:
        out = poly_mul(out, apply(a, f))
    return out
