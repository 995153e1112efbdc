"""Finite matrix groups: closure, subgroups and the pseudoreflection taxonomy."""

from __future__ import annotations

import enum
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from trinv.algebra import Matrix3, _residue, check_modulus, half, mat_inverse, mat_mul, rank
from trinv.errors import CapExceeded, NotUpperTriangular, OrderMismatch, SingularGenerator

DEFAULT_CAP = 1_000_000
CAP_ENV = "TRINV_CLOSURE_CAP"


def default_cap() -> int:
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


@dataclass(frozen=True)
class MatrixGroup:
    """A finite group given by generators together with all of its elements.

    ``elements`` is sorted lexicographically on the entry tuples, so the
    identity is not necessarily first.
    """

    p: int
    generators: tuple
    elements: tuple
    _index: frozenset = field(repr=False, compare=False, default=frozenset())

    def __post_init__(self):
        object.__setattr__(self, "_index", frozenset(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m: Matrix3) -> bool:
        return m in self._index

    def same_elements(self, other: "MatrixGroup") -> bool:
        return self.p == other.p and self._index == other._index

    def is_subgroup_of(self, other: "MatrixGroup") -> bool:
        return self._index <= other._index

    def identity(self) -> Matrix3:
        return Matrix3.identity(self.p)

    def is_upper_triangular(self) -> bool:
        return all(m.is_upper_triangular() for m in self.elements)


def closure(p: int, gens: Iterable[Matrix3], cap: int | None = None) -> MatrixGroup:
    """Enumerate the group generated by ``gens`` breadth first.

    Over a finite field every invertible matrix has finite order, so the
    monoid closure under products already contains inverses.
    """
    check_modulus(p)
    cap = default_cap() if cap is None else cap
    gens = tuple(gens)
    for g in gens:
        if g.p != p:
            raise SingularGenerator(f"generator over F_{g.p} in a group over F_{p}")
        if g.det() == 0:
            raise SingularGenerator(f"generator {g} is singular mod {p}")
    e = Matrix3.identity(p)
    seen = {e}
    queue = deque([e])
    distinct = list(dict.fromkeys(g for g in gens if not g.is_identity()))
    while queue:
        a = queue.popleft()
        for g in distinct:
            b = mat_mul(a, g)
            if b not in seen:
                seen.add(b)
                if len(seen) > cap:
                    raise CapExceeded(f"closure exceeded {cap} elements")
                queue.append(b)
    return MatrixGroup(p, gens, tuple(sorted(seen)))


def subgroup(g: MatrixGroup, gens: Iterable[Matrix3]) -> MatrixGroup:
    return closure(g.p, gens, cap=max(g.order, 1))


def unipotent_subgroup(g: MatrixGroup) -> MatrixGroup:
    """The elements with diagonal (1, 1, 1); the Sylow p-subgroup of a triangular group."""
    if not g.is_upper_triangular():
        raise NotUpperTriangular("unipotent subgroup requires an upper triangular group")
    elems = tuple(m for m in g.elements if m.is_unipotent_triangular())
    h = MatrixGroup(g.p, elems, elems)
    assert all(mat_mul(a, b) in h for a in elems for b in elems)
    return h


def is_abelian(g: MatrixGroup) -> bool:
    elems = g.elements
    return all(
        mat_mul(a, b) == mat_mul(b, a) for i, a in enumerate(elems) for b in elems[i + 1:]
    )


def is_normal(h: MatrixGroup, g: MatrixGroup) -> bool:
    return all(
        mat_mul(mat_mul(a, x), mat_inverse(a)) in h for a in g.generators for x in h.elements
    )


class Reflection(enum.Enum):
    IDENTITY = "Identity"
    HOMOLOGY = "Homology"
    TRANSVECTION = "Transvection"
    NOT_PSEUDOREFLECTION = "NotPseudoreflection"


class TriangularKind(enum.Enum):
    HORIZONTAL = "Horizontal"
    VERTICAL = "Vertical"
    MIXED = "Mixed"
    CORNER = "Corner"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class ReflectionClass:
    kind: Reflection
    triangular: TriangularKind = TriangularKind.NOT_APPLICABLE

    @property
    def is_pseudoreflection(self) -> bool:
        return self.kind in (Reflection.HOMOLOGY, Reflection.TRANSVECTION)

    def __str__(self):
        return f"{self.kind.value}/{self.triangular.value}"


def _is_horizontal(m: Matrix3) -> bool:
    # rows 2 and 3 are those of the identity
    return m.entries[3:] == (0, 1, 0, 0, 0, 1)


def _is_vertical(m: Matrix3) -> bool:
    # only the last column differs from the identity
    e = m.entries
    return (e[0], e[1], e[3], e[4], e[6], e[7]) == (1, 0, 0, 1, 0, 0)


def _is_mixed(m: Matrix3) -> bool:
    """[[1, (l-1)b, ab], [0, l, a], [0, 0, 1]] for some l != 0 and a, b."""
    e = m.entries
    p = m.p
    if e[0] != 1 or e[3] != 0 or e[6:] != (0, 0, 1):
        return False
    lam, a = e[4], e[5]
    if (lam - 1) % p:
        b = e[1] * pow(lam - 1, -1, p) % p
    elif a:
        b = e[2] * pow(a, -1, p) % p
    else:
        return e[1] == 0 and e[2] == 0
    return e[1] == (lam - 1) * b % p and e[2] == a * b % p


def classify(m: Matrix3) -> ReflectionClass:
    if m.is_identity():
        return ReflectionClass(Reflection.IDENTITY)
    n = m - Matrix3.identity(m.p)
    if rank(n) != 1:
        return ReflectionClass(Reflection.NOT_PSEUDOREFLECTION)
    kind = Reflection.TRANSVECTION if mat_mul(n, n).entries == (0,) * 9 else Reflection.HOMOLOGY
    if not m.is_upper_triangular():
        return ReflectionClass(kind)
    horizontal, vertical = _is_horizontal(m), _is_vertical(m)
    if horizontal and vertical:
        tri = TriangularKind.CORNER
    elif horizontal:
        tri = TriangularKind.HORIZONTAL
    elif vertical:
        tri = TriangularKind.VERTICAL
    elif _is_mixed(m):
        tri = TriangularKind.MIXED
    else:  # pragma: no cover - every triangular pseudoreflection has one of the shapes
        raise AssertionError(f"unclassified triangular pseudoreflection {m}")
    return ReflectionClass(kind, tri)


def pseudoreflections(g: MatrixGroup) -> list[Matrix3]:
    return [m for m in g.elements if classify(m).is_pseudoreflection]


def transvections(g: MatrixGroup) -> list[Matrix3]:
    return [m for m in g.elements if classify(m).kind is Reflection.TRANSVECTION]


def pseudoreflection_subgroup(g: MatrixGroup) -> MatrixGroup:
    return subgroup(g, pseudoreflections(g))


def construct_sigma(p: int, s, c) -> Matrix3:
    """The mixed homology [[1, s-c, c(c-s)/2], [0, -1, c], [0, 0, 1]]."""
    check_modulus(p)
    s, c = _residue(s, p), _residue(c, p)
    return Matrix3.from_rows([[1, s - c, half(c * (c - s), p)], [0, -1, c], [0, 0, 1]], p)


def corner(p: int, b) -> Matrix3:
    return Matrix3.from_rows([[1, 0, b], [0, 1, 0], [0, 0, 1]], p)


def additive_span_size(p: int, values: Sequence) -> int:
    """Size of the additive subgroup of F_p generated by ``values``: 1 or p."""
    return p if any(_residue(v, p) for v in values) else 1


def construct_A(p: int, s, c_list: Sequence, cap: int | None = None) -> MatrixGroup:
    """Group generated by the mixed homologies sigma(s, c_i)."""
    if not c_list:
        raise ValueError("c_list must be nonempty")
    gens = [construct_sigma(p, s, c) for c in c_list]
    a = closure(p, gens, cap)
    c0 = c_list[0]
    expected = 2 * additive_span_size(p, [_residue(c, p) - _residue(c0, p) for c in c_list])
    if a.order != expected:
        raise OrderMismatch(f"|A| = {a.order}, expected {expected}")
    return a


def construct_B(p: int, b_list: Sequence, cap: int | None = None) -> MatrixGroup:
    """Group generated by the corner transvections with top-right entries ``b_list``."""
    check_modulus(p)
    return closure(p, [corner(p, b) for b in b_list], cap)


def example_generators(p: int) -> list[Matrix3]:
    """Generators of the D_p x Z_p counterexample group."""
    return [
        Matrix3.from_rows([[1, 1, 0], [0, -1, 0], [0, 0, 1]], p),
        Matrix3.from_rows([[1, 0, 0], [0, -1, 1], [0, 0, 1]], p),
        Matrix3.from_rows([[1, 0, 1], [0, 1, 0], [0, 0, 1]], p),
    ]


def example_group(p: int) -> MatrixGroup:
    return closure(p, example_generators(p))
