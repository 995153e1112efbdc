"""Exact arithmetic in F_p and on 3x3 matrices over F_p.

Matrices store canonical residues in ``[0, p)`` as plain ints; scalars that
travel through the public API may be given either as ints or as
:class:`FieldElement`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from trinv.errors import (
    EvenCharacteristic,
    ModulusMismatch,
    NotPrime,
    Singular,
    ZeroInverse,
)

N = 3


@lru_cache(maxsize=None)
def check_modulus(p: int) -> int:
    """Validate ``p`` as an odd prime and return it."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise NotPrime(f"modulus must be an integer, got {p!r}")
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported (formulas divide by 2)")
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise NotPrime(f"{p} is not prime")
    return p


def _residue(a, p: int) -> int:
    if isinstance(a, FieldElement):
        if a.p != p:
            raise ModulusMismatch(f"element of F_{a.p} used over F_{p}")
        return a.value
    return int(a) % p


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class FieldElement:
    """A residue class in F_p."""

    value: int
    p: int

    def __post_init__(self):
        check_modulus(self.p)
        object.__setattr__(self, "value", int(self.value) % self.p)

    def _other(self, other) -> int:
        return _residue(other, self.p)

    def __add__(self, other):
        return FieldElement(self.value + self._other(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.value - self._other(other), self.p)

    def __rsub__(self, other):
        return FieldElement(self._other(other) - self.value, self.p)

    def __mul__(self, other):
        return FieldElement(self.value * self._other(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def __truediv__(self, other):
        return self * inverse(FieldElement(self._other(other), self.p))

    def __pow__(self, k: int):
        if k < 0:
            return inverse(self) ** (-k)
        return FieldElement(pow(self.value, k, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"FieldElement({self.value}, p={self.p})"


def inverse(a: FieldElement) -> FieldElement:
    return FieldElement(inv_mod(a.value, a.p), a.p)


def half(a, p: int) -> int:
    """``a / 2`` in F_p."""
    return _residue(a, p) * inv_mod(2, p) % p


@dataclass(frozen=True, order=True)
class Matrix3:
    """A 3x3 matrix over F_p; ``entries`` is the row-major 9-tuple of residues.

    Ordering compares ``(p, entries)`` so sorting a group's elements gives the
    lexicographic order on entry tuples.
    """

    p: int
    entries: tuple

    def __post_init__(self):
        check_modulus(self.p)
        ent = tuple(_residue(a, self.p) for a in self.entries)
        if len(ent) != N * N:
            raise ValueError(f"expected 9 entries, got {len(ent)}")
        object.__setattr__(self, "entries", ent)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], p: int) -> "Matrix3":
        if len(rows) != N or any(len(r) != N for r in rows):
            raise ValueError("matrix must be 3x3")
        return cls(p, tuple(a for r in rows for a in r))

    @classmethod
    def identity(cls, p: int) -> "Matrix3":
        return cls(p, (1, 0, 0, 0, 1, 0, 0, 0, 1))

    @classmethod
    def zero(cls, p: int) -> "Matrix3":
        return cls(p, (0,) * 9)

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[N * i + j]

    def rows(self) -> list[list[int]]:
        e = self.entries
        return [list(e[0:3]), list(e[3:6]), list(e[6:9])]

    def element(self, i: int, j: int) -> FieldElement:
        return FieldElement(self[i, j], self.p)

    def __matmul__(self, other: "Matrix3") -> "Matrix3":
        return mat_mul(self, other)

    def __sub__(self, other: "Matrix3") -> "Matrix3":
        _same(self, other)
        return Matrix3(self.p, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __add__(self, other: "Matrix3") -> "Matrix3":
        _same(self, other)
        return Matrix3(self.p, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 0, 1, 0, 0, 0, 1)

    def is_upper_triangular(self) -> bool:
        e = self.entries
        return e[3] == 0 and e[6] == 0 and e[7] == 0

    def is_unipotent_triangular(self) -> bool:
        e = self.entries
        return self.is_upper_triangular() and e[0] == e[4] == e[8] == 1

    def diagonal(self) -> tuple:
        return self.entries[0], self.entries[4], self.entries[8]

    def det(self) -> int:
        a, b, c, d, e, f, g, h, i = self.entries
        return (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % self.p

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows()) + "]"


def _same(a: Matrix3, b: Matrix3) -> None:
    if a.p != b.p:
        raise ModulusMismatch(f"matrices over F_{a.p} and F_{b.p}")


def mat_mul(a: Matrix3, b: Matrix3) -> Matrix3:
    _same(a, b)
    x, y = a.entries, b.entries
    return Matrix3(
        a.p,
        tuple(
            x[3 * i] * y[j] + x[3 * i + 1] * y[3 + j] + x[3 * i + 2] * y[6 + j]
            for i in range(3)
            for j in range(3)
        ),
    )


def mat_inverse(m: Matrix3) -> Matrix3:
    """Inverse via the adjugate."""
    p = m.p
    d = m.det()
    if d == 0:
        raise Singular(f"matrix {m} is singular mod {p}")
    a, b, c, d_, e, f, g, h, i = m.entries
    adj = (
        e * i - f * h, c * h - b * i, b * f - c * e,
        f * g - d_ * i, a * i - c * g, c * d_ - a * f,
        d_ * h - e * g, b * g - a * h, a * e - b * d_,
    )
    k = inv_mod(d, p)
    return Matrix3(p, tuple(x * k for x in adj))


def mat_pow(m: Matrix3, k: int) -> Matrix3:
    result = Matrix3.identity(m.p)
    base = m if k >= 0 else mat_inverse(m)
    k = abs(k)
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def order(m: Matrix3) -> int:
    """Multiplicative order of an invertible matrix."""
    if m.det() == 0:
        raise Singular(f"matrix {m} is singular mod {m.p}")
    k, power = 1, m
    while not power.is_identity():
        power = mat_mul(power, m)
        k += 1
    return k


def rank(m: Matrix3) -> int:
    return matrix_rank(m.rows(), m.p)


# Generic row reduction over F_p, used by the graded linear algebra too.

def rref(rows: Iterable[Sequence[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; pivots are taken at the leftmost column.

    Returns the nonzero rows and their pivot columns.
    """
    mat = [[a % p for a in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        k = inv_mod(mat[r][col], p)
        row = [a * k % p for a in mat[r]]
        mat[r] = row
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                c = mat[i][col]
                mat[i] = [(a - c * b) % p for a, b in zip(mat[i], row)]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def matrix_rank(rows: Sequence[Sequence[int]], p: int) -> int:
    if not rows:
        return 0
    return len(rref(rows, len(rows[0]), p)[1])


def nullspace(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of ``{v : rows . v = 0}``, returned in reduced echelon form."""
    red, pivots = rref(rows, ncols, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = -row[f] % p
        basis.append(v)
    if not basis:
        return []
    return rref(basis, ncols, p)[0]
