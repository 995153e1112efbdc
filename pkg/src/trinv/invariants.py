"""Graded invariant spaces by linear algebra over F_p.

Everything here reduces to nullspaces and span membership on the monomial
basis of a single degree, so dimensions agree with those over the algebraic
closure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from trinv.action import effective_norm, is_invariant
from trinv.algebra import Matrix3, _residue, mat_inverse, nullspace, rref
from trinv.errors import NotHomogeneous, NotInvariant
from trinv.group import MatrixGroup, closure, construct_A, construct_B, construct_sigma, corner
from trinv.poly import (
    VARIABLES,
    Polynomial,
    monomial_basis,
    poly_mul,
    shifted_x,
    substitute_linear,
)

DEFAULT_FALSIFY_DEGREE = 12


def _to_vector(f: Polynomial, index: dict) -> list[int]:
    v = [0] * len(index)
    for m, c in f.items():
        v[index[m]] = c
    return v


def _from_vector(v: Sequence[int], basis: Sequence, p: int) -> Polynomial:
    return Polynomial({m: c for m, c in zip(basis, v) if c}, p)


def degree_action(g: Matrix3, d: int) -> list[list[int]]:
    """Matrix of ``f -> g.f`` on degree-``d`` forms; column j is the image of basis[j]."""
    basis = monomial_basis(d)
    index = {m: i for i, m in enumerate(basis)}
    ginv = mat_inverse(g)
    forms = [substitute_linear(Polynomial.var(v, g.p), ginv) for v in VARIABLES]
    powers: list[dict] = [{0: Polynomial.constant(1, g.p)} for _ in range(3)]

    def power(i, k):
        if k not in powers[i]:
            powers[i][k] = poly_mul(power(i, k - 1), forms[i])
        return powers[i][k]

    cols = []
    for m in basis:
        img = poly_mul(poly_mul(power(0, m[0]), power(1, m[1])), power(2, m[2]))
        cols.append(_to_vector(img, index))
    n = len(basis)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def invariant_basis(g: MatrixGroup, d: int, use_all_elements: bool = False) -> list[Polynomial]:
    """Echelonized basis of the degree-``d`` invariants, leading monomials decreasing."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    basis = monomial_basis(d)
    n = len(basis)
    p = g.p
    mats = g.elements if use_all_elements else g.generators
    rows = []
    for h in mats:
        if h.is_identity():
            continue
        a = degree_action(h, d)
        for i in range(n):
            row = list(a[i])
            row[i] -= 1
            if any(x % p for x in row):
                rows.append(row)
    vecs = nullspace(rows, n, p) if rows else [[int(i == j) for j in range(n)] for i in range(n)]
    return [_from_vector(v, basis, p) for v in vecs]


@dataclass(frozen=True)
class HilbertFunction:
    dims: tuple

    def __getitem__(self, d):
        return self.dims[d]

    def __len__(self):
        return len(self.dims)

    @property
    def max_degree(self) -> int:
        return len(self.dims) - 1


def hilbert_function(g: MatrixGroup, D: int, use_all_elements: bool = False) -> HilbertFunction:
    if D < 0:
        raise ValueError("D must be non-negative")
    dims = tuple(len(invariant_basis(g, d, use_all_elements)) for d in range(D + 1))
    assert dims[0] == 1 and all(dims[d] <= comb(d + 2, 2) for d in range(D + 1))
    return HilbertFunction(dims)


def product_series(degrees: Sequence[int], D: int) -> list[int]:
    """Coefficients of prod 1/(1 - t^d) up to t^D."""
    coeffs = [1] + [0] * D
    for d in degrees:
        for k in range(d, D + 1):
            coeffs[k] += coeffs[k - d]
    return coeffs


def first_mismatch(hf: HilbertFunction, degrees: Sequence[int]) -> int | None:
    series = product_series(degrees, hf.max_degree)
    return next((d for d, (a, b) in enumerate(zip(hf.dims, series)) if a != b), None)


@dataclass(frozen=True)
class HsopCertificate:
    """Witness that three homogeneous invariants have only 0 as a common zero.

    ``power_exponents[v]`` is the least N with v^N in the ideal of ``polys``.
    """

    polys: tuple
    degrees: tuple
    power_exponents: dict
    group_order: int
    degree_product_ok: bool
    n_max: int

    certified = True


@dataclass(frozen=True)
class HsopUnknown:
    """No witness up to ``n_max`` for the variables in ``missing``; not a refutation."""

    polys: tuple
    degrees: tuple
    power_exponents: dict
    missing: tuple
    n_max: int
    group_order: int

    certified = False


class _IdealSlice:
    """Degree-N part of a homogeneous ideal, kept in reduced echelon form."""

    def __init__(self, polys: Sequence[Polynomial], N: int, p: int):
        self.basis = monomial_basis(N)
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.p = p
        rows = []
        for f in polys:
            k = N - f.degree()
            if k < 0:
                continue
            for m in monomial_basis(k):
                rows.append(_to_vector(poly_mul(Polynomial({m: 1}, p), f), self.index))
        self.rows, self.pivots = rref(rows, len(self.basis), p) if rows else ([], [])

    def contains(self, f: Polynomial) -> bool:
        v = _to_vector(f, self.index)
        p = self.p
        for row, pc in zip(self.rows, self.pivots):
            if v[pc]:
                c = v[pc]
                v = [(a - c * b) % p for a, b in zip(v, row)]
        return not any(v)


def ideal_contains(polys: Sequence[Polynomial], f: Polynomial) -> bool:
    """Membership of a homogeneous ``f`` in the ideal of homogeneous ``polys``."""
    if f.is_zero():
        return True
    return _IdealSlice(polys, f.degree(), f.p).contains(f)


def hsop_check(
    g: MatrixGroup, polys: Sequence[Polynomial], n_max: int | None = None
) -> HsopCertificate | HsopUnknown:
    polys = tuple(polys)
    if len(polys) != 3:
        raise ValueError("need exactly three polynomials")
    for f in polys:
        if f.is_zero() or not f.is_homogeneous():
            raise NotHomogeneous(f"{f} is not a nonzero homogeneous polynomial")
        if f.p != g.p:
            raise NotInvariant(f"{f} lives over F_{f.p}, group over F_{g.p}")
        if not is_invariant(g, f):
            raise NotInvariant(f"{f} is not invariant")
    degrees = tuple(f.degree() for f in polys)
    if n_max is None:
        n_max = sum(degrees)
    p = g.p
    found: dict = {}
    for N in range(1, n_max + 1):
        if len(found) == 3:
            break
        slice_ = _IdealSlice(polys, N, p)
        for v in VARIABLES:
            if v not in found and slice_.contains(Polynomial.var(v, p) ** N):
                found[v] = N
    ok = degrees[0] * degrees[1] * degrees[2] == g.order
    if len(found) == 3:
        return HsopCertificate(polys, degrees, found, g.order, ok, n_max)
    missing = tuple(v for v in VARIABLES if v not in found)
    return HsopUnknown(polys, degrees, found, missing, n_max, g.order)


# Explicit invariants of the A, B and <B, sigma> families.

def construct_A_invariants(p: int, s, c_list: Sequence) -> tuple[Polynomial, Polynomial, Polynomial]:
    a = construct_A(p, s, c_list)
    c = _residue(c_list[0], p)
    y, z = Polynomial.var("y", p), Polynomial.var("z", p)
    xs = shifted_x(p, s, c)
    f2 = y * (c * z - y) + 2 * xs * z
    return z, f2, effective_norm(a, xs)


def construct_B_invariants(p: int, b_list: Sequence, s=0, c=0) -> tuple[Polynomial, Polynomial, Polynomial]:
    b = construct_B(p, b_list)
    return Polynomial.var("z", p), Polynomial.var("y", p), effective_norm(b, shifted_x(p, s, c))


def b_sigma_group(p: int, s, c, b_list: Sequence) -> MatrixGroup:
    return closure(p, [corner(p, b) for b in b_list] + [construct_sigma(p, s, c)])


def construct_B_sigma_invariants(p: int, s, c, b_list: Sequence) -> tuple[Polynomial, Polynomial, Polynomial]:
    b = construct_B(p, b_list)
    c = _residue(c, p)
    y, z = Polynomial.var("y", p), Polynomial.var("z", p)
    return z, y * (c * z - y), effective_norm(b, shifted_x(p, s, c))


@dataclass(frozen=True)
class FalsifierReport:
    """Degree triples with product |G| checked against the Hilbert function.

    ``candidates`` maps each triple to its first mismatching degree, or None
    when it agrees up to ``D``.
    """

    group_order: int
    D: int
    hf: HilbertFunction
    candidates: dict = field(default_factory=dict)

    @property
    def survivors(self) -> list[tuple]:
        return [t for t, d in self.candidates.items() if d is None]

    @property
    def certified_nonpolynomial(self) -> bool:
        return not self.survivors

    @property
    def verdict(self) -> str:
        if self.certified_nonpolynomial:
            return "non-polynomial (certified)"
        return f"inconclusive at D={self.D}"


def degree_triples(n: int) -> list[tuple[int, int, int]]:
    out = []
    for a in range(1, n + 1):
        if n % a:
            continue
        for b in range(a, n // a + 1):
            if (n // a) % b == 0 and n // a // b >= b:
                out.append((a, b, n // a // b))
    return out


def hilbert_falsify(g: MatrixGroup, D: int = DEFAULT_FALSIFY_DEGREE) -> FalsifierReport:
    """If the invariant ring were polynomial, some triple here would survive at every D."""
    if D < 1:
        raise ValueError("D must be at least 1")
    hf = hilbert_function(g, D)
    cands = {t: first_mismatch(hf, t) for t in degree_triples(g.order)}
    return FalsifierReport(g.order, D, hf, cands)
