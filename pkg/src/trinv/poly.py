"""Sparse polynomials in x, y, z over F_p.

Terms are stored as ``{(ex, ey, ez): coeff}`` with coefficients in ``[1, p)``.
Monomials are ordered by total degree, then lexicographically with
x > y > z; rendering lists terms from largest to smallest, e.g.
``2*x*z + 2*y^2``.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping

from trinv.algebra import FieldElement, Matrix3, _residue, check_modulus, half
from trinv.errors import ModulusMismatch

VARIABLES = ("x", "y", "z")

Monomial = tuple  # (ex, ey, ez)


def monomial_key(m: Monomial) -> tuple:
    """Sort key; larger key means larger monomial."""
    return (sum(m),) + tuple(m)


def monomial_basis(d: int) -> list[Monomial]:
    """All degree-``d`` monomials, largest first."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    basis = [(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]
    assert len(basis) == comb(d + 2, 2)
    return basis


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


class Polynomial:
    """An immutable polynomial over F_p."""

    __slots__ = ("p", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None, p: int = 3):
        self.p = check_modulus(p)
        clean = {}
        for mono, c in (terms or {}).items():
            c = _residue(c, p)
            if c:
                mono = tuple(int(e) for e in mono)
                if len(mono) != 3 or min(mono) < 0:
                    raise ValueError(f"bad exponent vector {mono}")
                clean[mono] = (clean.get(mono, 0) + c) % p
                if not clean[mono]:
                    del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, p: int) -> "Polynomial":
        # terms already reduced and free of zeros
        obj = cls.__new__(cls)
        obj.p = p
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, p: int) -> "Polynomial":
        return cls({(0, 0, 0): c}, p)

    @classmethod
    def var(cls, name: str, p: int) -> "Polynomial":
        i = VARIABLES.index(name)
        e = [0, 0, 0]
        e[i] = 1
        return cls({tuple(e): 1}, p)

    @classmethod
    def linear(cls, coeffs: Iterable, p: int) -> "Polynomial":
        """``a*x + b*y + c*z`` from ``(a, b, c)``."""
        return cls(dict(zip([(1, 0, 0), (0, 1, 0), (0, 0, 1)], coeffs)), p)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, mono: Monomial) -> int:
        return self._terms.get(tuple(mono), 0)

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms, key=monomial_key, reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, var: str) -> int:
        i = VARIABLES.index(var)
        return max((m[i] for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw({m: c for m, c in self._terms.items() if sum(m) == d}, self.p)

    def _check(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.p != self.p:
                raise ModulusMismatch(f"polynomials over F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return Polynomial._raw({m: p - c for m, c in self._terms.items()}, p)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(1, self.p)
        base = self
        while k:
            if k & 1:
                result = poly_mul(result, base)
            k >>= 1
            if k:
                base = poly_mul(base, base)
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.p == other.p and self._terms == other._terms
        if isinstance(other, int):
            return self == Polynomial.constant(other, self.p)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __call__(self, *point):
        return evaluate(self, point)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Polynomial({render(self)!r}, p={self.p})"


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.p != g.p:
        raise ModulusMismatch(f"polynomials over F_{f.p} and F_{g.p}")
    p = f.p
    out = dict(f._terms)
    for m, c in g._terms.items():
        s = (out.get(m, 0) + c) % p
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return Polynomial._raw(out, p)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.p != g.p:
        raise ModulusMismatch(f"polynomials over F_{f.p} and F_{g.p}")
    p = f.p
    out: dict = {}
    for m1, c1 in f._terms.items():
        for m2, c2 in g._terms.items():
            m = _mono_mul(m1, m2)
            out[m] = (out.get(m, 0) + c1 * c2) % p
    return Polynomial._raw({m: c for m, c in out.items() if c}, p)


def _linear_forms(m: Matrix3) -> list[Polynomial]:
    # variable i goes to row i of m dotted with (x, y, z)
    return [
        Polynomial._raw(
            {mono: c for mono, c in zip([(1, 0, 0), (0, 1, 0), (0, 0, 1)], m.rows()[i]) if c},
            m.p,
        )
        for i in range(3)
    ]


def substitute_linear(f: Polynomial, m: Matrix3) -> Polynomial:
    """Return the polynomial ``v -> f(m v)``."""
    if f.p != m.p:
        raise ModulusMismatch(f"polynomial over F_{f.p}, matrix over F_{m.p}")
    p = f.p
    forms = _linear_forms(m)
    powers: list[dict[int, Polynomial]] = [{}, {}, {}]

    def power(i: int, k: int) -> Polynomial:
        if k not in powers[i]:
            powers[i][k] = forms[i] ** k
        return powers[i][k]

    out = Polynomial._raw({}, p)
    for mono, c in f._terms.items():
        term = Polynomial.constant(c, p)
        for i, k in enumerate(mono):
            if k:
                term = poly_mul(term, power(i, k))
        out = poly_add(out, term)
    return out


def evaluate(f: Polynomial, point) -> FieldElement:
    if len(point) != 3:
        raise ValueError("point must have three coordinates")
    p = f.p
    vals = [_residue(a, p) for a in point]
    total = 0
    for (a, b, c), coef in f._terms.items():
        total += coef * pow(vals[0], a, p) * pow(vals[1], b, p) * pow(vals[2], c, p)
    return FieldElement(total % p, p)


def render(f: Polynomial) -> str:
    """Canonical text form: largest monomial first, residues in ``[0, p)``."""
    if f.is_zero():
        return "0"
    parts = []
    for mono in f.monomials():
        c = f._terms[mono]
        factors = [
            name if e == 1 else f"{name}^{e}" for name, e in zip(VARIABLES, mono) if e
        ]
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append("*".join([str(c)] + factors))
    return " + ".join(parts)


def shifted_x(p: int, s, c) -> Polynomial:
    """The linear form ``x + ((s - c)/2) y``."""
    return Polynomial.linear((1, half(_residue(s, p) - _residue(c, p), p), 0), p)


def restrict(f: Polynomial, var: str, value) -> Polynomial:
    """Set one variable to a constant."""
    i = VARIABLES.index(var)
    p = f.p
    v = _residue(value, p)
    out: dict = {}
    for mono, c in f._terms.items():
        k = mono[i]
        if k and not v:
            continue
        m = list(mono)
        m[i] = 0
        m = tuple(m)
        out[m] = (out.get(m, 0) + c * pow(v, k, p)) % p
    return Polynomial._raw({m: c for m, c in out.items() if c}, p)
