"""Independent oracles and random generators shared by the tests."""

import itertools
import random

from trinv.algebra import Matrix3
from trinv.poly import Polynomial, monomial_basis


def brute_inverse(a, p):
    return next(b for b in range(p) if a * b % p == 1)


def kernel_dim(m: Matrix3) -> int:
    """dim ker m by counting solutions over F_p."""
    p = m.p
    rows = m.rows()
    count = sum(
        1 for v in itertools.product(range(p), repeat=3)
        if all(sum(r[j] * v[j] for j in range(3)) % p == 0 for r in rows)
    )
    k = 0
    while p**k < count:
        k += 1
    assert p**k == count
    return k


def naive_mul(a: Matrix3, b: Matrix3) -> Matrix3:
    A, B = a.rows(), b.rows()
    return Matrix3.from_rows(
        [[sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3)] for i in range(3)], a.p
    )


def naive_closure(p, gens):
    """Repeatedly multiply everything by everything until nothing new appears."""
    elems = {Matrix3.identity(p), *gens}
    while True:
        new = {naive_mul(a, b) for a in elems for b in elems} | elems
        if new == elems:
            return elems
        elems = new


def random_matrix(rng: random.Random, p: int, upper=False, invertible=True) -> Matrix3:
    while True:
        e = [rng.randrange(p) for _ in range(9)]
        if upper:
            e[3] = e[6] = e[7] = 0
        m = Matrix3(p, tuple(e))
        if not invertible or m.det():
            return m


def random_poly(rng: random.Random, p: int, degree: int, homogeneous=True, density=0.6) -> Polynomial:
    degs = [degree] if homogeneous else range(degree + 1)
    terms = {m: rng.randrange(p) for d in degs for m in monomial_basis(d) if rng.random() < density}
    f = Polynomial(terms, p)
    if f.is_zero():
        f = Polynomial({monomial_basis(degree)[rng.randrange(degree + 1)]: 1}, p)
    return f


def series_by_counting(degrees, D):
    """Number of (a, b, c) >= 0 with a*d1 + b*d2 + c*d3 = d, for d <= D."""
    d1, d2, d3 = degrees
    out = []
    for d in range(D + 1):
        out.append(sum(
            1 for a in range(d // d1 + 1) for b in range((d - a * d1) // d2 + 1)
            if (d - a * d1 - b * d2) % d3 == 0
        ))
    return out


def count_invariant_forms(group, d):
    """Count invariant degree-d forms by enumerating every form over F_p."""
    from trinv.action import apply

    basis = monomial_basis(d)
    p = group.p
    count = 0
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        f = Polynomial(dict(zip(basis, coeffs)), p)
        if all(apply(g, f) == f for g in group.elements):
            count += 1
    return count


def elementary_symmetric_product(p, alphas):
    """prod over alpha of (x + alpha*y), coefficients via elementary symmetric sums."""
    n = len(alphas)
    terms = {}
    for k in range(n + 1):
        e_k = sum(
            _prod(c) for c in itertools.combinations(alphas, k)
        )
        terms[(n - k, k, 0)] = e_k
    return Polynomial(terms, p)


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out
