import pytest

from trinv.action import is_invariant, is_invariant_all
from trinv.errors import NotHomogeneous, NotInvariant
from trinv.group import closure, construct_A, construct_B, example_group
from trinv.invariants import (
    HsopCertificate, HsopUnknown, b_sigma_group, construct_A_invariants, construct_B_invariants,
    construct_B_sigma_invariants, degree_triples, first_mismatch, hilbert_falsify, hilbert_function,
    hsop_check, ideal_contains, invariant_basis, product_series,
)
from trinv.poly import Polynomial, monomial_basis, render

from helpers import count_invariant_forms, series_by_counting


def V(name, p=3):
    return Polynomial.var(name, p)


def test_product_series_matches_counting():
    for degrees in [(1, 1, 1), (1, 2, 3), (1, 1, 5), (2, 3, 3), (1, 3, 6), (2, 2, 9)]:
        assert product_series(degrees, 15) == series_by_counting(degrees, 15)


def test_degree_triples():
    assert degree_triples(1) == [(1, 1, 1)]
    assert degree_triples(18) == [(1, 1, 18), (1, 2, 9), (1, 3, 6), (2, 3, 3)]
    for n in range(1, 60):
        for t in degree_triples(n):
            assert t[0] * t[1] * t[2] == n and t[0] <= t[1] <= t[2]


def test_invariant_basis_examples():
    assert len(invariant_basis(closure(3, []), 2)) == 6
    lin = invariant_basis(example_group(3), 1)
    assert lin == [V("z")]
    a = construct_A(3, 0, [0, 1])
    f2 = construct_A_invariants(3, 0, [0, 1])[1]
    basis = invariant_basis(a, 2)
    assert ideal_contains(basis, f2)  # f2 in the span of the degree-2 basis


def test_invariant_basis_is_fixed_by_all_elements():
    for g in (example_group(3), construct_A(5, 2, [0, 3]), b_sigma_group(5, 1, 2, [1])):
        for d in range(5):
            for f in invariant_basis(g, d):
                assert is_invariant_all(g, f)


def test_invariant_basis_echelon():
    basis = invariant_basis(example_group(3), 6)
    leads = [f.monomials()[0] for f in basis]
    assert leads == sorted(set(leads), key=lambda m: monomial_basis(6).index(m))
    for i, f in enumerate(basis):
        for j, g in enumerate(basis):
            assert g.coeff(leads[i]) == (1 if i == j else 0)


@pytest.mark.parametrize("make", [
    lambda: example_group(3),
    lambda: construct_A(3, 1, [0, 2]),
    lambda: construct_B(3, [1]),
    lambda: b_sigma_group(3, 0, 1, [2]),
])
def test_dimensions_by_enumeration(make):
    # count all forms fixed by every element: p^dim of the invariant space
    g = make()
    hf = hilbert_function(g, 2)
    for d in range(3):
        assert count_invariant_forms(g, d) == 3 ** hf[d]


def test_hilbert_all_elements_agrees():
    for g in (example_group(3), construct_A(5, 0, [0, 1])):
        assert hilbert_function(g, 6) == hilbert_function(g, 6, use_all_elements=True)


def test_hilbert_examples():
    assert hilbert_function(closure(5, []), 8).dims == tuple(product_series((1, 1, 1), 8))
    assert hilbert_function(construct_B(3, [1]), 10).dims == tuple(product_series((1, 1, 3), 10))
    assert hilbert_function(construct_A(3, 0, [0, 1]), 10).dims == tuple(product_series((1, 2, 3), 10))
    assert hilbert_function(example_group(5), 0).dims == (1,)


def test_hsop_trivial_and_degenerate():
    g = closure(3, [])
    x, y, z = V("x"), V("y"), V("z")
    cert = hsop_check(g, [x, y, z])
    assert isinstance(cert, HsopCertificate)
    assert cert.power_exponents == {"x": 1, "y": 1, "z": 1} and cert.degree_product_ok
    for n in (1, 3, 8):
        res = hsop_check(g, [x, x * y, x * z], n)
        assert isinstance(res, HsopUnknown) and set(res.missing) == {"y", "z"}


def test_hsop_errors():
    g = example_group(3)
    with pytest.raises(NotInvariant):
        hsop_check(g, [V("z"), V("x"), V("y")])
    with pytest.raises(NotHomogeneous):
        hsop_check(g, [V("z"), V("z") + V("z") ** 2, V("z")])
    with pytest.raises(NotHomogeneous):
        hsop_check(g, [V("z"), Polynomial({}, 3), V("z")])


def test_hsop_A_family():
    a = construct_A(3, 0, [0, 1])
    fs = construct_A_invariants(3, 0, [0, 1])
    cert = hsop_check(a, fs)
    assert cert.certified and cert.degrees == (1, 2, 3) and cert.degree_product_ok


def test_hsop_product_mismatch_flagged():
    # {z, f2'' , EN_B} is an hsop for B but the product is 2p != |B|
    b = construct_B(3, [1])
    fs = construct_B_sigma_invariants(3, 0, 0, [1])
    cert = hsop_check(b, fs)
    assert cert.certified and not cert.degree_product_ok


def test_construct_A_invariants_examples():
    z, f2, f3 = construct_A_invariants(3, 0, [0])
    assert z == V("z")
    assert render(f2) == "2*x*z + 2*y^2"  # -y^2 + 2xz
    assert f3 == V("x")
    assert construct_A_invariants(3, 0, [0, 1])[2].degree() == 3


def test_construct_B_invariants_examples():
    assert construct_B_invariants(3, []) == (V("z"), V("y"), V("x"))
    fs = construct_B_invariants(3, [1])
    assert fs[2].degree() == 3
    b = construct_B(3, [1])
    assert all(is_invariant(b, f) for f in fs)


def test_construct_B_sigma_invariants_examples():
    fs = construct_B_sigma_invariants(3, 0, 0, [1])
    assert [f.degree() for f in fs] == [1, 2, 3]
    assert fs[1] == -V("y") ** 2
    g = b_sigma_group(3, 0, 0, [1])
    assert g.order == 6
    assert all(is_invariant(g, f) for f in fs)
    cert = hsop_check(g, fs)
    assert cert.certified and cert.degree_product_ok


def test_falsifier_examples():
    rep = hilbert_falsify(closure(3, []), 5)
    assert rep.survivors == [(1, 1, 1)] and not rep.certified_nonpolynomial
    rep = hilbert_falsify(example_group(3), 12)
    assert rep.certified_nonpolynomial and rep.verdict == "non-polynomial (certified)"
    rep = hilbert_falsify(construct_A(3, 0, [0, 1]), 10)
    assert (1, 2, 3) in rep.survivors and rep.verdict == "inconclusive at D=10"
    with pytest.raises(ValueError):
        hilbert_falsify(closure(3, []), 0)


def test_certificate_implies_series_and_no_falsification():
    cases = []
    for p in (3, 5):
        cases.append((construct_A(p, 1, [0, 1]), construct_A_invariants(p, 1, [0, 1])))
        cases.append((construct_B(p, [1]), construct_B_invariants(p, [1])))
        cases.append((b_sigma_group(p, 1, 0, [1]), construct_B_sigma_invariants(p, 1, 0, [1])))
    for g, fs in cases:
        cert = hsop_check(g, fs)
        assert cert.certified and cert.degree_product_ok
        hf = hilbert_function(g, 10)
        assert first_mismatch(hf, cert.degrees) is None
        assert not hilbert_falsify(g, 10).certified_nonpolynomial


def test_hsop_monotone_in_nmax():
    g = construct_A(5, 0, [0, 1])
    fs = construct_A_invariants(5, 0, [0, 1])
    base = hsop_check(g, fs)
    for n in range(sum(base.degrees), sum(base.degrees) + 4):
        again = hsop_check(g, fs, n)
        assert again.certified and again.power_exponents == base.power_exponents
