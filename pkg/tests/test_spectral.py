import random
from fractions import Fraction as F

import pytest

from tpbases.bases import BasisFamily, BasisSpec, standard_nodes
from tpbases.errors import DomainError, SpectralAssumptionError
from tpbases.linalg import as_matrix, collocation_matrix, identity, kronecker
from tpbases.render import render_enclosure
from tpbases.spectral import (
    RootEnclosure,
    char_poly,
    float_crosscheck,
    isolate_real_roots,
    kron_min_spectral,
    min_eigenvalue,
    min_singular_value,
    poly_eval,
    refine_root,
    spectral_report,
    sqrt_enclosure,
    squarefree_decomposition,
    sturm_chain,
)

TOL30 = F(1, 10**30)


def frs(*values):
    return [F(v) for v in values]


# --- characteristic polynomials ---

def test_char_poly_2x2():
    m = as_matrix([[F(2, 3), F(1, 3)], [F(1, 3), F(2, 3)]])
    assert char_poly(m) == frs(F(1, 3), F(-4, 3), 1)


def test_char_poly_identity():
    # (x - 1)^3
    assert char_poly(identity(3)) == frs(-1, 3, -3, 1)


def test_char_poly_diagonal():
    m = as_matrix([[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    assert char_poly(m) == frs(-6, 11, -6, 1)


def test_char_poly_guard():
    with pytest.raises(DomainError):
        char_poly(identity(13))


# --- root isolation ---

def test_isolate_two_roots():
    roots = isolate_real_roots(frs(2, -3, 1))  # (x-1)(x-2)
    assert len(roots) == 2
    assert roots[0].low < 1 < roots[0].high
    assert roots[1].low < 2 < roots[1].high
    assert roots[0].high <= roots[1].low


def test_isolate_no_real_roots():
    assert isolate_real_roots(frs(1, 0, 1)) == []


def test_isolate_zero_polynomial_rejected():
    with pytest.raises(DomainError):
        isolate_real_roots([])


def test_isolate_bernstein_char_poly_positive_spectrum():
    m = collocation_matrix(BasisSpec(BasisFamily.BERNSTEIN, 3), standard_nodes(3))
    roots = isolate_real_roots(char_poly(m))
    assert len(roots) == 4
    refined = [refine_root(r, F(1, 10**6)) for r in roots]
    assert all(r.low > 0 for r in refined)
    for r1, r2 in zip(roots, roots[1:]):
        assert r1.high <= r2.low


def test_isolate_handles_dyadic_root_hit():
    # roots 1/2 and 3/4 force exact hits at bisection midpoints
    p = frs(F(3, 8), F(-5, 4), 1)
    roots = isolate_real_roots(p)
    assert len(roots) == 2
    assert roots[0].low < F(1, 2) < roots[0].high
    assert roots[1].low < F(3, 4) < roots[1].high


def test_enclosure_sign_check():
    for p in (frs(2, -3, 1), frs(-2, 0, 1), frs(F(3, 8), F(-5, 4), 1)):
        for enc in isolate_real_roots(p):
            q = list(enc.polynomial)
            assert poly_eval(q, enc.low) * poly_eval(q, enc.high) <= 0


# --- refinement ---

def test_refine_rational_root():
    enc = next(e for e in isolate_real_roots(frs(2, -3, 1)) if e.low < 1 < e.high)
    tight = refine_root(enc, TOL30)
    assert tight.width <= TOL30
    assert tight.low < 1 < tight.high


def test_refine_sqrt2():
    enc = isolate_real_roots(frs(-2, 0, 1))[1]  # positive root
    tight = refine_root(enc, F(1, 10**10))
    assert tight.width <= F(1, 10**10)
    assert tight.low**2 < 2 < tight.high**2
    assert str(float(tight.midpoint)).startswith("1.4142135623")


def test_refine_idempotent_at_tolerance():
    enc = refine_root(isolate_real_roots(frs(-2, 0, 1))[1], F(1, 10**8))
    assert refine_root(enc, F(1, 10**6)) == enc


def test_refine_rejects_bad_tolerance():
    enc = isolate_real_roots(frs(-2, 0, 1))[1]
    with pytest.raises(DomainError):
        refine_root(enc, F(0))


# --- squarefree handling ---

def test_squarefree_decomposition():
    # (x-1)^2 (x-2) = x^3 - 4x^2 + 5x - 2
    parts = squarefree_decomposition(frs(-2, 5, -4, 1))
    assert sorted((tuple(f), m) for f, m in parts) == [
        ((F(-2), F(1)), 1),
        ((F(-1), F(1)), 2),
    ]


def test_min_eigenvalue_with_multiplicity():
    m = as_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    enc = min_eigenvalue(m, TOL30)
    assert enc.low < 1 < enc.high


# --- minimal eigenvalue / singular value ---

def test_min_eigenvalue_2x2():
    m = as_matrix([[F(2, 3), F(1, 3)], [F(1, 3), F(2, 3)]])
    enc = min_eigenvalue(m, TOL30)
    assert enc.low < F(1, 3) < enc.high
    assert enc.width <= TOL30


def test_min_eigenvalue_identity():
    enc = min_eigenvalue(identity(4), TOL30)
    assert enc.low < 1 < enc.high


def test_min_eigenvalue_rejects_complex_spectrum():
    with pytest.raises(SpectralAssumptionError):
        min_eigenvalue(as_matrix([[0, -1], [1, 0]]), TOL30)


def test_min_singular_value_permutation():
    enc = min_singular_value(as_matrix([[0, 1], [1, 0]]), TOL30)
    assert enc.low < 1 < enc.high  # sigma^2 enclosure


def test_min_singular_value_diagonal():
    enc = min_singular_value(as_matrix([[2, 0], [0, 3]]), TOL30)
    assert enc.low < 4 < enc.high
    lo, hi = sqrt_enclosure(enc.low, enc.high)
    assert lo <= 2 <= hi


def test_sigma_enclosure_consistent_with_gram_eigenvalue():
    from tpbases.linalg import mat_mul, transpose

    m = collocation_matrix(BasisSpec(BasisFamily.SAID_BALL, 3), standard_nodes(3))
    sig_sq = min_singular_value(m, TOL30)
    gram_min = min_eigenvalue(mat_mul(transpose(m), m), TOL30)
    assert sig_sq.low <= gram_min.high and gram_min.low <= sig_sq.high


# --- kronecker lifting ---

def test_kron_min_spectral_products():
    third = RootEnclosure(F(1, 3), F(1, 3) + F(1, 10**20), None)
    rep = None
    from tpbases.spectral import SpectralReport

    rep = SpectralReport(third, third, True)
    lifted = kron_min_spectral(rep, rep)
    assert lifted.lambda_min.low == F(1, 9)
    assert lifted.lambda_min.high == (F(1, 3) + F(1, 10**20)) ** 2


def test_kron_min_spectral_requires_positive_spectra():
    from tpbases.spectral import SpectralReport

    enc = RootEnclosure(F(1, 3), F(1, 2), None)
    bad = SpectralReport(enc, enc, False)
    with pytest.raises(SpectralAssumptionError):
        kron_min_spectral(bad, bad)


def test_kron_square_equals_interval_square():
    m = collocation_matrix(BasisSpec(BasisFamily.DP, 4), standard_nodes(4))
    rep = spectral_report(m, TOL30)
    lifted = kron_min_spectral(rep, rep)
    assert lifted.lambda_min.low == rep.lambda_min.low**2
    assert lifted.lambda_min.high == rep.lambda_min.high**2


# --- float cross-check ---

def test_float_crosscheck_identity():
    assert float_crosscheck(identity(4)) == (1.0, 1.0)


def test_float_crosscheck_2x2():
    lam, sig = float_crosscheck(as_matrix([[F(2, 3), F(1, 3)], [F(1, 3), F(2, 3)]]))
    assert abs(lam - 1 / 3) < 1e-12
    assert abs(sig - 1 / 3) < 1e-12


def test_float_crosscheck_guard():
    with pytest.raises(DomainError):
        float_crosscheck(identity(65))


@pytest.mark.parametrize("family,n", [
    (BasisFamily.BERNSTEIN, 3),
    (BasisFamily.SAID_BALL, 4),
    (BasisFamily.DP, 5),
])
def test_enclosures_contain_float_values(family, n):
    m = collocation_matrix(BasisSpec(family, n), standard_nodes(n))
    rep = spectral_report(m, TOL30)
    lifted = kron_min_spectral(rep, rep)
    lam_f, sig_f = float_crosscheck(kronecker(m, m))
    pad = F(1, 10**6)
    assert lifted.lambda_min.low * (1 - pad) <= F(lam_f) <= \
        lifted.lambda_min.high * (1 + pad)
    lo, hi = sqrt_enclosure(lifted.sigma_min_sq.low, lifted.sigma_min_sq.high)
    assert lo * (1 - pad) <= F(sig_f) <= hi * (1 + pad)


def test_published_bernstein_values():
    m = collocation_matrix(BasisSpec(BasisFamily.BERNSTEIN, 3), standard_nodes(3))
    rep = spectral_report(m, TOL30)
    lifted = kron_min_spectral(rep, rep)
    assert render_enclosure(lifted.lambda_min, 3) == "2.30e-03"
    assert render_enclosure(lifted.sigma_min_sq, 3, sqrt=True) == "2.19e-03"
