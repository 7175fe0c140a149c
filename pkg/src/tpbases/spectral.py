"""Certified minimal eigenvalues and singular values of rational matrices.

The pipeline is fully exact: characteristic polynomials come from the
Faddeev-LeVerrier recurrence, real roots are isolated with Sturm
sequences and refined by bisection, so every reported value is a rational
interval guaranteed to contain the true eigenvalue.  A floating-point
cross-check (``float_crosscheck``) exists purely as an independent sanity
oracle and never feeds the certified path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, SpectralAssumptionError
from .linalg import Matrix, mat_mul, transpose

CHAR_POLY_MAX_DIM = 12
FLOAT_CHECK_MAX_DIM = 64
DEFAULT_TOL = Fraction(1, 10**30)

# --- dense univariate polynomials, coefficients ascending by degree ---

Poly = list[Fraction]


def poly_trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def poly_eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_deriv(p: Poly) -> Poly:
    return [i * c for i, c in enumerate(p)][1:]


def poly_divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    num, den = num[:], poly_trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / lead
        q[k] = c
        if c != 0:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    return poly_trim(q), poly_trim(num)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = poly_trim(a), poly_trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if a:
        a = [c / a[-1] for c in a]  # monic
    return a


def squarefree_part(p: Poly) -> Poly:
    g = poly_gcd(p, poly_deriv(p))
    if len(g) <= 1:
        return poly_trim(p)
    return poly_divmod(p, g)[0]


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: p = prod f_i^i with the f_i squarefree, coprime."""
    p = poly_trim(p)
    if len(p) <= 1:
        return []
    out: list[tuple[Poly, int]] = []
    g = poly_gcd(p, poly_deriv(p))
    w = poly_divmod(p, g)[0]
    y = poly_divmod(poly_deriv(p), g)[0]
    i = 1
    z = poly_trim([yc - dc for yc, dc in zip_longest(y, poly_deriv(w))])
    while len(w) > 1:
        f = poly_gcd(w, z)
        if len(f) > 1:
            out.append((f, i))
        w_next = poly_divmod(w, f)[0]
        y = poly_divmod(z, f)[0]
        z = poly_trim([yc - dc for yc, dc in zip_longest(y, poly_deriv(w_next))])
        w = w_next
        i += 1
    return out


def zip_longest(a: Poly, b: Poly):
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else Fraction(0),
               b[i] if i < len(b) else Fraction(0))


# --- Sturm machinery ---


def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm sequence of a squarefree polynomial."""
    chain = [poly_trim(p), poly_trim(poly_deriv(p))]
    while chain[-1]:
        rem = poly_divmod(chain[-2], chain[-1])[1]
        chain.append([-c for c in rem])
    return chain[:-1]


def _sign_variations(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = poly_eval(q, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for s1, s2 in zip(signs, signs[1:]) if s1 != s2)


def count_roots(chain: list[Poly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    return _sign_variations(chain, a) - _sign_variations(chain, b)


def cauchy_bound(p: Poly) -> Fraction:
    """Strict bound B with every real root in (-B, B)."""
    p = poly_trim(p)
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootEnclosure:
    """Open rational interval certified to contain exactly one real root
    of ``polynomial`` (None for enclosures derived by interval arithmetic,
    e.g. Kronecker products)."""

    low: Fraction
    high: Fraction
    polynomial: tuple[Fraction, ...] | None

    @property
    def width(self) -> Fraction:
        return self.high - self.low

    @property
    def midpoint(self) -> Fraction:
        return (self.low + self.high) / 2


def _exact_root_enclosure(
    q: Poly, chain: list[Poly], root: Fraction, radius: Fraction
) -> RootEnclosure:
    # shrink a symmetric interval around an exactly-hit root until its
    # endpoints are not roots and no other root sneaks in
    while (
        poly_eval(q, root - radius) == 0
        or poly_eval(q, root + radius) == 0
        or count_roots(chain, root - radius, root + radius) != 1
    ):
        radius /= 2
    return RootEnclosure(root - radius, root + radius, tuple(q))


def isolate_real_roots(p: Poly) -> list[RootEnclosure]:
    """Disjoint enclosures of all distinct real roots of p."""
    p = poly_trim([Fraction(c) for c in p])
    if not p:
        raise DomainError("cannot isolate roots of the zero polynomial")
    q = squarefree_part(p)
    if len(q) <= 1:
        return []
    chain = sturm_chain(q)
    bound = cauchy_bound(q)
    out: list[RootEnclosure] = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        k = count_roots(chain, a, b)
        if k == 0:
            continue
        if k == 1:
            if poly_eval(q, b) == 0:
                out.append(_exact_root_enclosure(q, chain, b, (b - a) / 2))
            else:
                out.append(RootEnclosure(a, b, tuple(q)))
            continue
        mid = (a + b) / 2
        if poly_eval(q, mid) == 0:
            enc = _exact_root_enclosure(q, chain, mid, (b - a) / 4)
            out.append(enc)
            stack.append((a, enc.low))
            stack.append((enc.high, b))
        else:
            stack.append((a, mid))
            stack.append((mid, b))
    out.sort(key=lambda e: e.low)
    # exact root hits can leave neighbouring enclosures overlapping;
    # refine until the intervals are pairwise disjoint
    for i in range(len(out) - 1):
        while out[i].high > out[i + 1].low:
            out[i] = refine_root(out[i], out[i].width / 4)
            out[i + 1] = refine_root(out[i + 1], out[i + 1].width / 4)
    return out


def refine_root(enc: RootEnclosure, tol: Fraction) -> RootEnclosure:
    """Bisect down to width <= tol, preserving the one-root invariant."""
    tol = Fraction(tol)
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    if enc.polynomial is None:
        raise DomainError("cannot refine an enclosure without its polynomial")
    if enc.width <= tol:
        return enc
    q = list(enc.polynomial)
    low, high = enc.low, enc.high
    sign_low = poly_eval(q, low)
    # squarefree polynomial with one root in the open interval: endpoint
    # signs are nonzero and opposite
    while high - low > tol:
        mid = (low + high) / 2
        v = poly_eval(q, mid)
        if v == 0:
            radius = min(tol / 2, (mid - low) / 2, (high - mid) / 2)
            while poly_eval(q, mid - radius) == 0 or poly_eval(q, mid + radius) == 0:
                radius /= 2
            return RootEnclosure(mid - radius, mid + radius, enc.polynomial)
        if (v > 0) == (sign_low > 0):
            low = mid
        else:
            high = mid
    return RootEnclosure(low, high, enc.polynomial)


# --- matrix spectra ---


def char_poly(a: Matrix) -> Poly:
    """det(lambda I - A) via the Faddeev-LeVerrier recurrence, exact."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise DomainError("matrix must be square")
    if n > CHAR_POLY_MAX_DIM:
        raise DomainError(
            f"dimension {n} exceeds the exact char-poly guard of {CHAR_POLY_MAX_DIM}"
        )
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [row[:] for row in a]
    for k in range(1, n + 1):
        c = -sum(m[i][i] for i in range(n)) / k
        coeffs[n - k] = c
        if k < n:
            shifted = [
                [m[i][j] + (c if i == j else 0) for j in range(n)]
                for i in range(n)
            ]
            m = mat_mul(a, shifted)
    return coeffs


@dataclass(frozen=True)
class SpectralReport:
    """Certified minimal eigenvalue and singular value of one matrix.

    ``sigma_min_sq`` encloses the smallest eigenvalue of A^T A; the square
    root is taken only when rendering, with outward rounding.
    """

    lambda_min: RootEnclosure
    sigma_min_sq: RootEnclosure
    all_eigs_real_positive: bool


def _real_spectrum(a: Matrix) -> tuple[list[RootEnclosure], bool]:
    """All real eigenvalue enclosures; errors unless the full spectrum is real.

    Returns (enclosures, all_positive).  Multiple eigenvalues are handled
    through the squarefree decomposition so the multiplicity count is exact.
    """
    n = len(a)
    p = char_poly(a)
    total = 0
    enclosures: list[RootEnclosure] = []
    for factor, mult in squarefree_decomposition(p):
        roots = isolate_real_roots(factor)
        total += mult * len(roots)
        enclosures.extend(roots)
    if total != n:
        raise SpectralAssumptionError(
            f"only {total} of {n} eigenvalues are real; matrix is outside "
            "the totally positive regime this module assumes"
        )
    positive = all(_certify_positive(e) for e in enclosures)
    return enclosures, positive


def _smallest_enclosure(enclosures: list[RootEnclosure]) -> RootEnclosure:
    """Enclosure of the smallest root among enclosures of distinct roots.

    Enclosures coming from different squarefree factors can overlap while
    still wide; refine overlapping pairs until the ordering is certain.
    """
    encs = list(enclosures)
    changed = True
    while changed:
        changed = False
        for i in range(len(encs)):
            for j in range(i + 1, len(encs)):
                a, b = encs[i], encs[j]
                if a.high > b.low and b.high > a.low:
                    encs[i] = refine_root(a, a.width / 4)
                    encs[j] = refine_root(b, b.width / 4)
                    changed = True
    return min(encs, key=lambda e: e.low)


def _certify_positive(enc: RootEnclosure) -> bool:
    if enc.low > 0:
        return True
    q = list(enc.polynomial)
    if poly_eval(q, Fraction(0)) == 0:
        return False  # zero is a root
    e = enc
    while e.low <= 0 < e.high:
        e = refine_root(e, e.width / 4)
    return e.low > 0


def min_eigenvalue(a: Matrix, tol: Fraction = DEFAULT_TOL) -> RootEnclosure:
    """Enclosure of the smallest (real) eigenvalue, refined to width <= tol."""
    enclosures, _ = _real_spectrum(a)
    return refine_root(_smallest_enclosure(enclosures), tol)


def min_singular_value(a: Matrix, tol: Fraction = DEFAULT_TOL) -> RootEnclosure:
    """Enclosure of the smallest eigenvalue of A^T A (i.e. sigma_min^2)."""
    gram = mat_mul(transpose(a), a)
    enclosures, _ = _real_spectrum(gram)
    smallest = refine_root(_smallest_enclosure(enclosures), tol)
    if smallest.low <= 0:
        if not _certify_positive(smallest):
            raise SpectralAssumptionError(
                "smallest singular value cannot be separated from zero; "
                "the matrix may be singular"
            )
        while smallest.low <= 0:
            smallest = refine_root(smallest, smallest.width / 4)
        smallest = refine_root(smallest, tol)
    return smallest


def spectral_report(a: Matrix, tol: Fraction = DEFAULT_TOL) -> SpectralReport:
    enclosures, positive = _real_spectrum(a)
    lam = refine_root(_smallest_enclosure(enclosures), tol)
    sig = min_singular_value(a, tol)
    return SpectralReport(lam, sig, positive)


def _interval_product(x: RootEnclosure, y: RootEnclosure) -> RootEnclosure:
    # valid for intervals with positive endpoints only
    return RootEnclosure(x.low * y.low, x.high * y.high, None)


def kron_min_spectral(rep_a: SpectralReport, rep_b: SpectralReport) -> SpectralReport:
    """Lift factor reports to their Kronecker product.

    Uses the product laws for eigenvalues and singular values of A (x) B,
    which require both factors to have real positive spectra.
    """
    if not (rep_a.all_eigs_real_positive and rep_b.all_eigs_real_positive):
        raise SpectralAssumptionError(
            "Kronecker spectral lifting needs real positive factor spectra"
        )
    return SpectralReport(
        _interval_product(rep_a.lambda_min, rep_b.lambda_min),
        _interval_product(rep_a.sigma_min_sq, rep_b.sigma_min_sq),
        True,
    )


def float_crosscheck(a: Matrix) -> tuple[float, float]:
    """Binary64 (lambda_min, sigma_min) via a standard dense solver.

    Sanity oracle only; the certified enclosures never depend on it.
    """
    import numpy as np

    n = len(a)
    if n > FLOAT_CHECK_MAX_DIM:
        raise DomainError(
            f"dimension {n} exceeds the cross-check guard of {FLOAT_CHECK_MAX_DIM}"
        )
    m = np.array([[float(v) for v in row] for row in a])
    lam = min(np.linalg.eigvals(m).real)
    sig = min(np.linalg.svd(m, compute_uv=False))
    return float(lam), float(sig)


def kron_square_report(a: Matrix, tol: Fraction = DEFAULT_TOL) -> SpectralReport:
    """Report for A (x) A computed from the factor report."""
    rep = spectral_report(a, tol)
    return kron_min_spectral(rep, rep)


def sqrt_enclosure(low: Fraction, high: Fraction, digits: int = 40) -> tuple[Fraction, Fraction]:
    """Outward-rounded rational enclosure of [sqrt(low), sqrt(high)]."""
    import math

    if low < 0:
        raise DomainError("cannot take the square root of a negative bound")
    scale = 10**digits
    lo_n = math.isqrt(low.numerator * scale * scale // low.denominator)
    hi_scaled = high.numerator * scale * scale
    hi_n = math.isqrt(hi_scaled // high.denominator)
    if hi_n * hi_n * high.denominator < hi_scaled:
        hi_n += 1
    return Fraction(lo_n, scale), Fraction(hi_n, scale)


__all__ = [
    "CHAR_POLY_MAX_DIM",
    "DEFAULT_TOL",
    "RootEnclosure",
    "SpectralReport",
    "char_poly",
    "count_roots",
    "float_crosscheck",
    "isolate_real_roots",
    "kron_min_spectral",
    "kron_square_report",
    "min_eigenvalue",
    "min_singular_value",
    "poly_eval",
    "refine_root",
    "spectral_report",
    "sqrt_enclosure",
    "squarefree_decomposition",
    "sturm_chain",
]
