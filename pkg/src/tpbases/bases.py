"""Polynomial basis families on [0, 1] and their rational (weighted) variants.

Four families are supported: Bernstein, Said-Ball, DP and monomial.  All
evaluation is exact over ``fractions.Fraction``; no floating point enters
any code path in this module.

The DP family has two variants for odd degree.  The published middle-
function formula uses the exponent (n+1)/2 + 1 inside its bracket, which
breaks the partition of unity (for n=3 the functions sum to 1 + x(1-x)).
The default here lowers that exponent to (n+1)/2, which restores the
partition of unity and matches the even-degree pattern; the printed
variant stays available behind ``dp_literal_middle`` for reproducing
published tables that were evidently computed with it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError, SearchExhaustedError
from .rng import SplitMix64

DEFAULT_SEARCH_MAX_ITER = 10**6


class BasisFamily(Enum):
    BERNSTEIN = "bernstein"
    SAID_BALL = "said-ball"
    DP = "dp"
    MONOMIAL = "monomial"


@dataclass(frozen=True)
class BasisSpec:
    """A basis family of a fixed degree, optionally with positive weights.

    With weights w the spec denotes the rational basis
    r_i(x) = w_i u_i(x) / sum_j w_j u_j(x); without weights, the plain
    polynomial family.
    """

    family: BasisFamily
    degree: int
    weights: tuple[Fraction, ...] | None = None
    dp_literal_middle: bool = False

    def __post_init__(self):
        if self.degree < 1:
            raise DomainError(f"degree must be >= 1, got {self.degree}")
        if self.weights is not None:
            if len(self.weights) != self.degree + 1:
                raise DomainError(
                    f"need {self.degree + 1} weights, got {len(self.weights)}"
                )
            if any(w <= 0 for w in self.weights):
                raise DomainError("all weights must be strictly positive")


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k); domain error outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"binomial({n}, {k}) is outside the domain 0 <= k <= n")
    return math.comb(n, k)


def _bernstein(n: int, i: int, x: Fraction) -> Fraction:
    return binomial(n, i) * x**i * (1 - x) ** (n - i)


def _said_ball(n: int, i: int, x: Fraction) -> Fraction:
    h = n // 2
    if i <= (n - 1) // 2:
        return binomial(h + i, i) * x**i * (1 - x) ** (h + 1)
    if n % 2 == 0 and i == n // 2:
        return binomial(n, n // 2) * x ** (n // 2) * (1 - x) ** (n // 2)
    return _said_ball(n, n - i, 1 - x)


def _dp_odd_middle(n: int, x: Fraction, literal: bool) -> Fraction:
    m = (n + 1) // 2
    e = m + 1 if literal else m
    return x * (1 - x) ** m + Fraction(1, 2) * (1 - x**e - (1 - x) ** e)


def _dp(n: int, i: int, x: Fraction, literal: bool) -> Fraction:
    if i == 0:
        return (1 - x) ** n
    if i == n:
        return x**n
    if 1 <= i <= n // 2 - 1:
        return x * (1 - x) ** (n - i)
    if (n + 1) // 2 + 1 <= i <= n - 1:
        return x**i * (1 - x)
    if n % 2 == 0:  # i == n/2
        return 1 - x ** (n // 2 + 1) - (1 - x) ** (n // 2 + 1)
    if i == (n - 1) // 2:
        return _dp_odd_middle(n, x, literal)
    return _dp_odd_middle(n, 1 - x, literal)  # i == (n+1)/2


_PLAIN_EVAL = {
    BasisFamily.BERNSTEIN: lambda n, i, x, lit: _bernstein(n, i, x),
    BasisFamily.SAID_BALL: lambda n, i, x, lit: _said_ball(n, i, x),
    BasisFamily.DP: _dp,
    BasisFamily.MONOMIAL: lambda n, i, x, lit: x**i,
}


def _check_point(x: Fraction) -> Fraction:
    x = Fraction(x)
    if x < 0 or x > 1:
        raise DomainError(f"evaluation point {x} is outside [0, 1]")
    return x


def eval_basis_function(spec: BasisSpec, i: int, x: Fraction) -> Fraction:
    """Exact value of the i-th basis function of ``spec`` at x in [0, 1]."""
    n = spec.degree
    if not 0 <= i <= n:
        raise DomainError(f"index {i} out of range [0, {n}]")
    x = _check_point(x)
    plain = _PLAIN_EVAL[spec.family]
    if spec.weights is None:
        return plain(n, i, x, spec.dp_literal_middle)
    total = sum(
        w * plain(n, j, x, spec.dp_literal_middle)
        for j, w in enumerate(spec.weights)
    )
    return spec.weights[i] * plain(n, i, x, spec.dp_literal_middle) / total


def eval_basis_row(spec: BasisSpec, x: Fraction) -> list[Fraction]:
    """All basis function values (u_0(x), ..., u_n(x)) at one point."""
    x = _check_point(x)
    plain = _PLAIN_EVAL[spec.family]
    row = [
        plain(spec.degree, i, x, spec.dp_literal_middle)
        for i in range(spec.degree + 1)
    ]
    if spec.weights is None:
        return row
    weighted = [w * v for w, v in zip(spec.weights, row)]
    total = sum(weighted)
    return [v / total for v in weighted]


def standard_nodes(n: int) -> list[Fraction]:
    """The node sequence (i/(n+2)) for i = 1, ..., n+1."""
    if n < 1:
        raise DomainError(f"degree must be >= 1, got {n}")
    return [Fraction(i, n + 2) for i in range(1, n + 2)]


@dataclass(frozen=True)
class WeightConversionResult:
    """Weight vectors representing one polynomial in four bases.

    sum_j bernstein[j] b_j(x) = sum_j saidball[j] s_j(x)
                              = sum_j monomial[j] x^j
                              = sum_j dp[j] c_j(x)
    hold exactly as polynomial identities.
    """

    bernstein: tuple[Fraction, ...]
    saidball: tuple[Fraction, ...]
    monomial: tuple[Fraction, ...]
    dp: tuple[Fraction, ...]
    all_positive: bool


def _solve_collocation(spec: BasisSpec, values: list[Fraction]) -> tuple[Fraction, ...]:
    from .linalg import collocation_matrix, solve

    nodes = standard_nodes(spec.degree)
    return tuple(solve(collocation_matrix(spec, nodes), values))


def convert_bernstein_weights(
    n: int, w, dp_literal_middle: bool = False
) -> WeightConversionResult:
    """Re-express p(x) = sum_j w_j b_j^n(x) in the Said-Ball, monomial and
    DP bases by exact collocation solves at the standard nodes."""
    w = tuple(Fraction(v) for v in w)
    if len(w) != n + 1:
        raise DomainError(f"need {n + 1} weights, got {len(w)}")
    if any(v <= 0 for v in w):
        raise DomainError("all Bernstein weights must be strictly positive")

    bern = BasisSpec(BasisFamily.BERNSTEIN, n)
    values = [
        sum(wj * bj for wj, bj in zip(w, eval_basis_row(bern, t)))
        for t in standard_nodes(n)
    ]
    saidball = _solve_collocation(BasisSpec(BasisFamily.SAID_BALL, n), values)
    monomial = _solve_collocation(BasisSpec(BasisFamily.MONOMIAL, n), values)
    dp = _solve_collocation(
        BasisSpec(BasisFamily.DP, n, dp_literal_middle=dp_literal_middle), values
    )
    all_positive = all(v > 0 for vec in (w, saidball, monomial, dp) for v in vec)
    return WeightConversionResult(w, saidball, monomial, dp, all_positive)


def _monomial_coeffs_positive(w: list[int], n: int) -> bool:
    # The monomial coefficients of sum w_j b_j^n are C(n,k) * (k-th forward
    # difference of w at 0), so positivity reduces to positive differences.
    d = w
    for _ in range(n):
        d = [d[i + 1] - d[i] for i in range(len(d) - 1)]
        if d[0] <= 0:
            return False
    return True


def search_positive_weights(
    n: int,
    lo: int,
    hi: int,
    seed: int | None = None,
    max_iter: int = DEFAULT_SEARCH_MAX_ITER,
    rng: SplitMix64 | None = None,
    dp_literal_middle: bool = False,
) -> WeightConversionResult:
    """Draw integer weight vectors from [lo, hi]^(n+1) until one converts to
    all-positive weights in all four bases.

    Either a seed or an already-running generator must be supplied; passing
    a generator lets several searches share one deterministic stream.
    """
    if not 1 <= lo <= hi:
        raise DomainError(f"need 1 <= lo <= hi, got lo={lo}, hi={hi}")
    if max_iter < 1:
        raise DomainError(f"max_iter must be >= 1, got {max_iter}")
    if rng is None:
        if seed is None:
            raise DomainError("either seed or rng must be given")
        rng = SplitMix64(seed)

    for _ in range(max_iter):
        w = [rng.randint(lo, hi) for _ in range(n + 1)]
        # cheap integer pre-check; the exact conversion below is the oracle
        if not _monomial_coeffs_positive(w, n):
            continue
        result = convert_bernstein_weights(n, w, dp_literal_middle)
        if result.all_positive:
            return result
    raise SearchExhaustedError(max_iter, seed)
