import random
from fractions import Fraction as F

import pytest

from tpbases.bases import BasisFamily, BasisSpec, standard_nodes
from tpbases.errors import DomainError, SingularMatrixError
from tpbases.linalg import (
    abs_matrix,
    as_matrix,
    collocation_matrix,
    cond_inf,
    det,
    dominates,
    identity,
    inf_norm,
    inverse,
    is_totally_positive,
    kronecker,
    mat_mul,
    solve,
)

ALL_FAMILIES = (BasisFamily.BERNSTEIN, BasisFamily.SAID_BALL,
                BasisFamily.DP, BasisFamily.MONOMIAL)


def random_matrix(rng, rows, cols, allow_zero_row=False):
    m = [[F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(cols)]
         for _ in range(rows)]
    if allow_zero_row and rng.random() < 0.3:
        m[rng.randrange(rows)] = [F(0)] * cols
    return m


def random_nonsingular(rng, n):
    while True:
        m = random_matrix(rng, n, n)
        if det(m) != 0:
            return m


# --- collocation matrices ---

def test_bernstein_collocation_2x2():
    m = collocation_matrix(BasisSpec(BasisFamily.BERNSTEIN, 1), [F(1, 3), F(2, 3)])
    assert m == [[F(2, 3), F(1, 3)], [F(1, 3), F(2, 3)]]


def test_monomial_collocation_vandermonde():
    m = collocation_matrix(BasisSpec(BasisFamily.MONOMIAL, 2), [F(0), F(1, 2), F(1)])
    assert m == [[1, 0, 0], [1, F(1, 2), F(1, 4)], [1, 1, 1]]


def test_collocation_rectangular_allowed():
    nodes = [F(i, 10) for i in range(1, 7)]
    m = collocation_matrix(BasisSpec(BasisFamily.BERNSTEIN, 2), nodes)
    assert len(m) == 6 and len(m[0]) == 3


def test_collocation_rejects_unsorted_nodes():
    with pytest.raises(DomainError):
        collocation_matrix(BasisSpec(BasisFamily.BERNSTEIN, 1), [F(2, 3), F(1, 3)])


@pytest.mark.parametrize("family", (BasisFamily.BERNSTEIN, BasisFamily.SAID_BALL,
                                    BasisFamily.DP))
@pytest.mark.parametrize("n", (3, 4, 5))
def test_normalized_collocation_rows_sum_to_one(family, n):
    m = collocation_matrix(BasisSpec(family, n), standard_nodes(n))
    assert all(sum(row) == 1 for row in m)


# --- kronecker ---

def test_kronecker_identity():
    assert kronecker(identity(2), identity(2)) == identity(4)


def test_kronecker_blocks():
    a = as_matrix([[1, 2], [3, 4]])
    b = as_matrix([[0, 1], [1, 0]])
    k = kronecker(a, b)
    assert k == as_matrix([
        [0, 1, 0, 2],
        [1, 0, 2, 0],
        [0, 3, 0, 4],
        [3, 0, 4, 0],
    ])


def test_kronecker_of_collocations_is_tensor_collocation():
    # (A (x) A)[(i1,i2),(j1,j2)] = u_j1(x_i1) * u_j2(x_i2)
    spec = BasisSpec(BasisFamily.BERNSTEIN, 3)
    nodes = standard_nodes(3)
    a = collocation_matrix(spec, nodes)
    k = kronecker(a, a)
    for i1 in range(4):
        for i2 in range(4):
            for j1 in range(4):
                for j2 in range(4):
                    assert k[4 * i1 + i2][4 * j1 + j2] == a[i1][j1] * a[i2][j2]


# --- norms, inverses, conditioning ---

def test_inf_norm():
    assert inf_norm(as_matrix([[1, -2], [3, 4]])) == 7


def test_inf_norm_row_stochastic():
    m = collocation_matrix(BasisSpec(BasisFamily.DP, 4), standard_nodes(4))
    assert inf_norm(m) == 1


def test_inf_norm_multiplicative_example():
    a = as_matrix([[1, -2], [3, 4]])
    b = as_matrix([[0, 2], [2, 0]])
    assert inf_norm(kronecker(a, b)) == inf_norm(a) * inf_norm(b) == 14


def test_inverse_2x2():
    m = as_matrix([[F(2, 3), F(1, 3)], [F(1, 3), F(2, 3)]])
    assert inverse(m) == as_matrix([[2, -1], [-1, 2]])


def test_inverse_identity():
    assert inverse(identity(5)) == identity(5)


def test_inverse_singular_reports_step():
    with pytest.raises(SingularMatrixError) as exc:
        inverse(as_matrix([[1, 2], [2, 4]]))
    assert exc.value.step == 1


def test_cond_inf_examples():
    assert cond_inf(identity(4)) == 1
    assert cond_inf(as_matrix([[F(2, 3), F(1, 3)], [F(1, 3), F(2, 3)]])) == 3


def test_abs_matrix():
    assert abs_matrix(as_matrix([[-1, 2], [3, -4]])) == as_matrix([[1, 2], [3, 4]])
    m = as_matrix([[1, 2], [0, 4]])
    assert abs_matrix(m) == m


def test_dominates():
    assert dominates(as_matrix([[2, 2], [2, 2]]), as_matrix([[1, -2], [0, 2]]))
    assert not dominates(as_matrix([[1, 0], [0, 1]]), as_matrix([[2, 0], [0, 0]]))
    with pytest.raises(DomainError):
        dominates(identity(2), identity(3))


def test_dominates_reflexive_on_nonnegative():
    rng = random.Random(4)
    m = abs_matrix(random_matrix(rng, 4, 4))
    assert dominates(m, m)


def test_solve_matches_inverse():
    rng = random.Random(8)
    a = random_nonsingular(rng, 4)
    b = [F(rng.randint(-5, 5)) for _ in range(4)]
    x = solve(a, b)
    assert [sum(av * xv for av, xv in zip(row, x)) for row in a] == b


# --- randomized identity suites ---

def test_norm_multiplicativity_random():
    rng = random.Random(101)
    for _ in range(50):
        ra, ca = rng.randint(1, 5), rng.randint(1, 5)
        rb, cb = rng.randint(1, 5), rng.randint(1, 5)
        a = random_matrix(rng, ra, ca, allow_zero_row=True)
        b = random_matrix(rng, rb, cb, allow_zero_row=True)
        assert inf_norm(kronecker(a, b)) == inf_norm(a) * inf_norm(b)


def test_inverse_of_kronecker_random():
    rng = random.Random(202)
    for _ in range(50):
        n, m = rng.randint(2, 4), rng.randint(2, 4)
        a = random_nonsingular(rng, n)
        b = random_nonsingular(rng, m)
        k = kronecker(a, b)
        inv_k = inverse(k)
        assert inv_k == kronecker(inverse(a), inverse(b))
        assert mat_mul(k, inv_k) == identity(n * m)
        assert cond_inf(k) == cond_inf(a) * cond_inf(b)


def test_abs_of_kronecker_random():
    rng = random.Random(303)
    for _ in range(20):
        a = random_matrix(rng, 3, 3)
        b = random_matrix(rng, 2, 4)
        assert abs_matrix(kronecker(a, b)) == \
            kronecker(abs_matrix(a), abs_matrix(b))


# --- total positivity ---

def test_tp_positive_2x2():
    cert = is_totally_positive(as_matrix([[F(2, 3), F(1, 3)], [F(1, 3), F(2, 3)]]))
    assert cert.is_tp and cert.witness is None


def test_tp_negative_witness():
    cert = is_totally_positive(as_matrix([[1, 2], [3, 4]]))
    assert not cert.is_tp
    rows, cols, value = cert.witness
    assert (rows, cols, value) == ((0, 1), (0, 1), -2)
    # witness recomputes to the reported negative minor
    assert det([[F(v) for v in row] for row in ([1, 2], [3, 4])]) == value


def test_tp_guard():
    with pytest.raises(DomainError):
        is_totally_positive(identity(9))


@pytest.mark.parametrize("family", ALL_FAMILIES)
@pytest.mark.parametrize("n", (3, 4, 5))
def test_grid_collocations_are_tp(family, n):
    plain = collocation_matrix(BasisSpec(family, n), standard_nodes(n))
    assert is_totally_positive(plain).is_tp
    weights = tuple(F(2 * i + 1) for i in range(n + 1))
    weighted = collocation_matrix(BasisSpec(family, n, weights=weights),
                                  standard_nodes(n))
    assert is_totally_positive(weighted).is_tp
