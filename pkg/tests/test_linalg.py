from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import int_matrices
from frobenius_masa.catalog import gens_G, gens_Gprime, gens_B
from frobenius_masa.linalg import (
    LinAlgError,
    Matrix,
    Subspace,
    centralizer,
    char_poly,
    conjugate,
    image_of_family,
    min_poly,
    normalizer_of_span,
    poly_eval_matrix,
    rank_kernel_solve,
    span_matrices,
    subalgebra_powers,
)
from frobenius_masa.masa import canonical_A_n1
from frobenius_masa.nonderog import (
    circular_permutation,
    complex_nilpotent_generator,
    double_shift,
    polynomial_basis,
    real_block_companion,
    real_block_transition,
    real_jordan_block,
    shift_matrix,
)
from frobenius_masa.poly import PolyQ

X = PolyQ.X()
E = Matrix.unit


def combo(mats, coeffs):
    acc = Matrix.zeros(mats[0].rows)
    for m, c in zip(mats, coeffs):
        acc = acc + m * c
    return acc


def test_rank_kernel_examples():
    r, ker, _ = rank_kernel_solve(Matrix.identity(3))
    assert (r, ker) == (3, [])
    r, ker, _ = rank_kernel_solve(shift_matrix(3))
    assert r == 2 and Subspace(3, ker) == Subspace(3, [(1, 0, 0)])
    assert image_of_family(canonical_A_n1(3)).dim == 1


def test_inconsistent_system_reports_no_solution():
    M = Matrix([[1, 1], [2, 2]])
    r, _, x = rank_kernel_solve(M, [1, 3])
    assert r == 1 and x is None
    _, _, x = rank_kernel_solve(M, [1, 2])
    assert M.apply(x) == (1, 2)


def test_char_poly_examples():
    assert char_poly(shift_matrix(4)) == X ** 4
    assert char_poly(complex_nilpotent_generator(4)) == (X ** 2 + 1) ** 2
    assert char_poly(circular_permutation(3)) == X ** 3 - 1
    with pytest.raises(LinAlgError):
        char_poly(Matrix([[1, 2, 3]]))


def test_min_poly_examples():
    g = gens_G(4, 1)
    generic = combo(g[1:], [2, -3, 5])
    assert min_poly(generic) == X ** 2
    assert min_poly(Matrix.identity(3)) == X - 1
    gp = gens_Gprime(5)
    assert min_poly(combo(gp[1:], [1, 2, -1, 3])) == X ** 3


def test_centralizer_examples():
    M0 = shift_matrix(4)
    C = centralizer([M0])
    assert C.dim == 4 and C == span_matrices(polynomial_basis(M0))
    assert centralizer([Matrix.identity(3)]).dim == 9
    B3 = gens_B(3)
    assert centralizer(B3) == span_matrices(B3)


def test_normalizer_examples():
    N = normalizer_of_span([Matrix.identity(2), E(2, 1, 2)])
    assert N == span_matrices([E(2, 1, 1), E(2, 1, 2), E(2, 2, 2)])
    assert normalizer_of_span(polynomial_basis(shift_matrix(3))).dim == 5
    assert normalizer_of_span(polynomial_basis(complex_nilpotent_generator(4))).dim == 6


def _power_dim_oracle(mats, k):
    n = len(mats[0].data)
    cur = [[list(r) for r in m.data] for m in mats]
    prods = cur
    for _ in range(k - 1):
        prods = [oracles.matmul(a, b) for a in prods for b in cur]
    return oracles.rank([[x for r in p for x in r] for p in prods], n * n)


def test_subalgebra_powers_examples():
    assert subalgebra_powers(canonical_A_n1(4), 2).dim == 0
    nil = gens_G(5, 2)[1:]
    assert subalgebra_powers(nil, 3).dim == 0
    assert subalgebra_powers(nil, 2).dim > 0
    Mn = double_shift(6)
    for k in (1, 2, 3):
        assert subalgebra_powers([Mn], k).dim == _power_dim_oracle([Mn], k)
    assert [subalgebra_powers([Mn], k).dim for k in (1, 2, 3)] == [1, 1, 0]
    with pytest.raises(LinAlgError):
        subalgebra_powers([Mn], 0)


def test_conjugate_examples():
    M = Matrix([[1, 2], [3, 4]])
    assert conjugate(M, Matrix.identity(2)) == M
    P = real_block_transition(4, Fraction(1))
    assert real_block_companion(4, Fraction(1)) * P == P * real_jordan_block(4, Fraction(1))
    with pytest.raises(LinAlgError):
        conjugate(M, Matrix([[1, 1], [1, 1]]))


def test_matrix_json_round_trip():
    M = Matrix([[Fraction(1, 2), 0], [-3, 7]])
    assert Matrix.from_json(M.to_json()) == M
    with pytest.raises(ValueError):
        Matrix.from_json({"rows": 2, "cols": 2})


@given(st.integers(1, 6).flatmap(int_matrices))
def test_cayley_hamilton(m):
    M = Matrix(m)
    assert poly_eval_matrix(char_poly(M), M).is_zero()


@given(st.integers(1, 5).flatmap(int_matrices))
def test_char_poly_matches_interpolation(m):
    assert list(char_poly(Matrix(m)).coeffs) == oracles.charpoly_interp(m)


@given(st.integers(1, 5).flatmap(int_matrices))
def test_det_matches_permutation_expansion(m):
    assert Matrix(m).det() == oracles.det_leibniz(m)


@given(st.integers(1, 5).flatmap(lambda n: int_matrices(n, -1, 1)))
def test_min_poly_divides_char_poly(m):
    M = Matrix(m)
    mp = min_poly(M)
    assert poly_eval_matrix(mp, M).is_zero()
    assert (char_poly(M) % mp).is_zero()


@given(st.integers(2, 4).flatmap(lambda n: int_matrices(n, -1, 1)))
def test_centralizer_contains_inputs(m):
    M = Matrix(m)
    n = M.rows
    C = centralizer([M])
    assert C.dim >= n
    assert Matrix.identity(n).flat() in C and M.flat() in C
    # closed under products: the centralizer of one matrix is an algebra
    mats = C.matrices(n)
    for a in mats[:3]:
        for b in mats[:3]:
            assert (a * b).flat() in C


@given(st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=1, max_size=4),
       st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_membership_matches_rank_jump(vs, w):
    S = Subspace(4, vs)
    jump = oracles.rank(vs + [w], 4) > oracles.rank(vs, 4)
    assert (tuple(Fraction(x) for x in w) in S) == (not jump)
