import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from frobenius_masa.catalog import build, gens_G, gens_Gprime
from frobenius_masa.lie import frobenius_decide, semidirect_sum
from frobenius_masa.linalg import Matrix, centralizer, conjugate, span_matrices
from frobenius_masa.masa import (
    MasaError,
    canonical_A_n1,
    is_masa,
    kravchuk_signature,
    nilpotency_class,
    recognize_class2_mans,
)
from frobenius_masa.nonderog import double_shift

E = Matrix.unit


def random_invertible(n, rng):
    while True:
        P = Matrix([[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)])
        if P.det() != 0:
            return P


def centralizer_dim_oracle(mats):
    n = mats[0].rows
    eqs = []
    for A in mats:
        a = [list(r) for r in A.data]
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[i * n + k] += a[k][j]  # (XA)_{ij}
                    row[k * n + j] -= a[i][k]  # (AX)_{ij}
                eqs.append(row)
    return n * n - oracles.rank(eqs, n * n)


def test_is_masa_examples():
    assert is_masa(gens_G(4, 2), "gl")
    # [X, E12] = 0 forces X = aI + bE12
    assert centralizer_dim_oracle([E(2, 1, 2)]) == centralizer([E(2, 1, 2)]).dim == 2
    assert not is_masa([E(2, 1, 2)], "gl")
    assert is_masa(gens_Gprime(5)[1:], "sl")
    with pytest.raises(MasaError):
        is_masa([E(2, 1, 2), E(2, 2, 1)])
    with pytest.raises(MasaError):
        is_masa([E(2, 1, 2)], "so")


def test_kravchuk_examples():
    assert kravchuk_signature(canonical_A_n1(4)).as_tuple() == (3, 0, 1)
    assert kravchuk_signature(gens_G(4, 3)[1:]).nu == 1
    Mn = double_shift(6)
    assert kravchuk_signature([Mn, Mn * Mn]).mu == 2
    with pytest.raises(MasaError):
        kravchuk_signature([Matrix.identity(3)])


def test_nilpotency_class_examples():
    assert nilpotency_class(canonical_A_n1(5)) == 2
    assert nilpotency_class(gens_G(5, 3)[1:]) == 4
    assert nilpotency_class([Matrix.zeros(3)]) == 1


def test_recognize_examples():
    A = canonical_A_n1(4)
    P = recognize_class2_mans(A)
    assert P == Matrix.identity(4)
    rng = random.Random(3)
    Q = random_invertible(4, rng)
    S = [conjugate(M, Q) for M in A]
    P = recognize_class2_mans(S)
    assert span_matrices([conjugate(M, P) for M in S]) == span_matrices(A)
    wide = [E(5, 1, 3), E(5, 1, 4), E(5, 2, 3), E(5, 2, 4)]
    assert nilpotency_class(wide) == 2
    assert recognize_class2_mans(wide) is None
    with pytest.raises(MasaError):
        recognize_class2_mans(canonical_A_n1(4)[:2])


@pytest.mark.parametrize("n", range(3, 9))
def test_canonical_signature(n):
    assert kravchuk_signature(canonical_A_n1(n)).as_tuple() == (n - 1, 0, 1)


@given(st.integers(3, 5), st.integers(0, 10 ** 6), st.booleans())
def test_recognition_iff_frobenius(n, seed, wide):
    rng = random.Random(seed)
    if wide:
        # class 2, n-1 dimensional, two-dimensional image
        base = [E(n, 1, j) for j in range(3, n + 1)] + [E(n, 2, n)]
    else:
        base = canonical_A_n1(n)
    Q = random_invertible(n, rng)
    S = [conjugate(M, Q) for M in base]
    P = recognize_class2_mans(S)
    frob = frobenius_decide(semidirect_sum([Matrix.identity(n)] + S, n)).frobenius
    assert (P is not None) == frob == (not wide)


CATALOG = [("G", {"n": 4, "p": 2}), ("h", {"n": 4, "p": 3}), ("Gprime", {"n": 4}),
           ("D0", {"n": 4}), ("D01", {"n": 4}), ("L2", {"i": 2}), ("Y", {"i": 13}),
           ("B", {"n": 3}), ("L2", {"i": 4}), ("Y", {"i": 3})]


@pytest.mark.parametrize("name,params", CATALOG)
def test_frobenius_implies_masa(name, params):
    e = build(name, params)
    if frobenius_decide(e.algebra).frobenius:
        assert is_masa(e.matrix_generators, "gl")
