"""Maximal abelian subalgebras of gl(n) / sl(n): maximality, Kravchuk
signatures, nilpotency class and recognition of the class-2 MANS A_{n,1}."""
from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    ONE,
    ZERO,
    LinAlgError,
    Matrix,
    Subspace,
    centralizer,
    common_kernel,
    image_of_family,
    is_commuting_family,
    solve,
    span_matrices,
    subalgebra_powers,
    traceless_subspace,
    _check_square_family,
)


class MasaError(ValueError):
    pass


@dataclass(frozen=True)
class KravchukSignature:
    nu: int
    m: int
    mu: int
    n: int

    def as_tuple(self):
        return (self.nu, self.m, self.mu)


def _abelian_or_raise(S):
    S, n = _check_square_family(S)
    if not is_commuting_family(S):
        raise MasaError("generators do not commute")
    return S, n


def is_masa(S, ambient: str = "gl") -> bool:
    S, n = _abelian_or_raise(S)
    C = centralizer(S)
    if ambient == "sl":
        C = C.intersect(traceless_subspace(n))
    elif ambient != "gl":
        raise MasaError(f"unknown ambient {ambient!r}")
    return C == span_matrices(S)


def is_nilpotent_matrix(M: Matrix) -> bool:
    return (M ** M.rows).is_zero()


def _nilpotent_or_raise(S):
    S, n = _abelian_or_raise(S)
    for A in span_matrices(S).matrices(n):
        if not is_nilpotent_matrix(A):
            raise MasaError("generator set contains a non-nilpotent element")
    return S, n


def kravchuk_signature(S) -> KravchukSignature:
    S, n = _nilpotent_or_raise(S)
    nu = n - image_of_family(S).dim
    mu = common_kernel(S).dim
    return KravchukSignature(nu, n - nu - mu, mu, n)


def nilpotency_class(S) -> int:
    """Smallest p with all p-fold products zero ({0} has class 1)."""
    S, n = _nilpotent_or_raise(S)
    if span_matrices(S).dim == 0:
        return 1
    p = 1
    while subalgebra_powers(S, p).dim:
        p += 1
        if p > n + 1:
            raise LinAlgError("internal: nilpotent family without vanishing power")
    return p


def canonical_A_n1(n: int):
    """A_{n,1} = span{E_{1,j} : j = 2..n}."""
    return [Matrix.unit(n, 1, j) for j in range(2, n + 1)]


def recognize_class2_mans(S):
    """Return P with P span(S) P^{-1} = A_{n,1}, or None when the image of
    span(S) is not one-dimensional."""
    S, n = _nilpotent_or_raise(S)
    W = span_matrices(S)
    if W.dim != n - 1:
        raise MasaError(f"expected an {n - 1}-dimensional family, got {W.dim}")
    if nilpotency_class(S) != 2:
        raise MasaError("family is not of class 2")
    img = image_of_family(S)
    if img.dim != 1:
        return None
    # every element is u w_a^T with u spanning the image; Q maps e_1 -> u
    u = img.basis[0]
    cols = [u]
    # the row vectors w_a span the dual of a complement of ker; pick Q so that
    # Q^{-1} A Q = E_{1,j}: choose columns q_2..q_n with w_a(q_j) = delta
    mats = W.matrices(n)
    piv = next(i for i, x in enumerate(u) if x != 0)
    rows = [tuple(M.data[piv][j] / u[piv] for j in range(n)) for M in mats]
    # rows are the functionals w_a; complete {u} by vectors dual to them
    R = Matrix(rows)
    if R.rank() != n - 1:
        return None
    ker = R.kernel()
    if len(ker) != 1:
        return None
    # solve R q_j = e_j and R u = 0 holds since A^2 = 0
    for j in range(n - 1):
        target = [ONE if k == j else ZERO for k in range(n - 1)]
        q = solve(R, target)
        cols.append(q)
    Q = Matrix.from_columns(cols)
    if not Q.is_invertible():
        raise LinAlgError("internal: conjugator is singular")
    P = Q.inverse()
    target = Subspace.of_matrices(canonical_A_n1(n))
    got = Subspace.of_matrices([P * A * Q for A in mats])
    if got != target:
        raise LinAlgError("internal: conjugation did not reach A_{n,1}")
    return P
