"""Nonderogatory matrices: detection, eigen-signatures, the direct-sum label
of K[phi] ⋉ V, exact real Jordan forms, Cartan tests and the Vandermonde
isomorphism."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .lie import LieAlgebra, _l1_shell, direct_sum, semidirect_sum
from .linalg import (
    ONE,
    ZERO,
    LinAlgError,
    Matrix,
    Subspace,
    centralizer,
    char_poly,
    is_commuting_family,
    min_poly,
    normalizer_of_span,
    poly_eval_matrix,
    span_matrices,
)
from .mpoly import MPoly
from .poly import (
    PolyQ,
    count_real_roots,
    is_squarefree,
    rational_roots,
    square_free_decomposition,
)
from .scalars import QuadExt, as_rational, is_square_rational, simplify, sqrt_rational


class NonderogError(ValueError):
    pass


class InternalDisagreement(AssertionError):
    """Two independent criteria that must agree did not."""


# ---------------------------------------------------------------------------
# standard matrices


def shift_matrix(n) -> Matrix:
    """M_0 = sum E_{i,i+1}."""
    return Matrix([[ONE if j == i + 1 else ZERO for j in range(n)] for i in range(n)])


def rotation_part(n) -> Matrix:
    """M_s = -sum_j (E_{2j+1,2j+2} - E_{2j+2,2j+1}), n even."""
    if n % 2:
        raise NonderogError("M_s needs even n")
    rows = [[ZERO] * n for _ in range(n)]
    for j in range(n // 2):
        rows[2 * j][2 * j + 1] = -ONE
        rows[2 * j + 1][2 * j] = ONE
    return Matrix(rows)


def double_shift(n) -> Matrix:
    """M_n = sum E_{j,j+2}."""
    return Matrix([[ONE if j == i + 2 else ZERO for j in range(n)] for i in range(n)])


def complex_nilpotent_generator(n) -> Matrix:
    """M_{0,1} = M_s + M_n."""
    return rotation_part(n) + double_shift(n)


def circular_permutation(n) -> Matrix:
    """phi(e_i) = e_{i+1}, phi(e_n) = e_1."""
    rows = [[ZERO] * n for _ in range(n)]
    rows[0][n - 1] = ONE
    for i in range(1, n):
        rows[i][i - 1] = ONE
    return Matrix(rows)


def rotation_block(r, s) -> Matrix:
    return Matrix([[r, -s], [s, r]])


def polynomial_basis(M: Matrix):
    """I, M, ..., M^{n-1}."""
    out = [Matrix.identity(M.rows)]
    for _ in range(M.rows - 1):
        out.append(out[-1] * M)
    return out


# ---------------------------------------------------------------------------
# nonderogatory test and signature


def is_nonderogatory(M: Matrix) -> bool:
    if not M.is_square():
        raise NonderogError("matrix is not square")
    n = M.rows
    by_poly = min_poly(M) == char_poly(M)
    C = centralizer([M])
    by_cent = C.dim == n and is_commuting_family(C.matrices(n))
    if by_poly != by_cent:
        raise InternalDisagreement(
            f"min-poly criterion says {by_poly}, centralizer criterion says {by_cent}"
        )
    return by_poly


def _require_nonderogatory(M):
    if not is_nonderogatory(M):
        raise NonderogError("matrix is derogatory (minimal polynomial differs from characteristic polynomial)")


@dataclass(frozen=True)
class EigenSignature:
    real_blocks: tuple
    complex_blocks: tuple

    @property
    def n(self):
        return sum(self.real_blocks) + 2 * sum(self.complex_blocks)

    def to_json(self):
        return {"real_blocks": list(self.real_blocks), "complex_blocks": list(self.complex_blocks)}


def eigen_signature_of_poly(chi: PolyQ) -> EigenSignature:
    real, cplx = [], []
    for f, mult in square_free_decomposition(chi):
        r = count_real_roots(f)
        c = (f.degree - r) // 2
        real += [mult] * r
        cplx += [mult] * c
    return EigenSignature(tuple(sorted(real, reverse=True)), tuple(sorted(cplx, reverse=True)))


def eigen_signature(M: Matrix) -> EigenSignature:
    _require_nonderogatory(M)
    return eigen_signature_of_poly(char_poly(M))


# ---------------------------------------------------------------------------
# classification label


@dataclass(frozen=True)
class ClassificationLabel:
    blocks: tuple  # of ("D0", k) / ("D01", 2m)

    @classmethod
    def from_signature(cls, sig: EigenSignature):
        blocks = [("D0", k) for k in sorted(sig.real_blocks, reverse=True)]
        blocks += [("D01", 2 * m) for m in sorted(sig.complex_blocks, reverse=True)]
        return cls(tuple(blocks))

    @staticmethod
    def block_name(block):
        kind, size = block
        if kind == "D0":
            return "aff(R)" if size == 1 else f"D0({size})"
        return "aff(C)" if size == 2 else f"D01({size})"

    def __str__(self):
        return "+".join(self.block_name(b) for b in self.blocks)

    @property
    def indecomposable(self) -> bool:
        return len(self.blocks) == 1

    def to_json(self):
        return {
            "label": str(self),
            "blocks": [{"type": k, "size": s, "name": self.block_name((k, s))} for k, s in self.blocks],
            "indecomposable": self.indecomposable,
        }

    def model_algebra(self) -> LieAlgebra:
        """Direct sum of the model blocks D_0^k and D_{0,1}^{2m}."""
        parts = [model_block(kind, size) for kind, size in self.blocks]
        return parts[0] if len(parts) == 1 else direct_sum(parts)


def model_block(kind, size) -> LieAlgebra:
    if kind == "D0":
        M = shift_matrix(size).transpose()
    else:
        M = complex_nilpotent_generator(size)
    return semidirect_sum(polynomial_basis(M), size)


def classify_G_phi(M: Matrix) -> ClassificationLabel:
    return ClassificationLabel.from_signature(eigen_signature(M))


def g_phi(M: Matrix) -> LieAlgebra:
    """K[M] ⋉ K^n with the power basis I, M, ..., M^{n-1}."""
    _require_nonderogatory(M)
    return semidirect_sum(polynomial_basis(M), M.rows)


# ---------------------------------------------------------------------------
# splitting chi into linear and quadratic pieces


def _split_squarefree(f: PolyQ):
    """Factor a squarefree rational polynomial into pieces of degree <= 2
    with rational coefficients. Roots are located numerically only to guess
    the grouping; every piece is confirmed by exact division."""
    pieces = []
    rest = f.monic()
    for r in rational_roots(rest):
        lin = PolyQ([-r, 1])
        rest = rest // lin
        pieces.append(lin)
    if rest.degree <= 0:
        return pieces
    if rest.degree == 2:
        return pieces + [rest]
    import numpy as np

    roots = np.roots([float(c) for c in reversed(rest.coeffs)])
    reals = sorted(z.real for z in roots if abs(z.imag) < 1e-9)
    cplx = [z for z in roots if z.imag > 1e-9]

    def rationalize(a, b):
        q = PolyQ([Fraction(b).limit_denominator(10 ** 6), Fraction(a).limit_denominator(10 ** 6), 1])
        return q

    cands = [rationalize(-2 * z.real, abs(z) ** 2) for z in cplx]
    for i, j in combinations(range(len(reals)), 2):
        cands.append(rationalize(-(reals[i] + reals[j]), reals[i] * reals[j]))
    for q in cands:
        if rest.degree <= 2:
            break
        if q.degree == 2 and (rest % q).is_zero():
            rest = rest // q
            pieces.append(q)
    if rest.degree > 2:
        raise NonderogError(
            f"irreducible factor of degree > 2 unsupported (cannot split {rest} over Q)"
        )
    if rest.degree > 0:
        pieces.append(rest)
    return pieces


# ---------------------------------------------------------------------------
# transition matrices for a single block


def _ring_poly_mul(a, b, zero):
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def complex_block_charpoly_coeffs(n, r, s, zero=ZERO):
    """D_{n,k}: coefficients of ((X - r)^2 + s^2)^{n/2}, ascending in X."""
    if n % 2:
        raise NonderogError("complex block size must be even")
    quad = [r * r + s * s, -2 * r, zero + 1]
    out = [zero + 1]
    for _ in range(n // 2):
        out = _ring_poly_mul(out, quad, zero)
    return out


def real_block_transition(n, lam):
    """Closed-form P with M~_lam P = P M_lam (unit lower triangular):
    p_kl = (-1)^(k-l) lam^(k-l) C(n-l, k-l) for k >= l."""
    rows = [[ZERO] * n for _ in range(n)]
    for k in range(n):
        rows[k][k] = ONE
        for l in range(k):
            rows[k][l] = simplify((-1) ** (k - l) * comb(n - 1 - l, k - l) * lam ** (k - l))
    return Matrix(rows)


def real_block_companion(n, lam):
    """M~_lam = sum k_j E_{j,1} + sum E_{j,j+1}, k_j = C(n,j) (-1)^{j+1} lam^j."""
    rows = [[ZERO] * n for _ in range(n)]
    for j in range(1, n + 1):
        rows[j - 1][0] = simplify(comb(n, j) * (-1) ** (j + 1) * lam ** j)
    for j in range(n - 1):
        rows[j][j + 1] = ONE
    return Matrix(rows)


def real_jordan_block(n, lam):
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = lam
        if i + 1 < n:
            rows[i][i + 1] = ONE
    return Matrix(rows)


def complex_block_transition_entries(n, r, s, p11=ONE, p12=ZERO, zero=ZERO):
    """The recurrence for P (rows of plain lists, any commutative ring),
    first row (p11, p12, 0, ..., 0)."""
    D = complex_block_charpoly_coeffs(n, r, s, zero)
    P = [[zero] * n for _ in range(n)]
    P[0][0] = zero + p11
    P[0][1] = zero + p12
    for k in range(1, n):
        prev, cur = P[k - 1], P[k]
        d = D[n - k]
        cur[0] = P[0][0] * d + r * prev[0] + s * prev[1]
        cur[1] = P[0][1] * d + r * prev[1] - s * prev[0]
        for j in range(n // 2 - 1):
            a, b = 2 * j + 2, 2 * j + 3
            cur[a] = P[0][a] * d + r * prev[a] + s * prev[b] + prev[a - 2]
            cur[b] = P[0][b] * d + r * prev[b] - s * prev[a] + prev[b - 2]
    return P


def complex_block_companion(n, r, s):
    """M~_z = sum E_{j,j+1} - sum D_{n,n-j} E_{j,1}."""
    D = complex_block_charpoly_coeffs(n, r, s)
    rows = [[ZERO] * n for _ in range(n)]
    for j in range(1, n + 1):
        rows[j - 1][0] = simplify(-D[n - j])
    for j in range(n - 1):
        rows[j][j + 1] = ONE
    return Matrix(rows)


def complex_jordan_block(n, r, s):
    """M_z = r I + s M_s + M_n."""
    return Matrix.identity(n) * r + rotation_part(n) * s + double_shift(n)


def complex_block_transition(n, r, s, p11=ONE, p12=ZERO) -> Matrix:
    return Matrix([[simplify(x) for x in row] for row in
                   complex_block_transition_entries(n, r, s, p11, p12)])


# ---------------------------------------------------------------------------
# determinants of the complex transition matrix


def det_generic(rows, zero, one):
    """Determinant over a commutative ring by Laplace expansion with
    memoization on the set of used columns."""
    n = len(rows)
    dp = {0: one}
    for i in range(n):
        nxt = {}
        for mask, val in dp.items():
            if not val:
                continue
            # sign: number of used columns to the right of j
            for j in range(n):
                if mask >> j & 1:
                    continue
                a = rows[i][j]
                if not a:
                    continue
                above = bin(mask >> (j + 1)).count("1")
                term = a * val
                key = mask | (1 << j)
                if above % 2:
                    nxt[key] = nxt.get(key, zero) - term
                else:
                    nxt[key] = nxt.get(key, zero) + term
        dp = nxt
    return dp.get((1 << n) - 1, zero)


def symbolic_complex_transition(n, p11=1, p12=0):
    """P with entries in Q[r, s]."""
    z = MPoly(2, {}, names=("r", "s"))
    r = MPoly.var(2, 0, ("r", "s"))
    s = MPoly.var(2, 1, ("r", "s"))
    return complex_block_transition_entries(n, r, s, z + p11, z + p12, zero=z)


def symbolic_complex_det(n, p11=1, p12=0) -> MPoly:
    P = symbolic_complex_transition(n, p11, p12)
    z = MPoly(2, {}, names=("r", "s"))
    return det_generic(P, z, z + 1)


def published_q(n) -> int:
    if n % 2 or n < 4:
        raise NonderogError("q_n is defined for even n >= 4")
    if n == 4:
        return 4
    return (-1) ** (n // 2) * (n // 2 - 1) ** n


def corrected_q(n) -> int:
    """(-1)^{n/2} 2^{(n/2)(n/2 - 1)}, which is what the recurrence produces."""
    if n % 2 or n < 2:
        raise NonderogError("q_n needs even n")
    h = n // 2
    return (-1) ** h * 2 ** (h * (h - 1))


def detP_closed_form(n, s, p11=ONE, p12=ZERO, q=None):
    q = published_q(n) if q is None else q
    return simplify(s ** (n * n // 4) * (p11 * p11 + p12 * p12) ** (n // 2) * q)


@dataclass
class DetCheck:
    n: int
    computed: object
    formula: object
    match: bool

    def to_json(self):
        from .scalars import encode_scalar
        return {"n": self.n, "computed": encode_scalar(self.computed),
                "formula": encode_scalar(self.formula), "match": self.match}


def detP_formula_check(n, r, s, p11=ONE, p12=ZERO, corrected=False) -> DetCheck:
    """Compare det of the recurrence-built P with the closed formula."""
    if n % 2:
        raise NonderogError("n must be even")
    r = as_rational(r)
    if not isinstance(s, QuadExt):
        s = as_rational(s)
    p11, p12 = as_rational(p11), as_rational(p12)
    P = complex_block_transition(n, r, s, p11, p12)
    computed = P.det()
    q = corrected_q(n) if corrected else published_q(n)
    formula = detP_closed_form(n, s, p11, p12, q)
    return DetCheck(n, computed, formula, computed == formula)


# ---------------------------------------------------------------------------
# Jordanization


@dataclass
class JordanBlock:
    tag: str  # "diag", "A", "B", "C"
    size: int
    eigenvalue: object  # lambda, or (r, s) for a complex pair
    start: int


@dataclass
class JordanResult:
    J: Matrix
    P: Matrix
    blocks: list = field(default_factory=list)
    convention: str = "P^-1 M P = J (columns of P are the Jordan basis)"

    @property
    def case_tags(self):
        return [b.tag for b in self.blocks]

    def detP(self):
        return self.P.det()


def _cyclic_vector(M: Matrix, W_basis, k):
    """A vector x in span(W_basis) with x, Mx, ..., M^{k-1}x independent."""
    m = len(W_basis)
    r = 1
    while True:
        for c in _l1_shell(m, r):
            x = [ZERO] * M.rows
            for a, w in zip(c, W_basis):
                if a:
                    x = [p + a * q for p, q in zip(x, w)]
            vecs = [tuple(x)]
            for _ in range(k - 1):
                vecs.append(M.apply(vecs[-1]))
            if Subspace(M.rows, vecs).dim == k:
                return vecs
        r += 1
        if r > 4 * k + 4:
            raise LinAlgError("internal: no cyclic vector found")


def _krylov(M, W_basis, k):
    """Columns (M^{k-1}x, ..., Mx, x)."""
    vecs = _cyclic_vector(M, W_basis, k)
    return list(reversed(vecs))


def jordanize(M: Matrix) -> JordanResult:
    _require_nonderogatory(M)
    n = M.rows
    chi = char_poly(M)
    columns = []
    Jblocks = []
    blocks = []
    exts = set()
    start = 0
    for f, mult in square_free_decomposition(chi):
        for piece in _split_squarefree(f):
            if piece.degree == 1:
                lam = -piece.coeffs[0]
                groups = [(lam, None)]
            else:
                c0, c1 = piece.coeffs[0], piece.coeffs[1]
                r = -c1 / 2
                disc = r * r - c0  # roots r +- sqrt(disc)
                if disc > 0:
                    sq = sqrt_rational(disc)
                    if isinstance(sq, QuadExt):
                        exts.add(sq.d)
                    groups = [(r + sq, None), (r - sq, None)]
                else:
                    groups = [(r, -disc)]  # complex pair r +- i s, s^2 = -disc
            for lam, s2 in groups:
                if s2 is None:
                    k = mult
                    A = M - Matrix.identity(n) * lam
                    W = (A ** k).kernel()
                    K = Matrix.from_columns(_krylov(M, W, k))
                    Pb = real_block_transition(k, lam)
                    T = K * Pb
                    Jb = real_jordan_block(k, lam)
                    tag = "diag" if k == 1 else "A"
                    blocks.append(JordanBlock(tag, k, lam, start))
                else:
                    k = 2 * mult
                    s = sqrt_rational(s2)
                    if isinstance(s, QuadExt):
                        exts.add(s.d)
                    W = poly_eval_matrix(piece ** mult, M).kernel()
                    K = Matrix.from_columns(_krylov(M, W, k))
                    Pb = complex_block_transition(k, r, s)
                    T = K * Pb
                    Jb = complex_jordan_block(k, r, s)
                    tag = "B" if mult == 1 else "C"
                    blocks.append(JordanBlock(tag, k, (r, s), start))
                if len(exts) > 1:
                    raise NonderogError(
                        "eigenvalues need more than one square root; nested extensions unsupported"
                    )
                columns += [T.column(j) for j in range(k)]
                Jblocks.append(Jb)
                start += k
    P = Matrix.from_columns(columns)
    J = Matrix.block_diag(Jblocks)
    if not P.is_invertible():
        raise LinAlgError("internal: Jordan basis is singular")
    if not (M * P == P * J):
        raise LinAlgError("internal: similarity check failed")
    return JordanResult(J, P, blocks)


# ---------------------------------------------------------------------------
# Cartan subalgebras


@dataclass(frozen=True)
class CartanVerdict:
    is_cartan: bool
    via_normalizer: bool
    via_distinct_eigenvalues: bool


def cartan_test(M: Matrix) -> CartanVerdict:
    _require_nonderogatory(M)
    basis = polynomial_basis(M)
    via_norm = normalizer_of_span(basis) == span_matrices(basis)
    via_eig = is_squarefree(char_poly(M))
    if via_norm != via_eig:
        raise InternalDisagreement(
            f"normalizer criterion {via_norm} vs distinct-eigenvalue criterion {via_eig}"
        )
    return CartanVerdict(via_norm, via_norm, via_eig)


def cartan_labels(n):
    """Distinct labels of K[M] ⋉ V over nonderogatory M with n distinct
    eigenvalues, found by building one matrix per real/complex split."""
    labels = set()
    for q in range(n // 2 + 1):
        p = n - 2 * q
        blocks = [Matrix([[Fraction(i + 1)]]) for i in range(p)]
        blocks += [rotation_block(Fraction(j), Fraction(1)) for j in range(q)]
        M = Matrix.block_diag(blocks) if blocks else Matrix.zeros(0)
        if not cartan_test(M).is_cartan:
            raise InternalDisagreement("distinct-eigenvalue matrix is not Cartan")
        labels.add(str(classify_G_phi(M)))
    return sorted(labels)


# ---------------------------------------------------------------------------
# Vandermonde isomorphism


@dataclass
class VandermondeData:
    N: Matrix
    det: Fraction
    product_formula: Fraction
    psi: Matrix
    source: LieAlgebra
    target: LieAlgebra


def vandermonde_isomorphism(lambdas) -> VandermondeData:
    lam = [as_rational(x) for x in lambdas]
    n = len(lam)
    if any(x == 0 for x in lam):
        raise NonderogError("eigenvalues must be nonzero")
    if len(set(lam)) != n:
        raise NonderogError("eigenvalues must be distinct")
    N = Matrix([[x ** j for j in range(1, n + 1)] for x in lam])
    det = N.det()
    prod = ONE
    for x in lam:
        prod *= x
    for i, j in combinations(range(n), 2):
        prod *= lam[j] - lam[i]
    if det != prod:
        raise InternalDisagreement(f"Vandermonde determinant {det} vs product {prod}")
    phi = Matrix.diag(lam)
    target = semidirect_sum([phi ** k for k in range(1, n + 1)], n)
    aff = LieAlgebra(2, {(0, 1): {1: 1}})
    source = direct_sum([aff] * n)
    Ninv = N.inverse()
    cols = []
    for i in range(n):
        a = [Ninv[k, i] for k in range(n)] + [ZERO] * n
        b = [ZERO] * n + [ONE if k == i else ZERO for k in range(n)]
        cols += [a, b]
    psi = Matrix.from_columns(cols)
    return VandermondeData(N, det, prod, psi, source, target)
