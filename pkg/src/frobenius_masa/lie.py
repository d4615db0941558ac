"""Lie algebras given by structure constants.

Internally indices are 0-based; the JSON form and ``basis_names`` follow the
usual e1..e_dim labelling.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations

from .linalg import (
    ONE,
    ZERO,
    LinAlgError,
    Matrix,
    RowReducer,
    Subspace,
    is_commuting_family,
    matrix_algebra_closure,
    solve,
    span_matrices,
)
from .mpoly import MPoly
from .scalars import as_rational, decode_scalar, encode_scalar


class LieError(ValueError):
    pass


class JacobiError(LieError):
    def __init__(self, triple, residue):
        i, j, k = triple
        super().__init__(
            f"Jacobi identity fails on (e{i + 1}, e{j + 1}, e{k + 1}): residue {residue}"
        )
        self.triple = triple


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q by structure constants.

    ``brackets`` maps (i, j) with i < j to {k: c} meaning [e_i, e_j] = sum c e_k.
    ``provenance`` remembers how the algebra was built, which is what makes
    the nilradical computable: ("split", B, n), ("sum", parts) or None.
    """

    def __init__(self, dim, brackets=None, names=None, provenance=None, check=True):
        self.dim = dim
        self.basis_names = tuple(names) if names else tuple(f"e{i + 1}" for i in range(dim))
        if len(self.basis_names) != dim:
            raise LieError("wrong number of basis names")
        table = {}
        for (i, j), terms in (brackets or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise LieError(f"bracket index ({i + 1}, {j + 1}) out of range")
            if i == j:
                if any(as_rational(c) for c in terms.values()):
                    raise LieError("[e_i, e_i] must vanish")
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            row = table.setdefault((i, j), {})
            for k, c in terms.items():
                if not 0 <= k < dim:
                    raise LieError(f"bracket result index {k + 1} out of range")
                row[k] = row.get(k, ZERO) + sign * as_rational(c)
        self.brackets = {
            key: {k: c for k, c in row.items() if c != 0}
            for key, row in table.items()
            if any(c != 0 for c in row.values())
        }
        self.provenance = provenance
        self._ad = None
        if check:
            bad = self.jacobi_violation()
            if bad is not None:
                raise JacobiError(*bad)

    # -- brackets ---------------------------------------------------------
    def basis_bracket(self, i, j) -> dict:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket(self, x, y):
        out = [ZERO] * self.dim
        xs = [(i, a) for i, a in enumerate(x) if a != 0]
        ys = [(j, b) for j, b in enumerate(y) if b != 0]
        for i, a in xs:
            for j, b in ys:
                if i == j:
                    continue
                for k, c in self.basis_bracket(i, j).items():
                    out[k] += a * b * c
        return tuple(out)

    def unit(self, i):
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def ad(self, i) -> Matrix:
        """Matrix of ad(e_i) (columns are images of basis vectors)."""
        if self._ad is None:
            mats = []
            for a in range(self.dim):
                cols = [[ZERO] * self.dim for _ in range(self.dim)]
                for j in range(self.dim):
                    for k, c in self.basis_bracket(a, j).items():
                        cols[k][j] = c
                mats.append(Matrix(cols))
            self._ad = mats
        return self._ad[i]

    def ad_vec(self, x) -> Matrix:
        acc = Matrix.zeros(self.dim)
        for i, a in enumerate(x):
            if a != 0:
                acc = acc + self.ad(i) * a
        return acc

    def jacobi_violation(self):
        d = self.dim
        for i, j, k in combinations(range(d), 3):
            ei, ej, ek = self.unit(i), self.unit(j), self.unit(k)
            t1 = self.bracket(ei, self.bracket(ej, ek))
            t2 = self.bracket(ej, self.bracket(ek, ei))
            t3 = self.bracket(ek, self.bracket(ei, ej))
            res = tuple(a + b + c for a, b, c in zip(t1, t2, t3))
            if any(res):
                return (i, j, k), res
        return None

    def structure_equal(self, other) -> bool:
        return self.dim == other.dim and self.brackets == other.brackets

    def is_abelian(self):
        return not self.brackets

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.structure_equal(other)

    def __hash__(self):
        return hash((self.dim, frozenset((k, frozenset(v.items())) for k, v in self.brackets.items())))

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, nonzero brackets={len(self.brackets)})"

    def table(self):
        """Human-readable bracket lines, 1-based."""
        lines = []
        for (i, j) in sorted(self.brackets):
            terms = self.brackets[(i, j)]
            rhs = " + ".join(
                (self.basis_names[k] if c == 1 else f"({c}){self.basis_names[k]}")
                for k, c in sorted(terms.items())
            ).replace("+ (-", "- (")
            lines.append(f"[{self.basis_names[i]},{self.basis_names[j]}] = {rhs}")
        return lines

    # -- subspaces --------------------------------------------------------
    def bracket_space(self, U: Subspace, W: Subspace) -> Subspace:
        vecs = [self.bracket(u, w) for u in U.basis for w in W.basis]
        return Subspace(self.dim, vecs)

    def whole(self) -> Subspace:
        return Subspace.full(self.dim)

    # -- transport --------------------------------------------------------
    def change_basis(self, P: Matrix, names=None) -> "LieAlgebra":
        """Algebra in the basis f_j = sum_i P[i, j] e_i."""
        if P.shape != (self.dim, self.dim):
            raise LieError("basis change has the wrong shape")
        Pinv = P.inverse()
        cols = [P.column(j) for j in range(self.dim)]
        br = {}
        for a, b in combinations(range(self.dim), 2):
            v = self.bracket(cols[a], cols[b])
            w = Pinv.apply(v)
            terms = {k: c for k, c in enumerate(w) if c != 0}
            if terms:
                br[(a, b)] = terms
        return LieAlgebra(self.dim, br, names, check=False)

    # -- JSON ---------------------------------------------------------------
    def to_json(self):
        return {
            "dim": self.dim,
            "basis": list(self.basis_names),
            "brackets": [
                {"i": i + 1, "j": j + 1,
                 "terms": [{"k": k + 1, "c": encode_scalar(c)} for k, c in sorted(t.items())]}
                for (i, j), t in sorted(self.brackets.items())
            ],
        }

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "dim" not in obj:
            raise ValueError("Lie algebra JSON needs 'dim'")
        dim = obj["dim"]
        if not isinstance(dim, int) or dim < 0:
            raise ValueError("'dim' must be a nonnegative integer")
        br = {}
        for pos, ent in enumerate(obj.get("brackets", [])):
            try:
                i, j = ent["i"], ent["j"]
                terms = {t["k"] - 1: decode_scalar(t["c"]) for t in ent["terms"]}
            except (KeyError, TypeError) as exc:
                raise ValueError(f"brackets[{pos}]: malformed entry ({exc})") from None
            if not (isinstance(i, int) and isinstance(j, int)) or i >= j:
                raise ValueError(f"brackets[{pos}]: need integer indices with i < j")
            br[(i - 1, j - 1)] = terms
        return cls(dim, br, obj.get("basis"))


def make_lie_algebra(dim, brackets, names=None) -> LieAlgebra:
    """Build from 1-based brackets {(i, j): {k: c}}; Jacobi is enforced."""
    zb = {(i - 1, j - 1): {k - 1: c for k, c in t.items()} for (i, j), t in brackets.items()}
    return LieAlgebra(dim, zb, names)


def abelian(dim) -> LieAlgebra:
    return LieAlgebra(dim, {})


# ---------------------------------------------------------------------------
# constructions


def semidirect_sum(B, n=None) -> LieAlgebra:
    """span(B) acting on K^n; basis (B, then the standard basis of K^n)."""
    B = list(B)
    if not B:
        raise LieError("need at least one generator")
    n = B[0].rows if n is None else n
    for b in B:
        if b.shape != (n, n):
            raise LieError(f"generator of shape {b.shape}, expected {n}x{n}")
    if not is_commuting_family(B):
        raise LieError("generators do not commute")
    if span_matrices(B).dim != len(B):
        raise LieError("generators are linearly dependent")
    m = len(B)
    br = {}
    for a, b in enumerate(B):
        for j in range(n):
            terms = {m + k: b.data[k][j] for k in range(n) if b.data[k][j] != 0}
            if terms:
                br[(a, m + j)] = terms
    return LieAlgebra(m + n, br, provenance=("split", tuple(B), n), check=False)


def direct_sum(gs) -> LieAlgebra:
    gs = list(gs)
    br = {}
    off = 0
    for g in gs:
        for (i, j), t in g.brackets.items():
            br[(i + off, j + off)] = {k + off: c for k, c in t.items()}
        off += g.dim
    return LieAlgebra(off, br, provenance=("sum", tuple(gs)), check=False)


# ---------------------------------------------------------------------------
# series


def derived_series(g: LieAlgebra):
    dims = [g.dim]
    cur = g.whole()
    while True:
        nxt = g.bracket_space(cur, cur)
        if nxt.dim == cur.dim:
            break
        dims.append(nxt.dim)
        cur = nxt
        if cur.dim == 0:
            break
    return dims


def lower_central_series(g: LieAlgebra, start: Subspace | None = None):
    """Dimensions of N, [N,N], [N,[N,N]], ... for an ideal-free start space N."""
    N = start if start is not None else g.whole()
    dims = [N.dim]
    cur = N
    while cur.dim:
        nxt = g.bracket_space(N, cur)
        if nxt.dim == cur.dim:
            break
        dims.append(nxt.dim)
        cur = nxt
    return dims


def derived_and_central_series(g: LieAlgebra):
    return derived_series(g), lower_central_series(g)


def is_two_solvable(g: LieAlgebra) -> bool:
    D1 = g.bracket_space(g.whole(), g.whole())
    return g.bracket_space(D1, D1).dim == 0


def center(g: LieAlgebra, within: Subspace | None = None) -> Subspace:
    """{x in W : [x, W] = 0}, W = within (default: the whole algebra)."""
    W = within if within is not None else g.whole()
    if W.dim == 0:
        return W
    rr = RowReducer(W.dim)
    for w in W.basis:
        # coefficient vector c -> [sum c_a u_a, w]
        imgs = [g.bracket(u, w) for u in W.basis]
        for k in range(g.dim):
            rr.add({a: imgs[a][k] for a in range(W.dim) if imgs[a][k] != 0})
    vecs = []
    for c in rr.kernel():
        v = [ZERO] * g.dim
        for a, x in enumerate(c):
            if x != 0:
                v = [p + x * q for p, q in zip(v, W.basis[a])]
        vecs.append(v)
    return Subspace(g.dim, vecs)


# ---------------------------------------------------------------------------
# derivations


def derivation_system(g: LieAlgebra):
    """Sparse equations for D with D[x,y] = [Dx,y] + [x,Dy].

    Unknown D[l][k] (coefficient of e_l in D e_k) has index l*dim + k.
    """
    d = g.dim
    eqs = []
    for i, j in combinations(range(d), 2):
        cij = g.basis_bracket(i, j)
        rows = [dict() for _ in range(d)]
        # D[e_i,e_j] = sum_k c_ij^k D e_k -> component l: sum_k c_ij^k D[l][k]
        for k, c in cij.items():
            for l in range(d):
                rows[l][l * d + k] = rows[l].get(l * d + k, ZERO) + c
        # - [D e_i, e_j] = - sum_m D[m][i] [e_m, e_j]
        for m in range(d):
            for l, c in g.basis_bracket(m, j).items():
                rows[l][m * d + i] = rows[l].get(m * d + i, ZERO) - c
            for l, c in g.basis_bracket(i, m).items():
                rows[l][m * d + j] = rows[l].get(m * d + j, ZERO) - c
        eqs.extend(r for r in rows if r)
    return eqs


def derivation_algebra(g: LieAlgebra) -> Subspace:
    d = g.dim
    rr = RowReducer(d * d)
    for eq in derivation_system(g):
        rr.add(eq)
    return Subspace(d * d, rr.kernel())


def is_derivation(g: LieAlgebra, D: Matrix) -> bool:
    for i, j in combinations(range(g.dim), 2):
        lhs = D.apply(g.bracket(g.unit(i), g.unit(j)))
        rhs = tuple(a + b for a, b in zip(g.bracket(D.column(i), g.unit(j)),
                                          g.bracket(g.unit(i), D.column(j))))
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# nilradical of split forms


def trace_form_radical(A: Subspace, n: int) -> Subspace:
    """{a in A : tr(ab) = 0 for all b in A}; A a matrix algebra in gl(n)."""
    mats = A.matrices(n)
    m = len(mats)
    if m == 0:
        return A
    gram = Matrix([[(x * y).trace() for y in mats] for x in mats])
    vecs = []
    for c in gram.kernel():
        v = [ZERO] * (n * n)
        for a, x in enumerate(c):
            if x != 0:
                v = [p + x * q for p, q in zip(v, A.basis[a])]
        vecs.append(v)
    return Subspace(n * n, vecs)


def nilpotent_part(B) -> Subspace:
    """Nilpotent elements of span(B), B commuting, as a subspace of gl(n).

    In the commutative algebra A generated by B and I the nilpotent elements
    are the radical, which in characteristic zero is the radical of the trace
    form. Intersecting with span(B) gives Nil(B).
    """
    B = list(B)
    n = B[0].rows
    if not is_commuting_family(B):
        raise LieError("generators do not commute")
    A = matrix_algebra_closure(B)
    R = trace_form_radical(A, n)
    nil = span_matrices(B).intersect(R)
    # closure under addition is automatic for commuting nilpotents; recheck
    for M in nil.matrices(n):
        if not (M ** n).is_zero():
            raise LinAlgError("internal: radical element is not nilpotent")
    return nil


def nilradical_split(B, n=None) -> Subspace:
    """Nil(B) + V inside semidirect_sum(B, n), in the algebra's coordinates."""
    B = list(B)
    n = B[0].rows if n is None else n
    m = len(B)
    nil = nilpotent_part(B)
    vecs = []
    # coordinates of nilpotent elements in the basis B (not echelon basis)
    cols = [b.flat() for b in B]
    for v in nil.basis:
        coef = solve(Matrix.from_columns(cols), v)
        if coef is None:
            raise LinAlgError("internal: nilpotent element outside span(B)")
        vecs.append(tuple(coef) + (ZERO,) * n)
    for j in range(n):
        vecs.append(tuple(ZERO for _ in range(m)) + tuple(ONE if k == j else ZERO for k in range(n)))
    return Subspace(m + n, vecs)


def split_generators(g: LieAlgebra):
    """(B, n) with g = span(B) ⋉ K^n in g's own basis order up to block
    layout, recovered from provenance; None when unknown."""
    prov = g.provenance
    if prov is None:
        return None
    if prov[0] == "split":
        return list(prov[1]), prov[2]
    if prov[0] == "sum":
        fams = []
        for part in prov[1]:
            sub = split_generators(part)
            if sub is None:
                return None
            fams.append(sub)
        sizes = [n for _, n in fams]
        out = []
        for idx, (B, _) in enumerate(fams):
            for M in B:
                out.append(Matrix.block_diag(
                    [M if k == idx else Matrix.zeros(sizes[k]) for k in range(len(fams))]))
        return out, sum(sizes)
    return None


def square_form_inertia(B):
    """For A = Nil(B) with dim A^2 = 1: inertia of (a, b) -> ab on A/A^2,
    as (max(pos, neg), min(pos, neg), zero); None when dim A^2 != 1.

    Over R this separates algebras that agree after complexification, such
    as the ones whose squaring forms are x^2 + y^2 and x^2 - y^2."""
    B = list(B)
    n = B[0].rows
    A = nilpotent_part(B)
    mats = A.matrices(n)
    A2 = Subspace(n * n, [(x * y).flat() for x in mats for y in mats])
    if A2.dim != 1:
        return None
    comp = []
    acc = A2
    for M in mats:
        nxt = acc + Subspace(n * n, [M.flat()])
        if nxt.dim > acc.dim:
            comp.append(M)
            acc = nxt
    rows = [[A2.coordinates(((x * y + y * x) * Fraction(1, 2)).flat())[0] for y in comp] for x in comp]
    pos, neg, zero = inertia(Matrix(rows)) if comp else (0, 0, 0)
    return (max(pos, neg), min(pos, neg), zero)


def nilradical(g: LieAlgebra) -> Subspace | None:
    """Nilradical from construction provenance, or None when unknown."""
    prov = g.provenance
    if prov is None:
        return None
    if prov[0] == "split":
        return nilradical_split(prov[1], prov[2])
    if prov[0] == "sum":
        vecs = []
        off = 0
        for part in prov[1]:
            N = nilradical(part)
            if N is None:
                return None
            for v in N.basis:
                vecs.append((ZERO,) * off + tuple(v) + (ZERO,) * (g.dim - off - part.dim))
            off += part.dim
        return Subspace(g.dim, vecs)
    return None


# ---------------------------------------------------------------------------
# Pfaffian and the Frobenius decision


def dalpha_matrix(g: LieAlgebra, alpha=None):
    """S(alpha)_{ij} = -alpha([e_i, e_j]); symbolic in alpha when alpha is None."""
    d = g.dim
    if alpha is None:
        def entry(i, j):
            p = MPoly(d, {}, names=[f"a{k + 1}" for k in range(d)])
            terms = {}
            for k, c in g.basis_bracket(i, j).items():
                e = [0] * d
                e[k] = 1
                terms[tuple(e)] = -c
            return MPoly(d, terms, p.names)
        return [[entry(i, j) for j in range(d)] for i in range(d)]
    alpha = [as_rational(a) for a in alpha]
    return Matrix([[-sum((c * alpha[k] for k, c in g.basis_bracket(i, j).items()), ZERO)
                    for j in range(d)] for i in range(d)])


def pfaffian(S, zero=None):
    """Pfaffian of a skew matrix (list of lists or Matrix), first-row expansion
    memoized on the set of remaining indices."""
    if isinstance(S, Matrix):
        S = [list(r) for r in S.data]
        zero = Fraction(0) if zero is None else zero
    n = len(S)
    if zero is None:
        zero = S[0][0] * 0 if n else Fraction(0)
    if n % 2:
        return zero
    one = zero + 1
    memo = {}

    def pf(idx: tuple):
        if not idx:
            return one
        hit = memo.get(idx)
        if hit is not None:
            return hit
        i = idx[0]
        acc = zero
        for pos in range(1, len(idx)):
            j = idx[pos]
            a = S[i][j]
            if not a:
                continue
            rest = idx[1:pos] + idx[pos + 1:]
            sub = pf(rest)
            if not sub:
                continue
            term = a * sub
            acc = acc + term if pos % 2 == 1 else acc - term
        memo[idx] = acc
        return acc

    return pf(tuple(range(n)))


def pfaffian_of_dalpha(g: LieAlgebra) -> MPoly:
    names = [f"a{k + 1}" for k in range(g.dim)]
    if g.dim % 2:
        return MPoly(g.dim, {}, names)
    return pfaffian(dalpha_matrix(g), zero=MPoly(g.dim, {}, names))


def _l1_shell(m, r):
    """All integer vectors of length m with L1 norm r, deterministic order.

    Positive unit-type vectors come first (all entries >= 0, lexicographic
    from the last coordinate), then the rest.
    """
    def comps(m, r):
        if m == 1:
            yield (r,)
            return
        for first in range(r, -1, -1):
            for rest in comps(m - 1, r - first):
                yield (first,) + rest

    nonneg = sorted(comps(m, r), key=lambda v: tuple(reversed(v)), reverse=True)
    yield from nonneg
    for v in nonneg:
        support = [i for i, x in enumerate(v) if x]
        for mask in range(1, 1 << len(support)):
            w = list(v)
            for b, i in enumerate(support):
                if mask >> b & 1:
                    w[i] = -w[i]
            yield tuple(w)


@dataclass
class FrobeniusVerdict:
    frobenius: bool
    certificate: tuple | None = None
    pfaffian: MPoly | None = None
    pfaffian_at_certificate: Fraction | None = None

    def describe(self):
        if self.frobenius:
            return "Frobenius"
        return "NotFrobenius"


def frobenius_decide(g: LieAlgebra, pf: MPoly | None = None) -> FrobeniusVerdict:
    if g.dim % 2:
        return FrobeniusVerdict(False, None, MPoly(g.dim, {}))
    if pf is None:
        pf = pfaffian_of_dalpha(g)
    if pf.is_zero():
        return FrobeniusVerdict(False, None, pf)
    r = 1
    while True:
        for v in _l1_shell(g.dim, r):
            val = pf.evaluate(v)
            if val != 0:
                alpha = tuple(Fraction(x) for x in v)
                det = dalpha_matrix(g, alpha).det()
                if det == 0 or det != val * val:
                    raise LieError("internal: Pfaffian and determinant disagree")
                return FrobeniusVerdict(True, alpha, pf, val)
        r += 1


def is_frobenius_functional(g: LieAlgebra, alpha) -> bool:
    if g.dim % 2:
        return False
    return dalpha_matrix(g, alpha).det() != 0


def dual_basis_form(dim, k) -> tuple:
    """The linear form e_k^* (1-based k)."""
    return tuple(ONE if i == k - 1 else ZERO for i in range(dim))


def open_orbit_rank(B, alpha) -> int:
    """Rank of a -> -alpha o a on span(B)."""
    B = list(B)
    n = B[0].rows
    alpha = [as_rational(a) for a in alpha]
    if len(alpha) != n:
        raise LieError(f"linear form has {len(alpha)} coefficients, expected {n}")
    rows = [[-sum((alpha[i] * b.data[i][j] for i in range(n)), ZERO) for j in range(n)] for b in B]
    return Matrix(rows).rank()


# ---------------------------------------------------------------------------
# isomorphisms and invariants


def verify_isomorphism(psi: Matrix, g1: LieAlgebra, g2: LieAlgebra) -> bool:
    """psi has the images psi(e_j) of g1's basis as columns, in g2's basis."""
    if psi.shape != (g1.dim, g2.dim) or g1.dim != g2.dim:
        raise LieError("isomorphism candidate has the wrong shape")
    if not psi.is_invertible():
        return False
    cols = [psi.column(j) for j in range(g1.dim)]
    for i, j in combinations(range(g1.dim), 2):
        lhs = psi.apply(g1.bracket(g1.unit(i), g1.unit(j)))
        rhs = g2.bracket(cols[i], cols[j])
        if lhs != rhs:
            return False
    return True


def killing_form(g: LieAlgebra) -> Matrix:
    ads = [g.ad(i) for i in range(g.dim)]
    return Matrix([[(a * b).trace() for b in ads] for a in ads])


def inertia(S: Matrix):
    """(positive, negative, zero) counts of a symmetric rational matrix."""
    a = [list(r) for r in S.data]
    n = len(a)
    pos = neg = 0
    idx = list(range(n))
    while idx:
        piv = next((i for i in idx if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in idx for j in idx if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j, makes a[i][i] = 2 a[i][j] + a[j][j] != 0
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        idx.remove(piv)
        for i in idx:
            f = a[i][piv] / p
            if f:
                for k in idx:
                    a[i][k] -= f * a[piv][k]
        for i in idx:
            a[i][piv] = a[piv][i] = ZERO
    return pos, neg, n - pos - neg


@dataclass
class Fingerprint:
    dim: int
    derived_dims: list
    center_dim: int
    der_dim: int
    killing_inertia: tuple
    nilradical_dim: int | None = None
    nilradical_lcs: list | None = None
    nilradical_class: int | None = None
    nilradical_derived_dim: int | None = None
    nilradical_center_dim: int | None = None
    nilradical_status: str = "available"
    square_form: tuple | None = None
    extra: dict = field(default_factory=dict)

    def key(self):
        return (
            self.dim, tuple(self.derived_dims), self.center_dim, self.der_dim,
            tuple(self.killing_inertia), self.nilradical_dim,
            tuple(self.nilradical_lcs or ()), self.nilradical_class,
            self.nilradical_derived_dim, self.nilradical_center_dim,
            self.square_form,
        )

    def base_key(self):
        """The invariants without the Der, nilradical-centre and Killing extensions."""
        return (
            self.dim, tuple(self.derived_dims), self.center_dim,
            self.nilradical_dim, tuple(self.nilradical_lcs or ()),
            self.nilradical_class, self.nilradical_derived_dim,
        )

    def to_json(self):
        d = asdict(self)
        d["killing_inertia"] = list(self.killing_inertia)
        d["square_form"] = list(self.square_form) if self.square_form else None
        return d


def fingerprint(g: LieAlgebra, split_data=None) -> Fingerprint:
    if split_data is not None:
        N = nilradical_split(*split_data)
    else:
        N = nilradical(g)
    fp = Fingerprint(
        dim=g.dim,
        derived_dims=derived_series(g),
        center_dim=center(g).dim,
        der_dim=derivation_algebra(g).dim,
        killing_inertia=inertia(killing_form(g)),
    )
    if N is None:
        fp.nilradical_status = "unavailable"
        return fp
    lcs = lower_central_series(g, N)
    fp.nilradical_dim = N.dim
    fp.nilradical_lcs = lcs
    fp.nilradical_class = len([x for x in lcs if x]) if lcs[-1] == 0 else None
    fp.nilradical_derived_dim = g.bracket_space(N, N).dim
    fp.nilradical_center_dim = center(g, N).dim
    split = split_data if split_data is not None else split_generators(g)
    if split is not None:
        fp.square_form = square_form_inertia(split[0])
    return fp
