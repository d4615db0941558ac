"""Independent reference computations for the test suite.

Everything here works on plain lists of Fractions and shares no code with
the package, so agreement between the two is meaningful.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations


def F(x):
    return x if isinstance(x, Fraction) else Fraction(x)


# -- dense linear algebra -----------------------------------------------------


def rref(rows, ncols):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    a = [[F(x) for x in r] for r in rows]
    piv = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if k is None:
            continue
        a[r], a[k] = a[k], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], piv


def rank(rows, ncols=None):
    if not rows:
        return 0
    return len(rref(rows, ncols if ncols is not None else len(rows[0]))[1])


def nullspace(rows, ncols):
    red, piv = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        out.append(v)
    return out


def det_leibniz(m):
    """Determinant by the permutation expansion (n <= 7 or so)."""
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i, j in combinations(range(n), 2) if perm[i] > perm[j])
        prod = Fraction(1)
        for i in range(n):
            prod *= F(m[i][perm[i]])
            if prod == 0:
                break
        total += -prod if inv % 2 else prod
    return total


def det_gauss(m):
    a = [[F(x) for x in r] for r in m]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        k = next((i for i in range(c, n) if a[i][c] != 0), None)
        if k is None:
            return Fraction(0)
        if k != c:
            a[c], a[k] = a[k], a[c]
            d = -d
        d *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def matmul(a, b):
    return [[sum((F(a[i][k]) * F(b[k][j]) for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def charpoly_interp(m):
    """Coefficients (ascending) of det(xI - M), by evaluating at n+1 integers
    and Lagrange interpolation."""
    n = len(m)
    xs = list(range(n + 1))
    ys = [det_gauss([[F(int(i == j) * x) - F(m[i][j]) for j in range(n)] for i in range(n)])
          for x in xs]
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k in range(n + 1):
            coeffs[k] += ys[i] * basis[k] / denom
    return coeffs


def positive_negative_roots(coeffs):
    """For a real-rooted polynomial: (#positive, #negative, #zero) roots,
    by Descartes' rule of signs (exact for real-rooted polynomials)."""
    c = [F(x) for x in coeffs]
    zero = 0
    while c and c[0] == 0:
        c.pop(0)
        zero += 1

    def changes(seq):
        s = [x for x in seq if x != 0]
        return sum(1 for a, b in zip(s, s[1:]) if (a > 0) != (b > 0))

    pos = changes(c)
    neg = changes([x * (-1) ** k for k, x in enumerate(c)])
    return pos, neg, zero


def symmetric_inertia(m):
    return positive_negative_roots(charpoly_interp(m))


# -- Lie algebras from raw structure constants --------------------------------


class RawLie:
    """Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k."""

    def __init__(self, dim, table):
        self.dim = dim
        self.c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in table.items():
            for k, v in terms.items():
                self.c[i][j][k] += F(v)
                self.c[j][i][k] -= F(v)

    @classmethod
    def from_library(cls, g):
        return cls(g.dim, g.brackets)

    def br(self, x, y):
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0:
                    continue
                for k in range(self.dim):
                    if self.c[i][j][k]:
                        out[k] += a * b * self.c[i][j][k]
        return out

    def e(self, i):
        return [Fraction(int(k == i)) for k in range(self.dim)]

    def ad(self, x):
        cols = [self.br(x, self.e(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def jacobi_ok(self):
        d = self.dim
        for i, j, k in combinations(range(d), 3):
            a = self.br(self.e(i), self.br(self.e(j), self.e(k)))
            b = self.br(self.e(j), self.br(self.e(k), self.e(i)))
            c = self.br(self.e(k), self.br(self.e(i), self.e(j)))
            if any(x + y + z for x, y, z in zip(a, b, c)):
                return False
        return True


def span_basis(vectors, dim):
    return rref([list(v) for v in vectors], dim)[0] if vectors else []


def bracket_span(g, U, W):
    return span_basis([g.br(u, w) for u in U for w in W], g.dim)


def derived_dims(g):
    cur = [g.e(i) for i in range(g.dim)]
    dims = [g.dim]
    while True:
        nxt = bracket_span(g, cur, cur)
        if len(nxt) == len(cur):
            return dims
        dims.append(len(nxt))
        cur = nxt
        if not cur:
            return dims


def lcs_dims(g, N):
    dims = [len(N)]
    cur = N
    while cur:
        nxt = bracket_span(g, N, cur)
        if len(nxt) == len(cur):
            break
        dims.append(len(nxt))
        cur = nxt
    return dims


def centre_dim(g, W):
    """dim {x in span W : [x, W] = 0}."""
    if not W:
        return 0
    eqs = []
    for w in W:
        imgs = [g.br(u, w) for u in W]
        for k in range(g.dim):
            eqs.append([imgs[a][k] for a in range(len(W))])
    return len(W) - rank(eqs, len(W))


def derivation_dim(g):
    d = g.dim
    eqs = []
    # unknown D[l][k] at index l*d + k (coefficient of e_l in D e_k)
    for i, j in combinations(range(d), 2):
        for t in range(d):
            row = [Fraction(0)] * (d * d)
            for k in range(d):
                c = g.c[i][j][k]
                if c:
                    row[t * d + k] += c
            for l in range(d):
                # [D e_i, e_j] = sum_l D[l][i] c[l][j][t]
                if g.c[l][j][t]:
                    row[l * d + i] -= g.c[l][j][t]
                if g.c[i][l][t]:
                    row[l * d + j] -= g.c[i][l][t]
            if any(row):
                eqs.append(row)
    return d * d - rank(eqs, d * d)


def killing_inertia(g):
    ads = [g.ad(g.e(i)) for i in range(g.dim)]
    K = [[sum(matmul(a, b)[t][t] for t in range(g.dim)) for b in ads] for a in ads]
    return symmetric_inertia(K)


def nilradical_solvable(g, trials=3, seed=7):
    """Nilradical of a solvable algebra as the ad-nilpotent elements.

    For solvable g the ad-nilpotent elements are the common zeros of the
    roots; x is one iff tr(ad x ad y^k) = 0 for all k at a generic y."""
    rng = random.Random(seed)
    d = g.dim
    eqs = []
    for _ in range(trials):
        y = [Fraction(rng.randint(-9, 9)) for _ in range(d)]
        Y = g.ad(y)
        P = identity(d)
        for _k in range(d):
            # linear functional x -> tr(ad x P)
            row = []
            for i in range(d):
                A = g.ad(g.e(i))
                row.append(sum(A[a][b] * P[b][a] for a in range(d) for b in range(d)))
            eqs.append(row)
            P = matmul(P, Y)
    return nullspace(eqs, d)


def square_form(gens):
    """Inertia (max, min, zero) of the squaring form of Nil(span gens) modulo
    its square, when that square is a line; None otherwise."""
    n = len(gens[0])
    flat = [[F(x) for r in M for x in r] for M in gens]
    # nilpotent elements of span(gens): the span is commutative, so these are
    # the radical of the trace form on the algebra generated with I
    alg = span_basis(flat + [[F(int(i == j)) for i in range(n) for j in range(n)]], n * n)
    while True:
        mats = [[v[i * n:(i + 1) * n] for i in range(n)] for v in alg]
        prods = [[x for r in matmul(a, b) for x in r] for a in mats for b in mats]
        bigger = span_basis(alg + prods, n * n)
        if len(bigger) == len(alg):
            break
        alg = bigger
    mats = [[v[i * n:(i + 1) * n] for i in range(n)] for v in alg]
    gram = [[sum(matmul(a, b)[t][t] for t in range(n)) for b in mats] for a in mats]
    rad = [[sum(c * v[k] for c, v in zip(coef, alg)) for k in range(n * n)]
           for coef in nullspace(gram, len(alg))]
    # intersect with span(gens): solve sum x_i g_i = sum y_j r_j
    cols = flat + [[-x for x in r] for r in rad]
    sols = nullspace([[c[k] for c in cols] for k in range(n * n)], len(cols))
    A = span_basis([[sum(s[i] * flat[i][k] for i in range(len(flat))) for k in range(n * n)]
                    for s in sols], n * n)
    Am = [[v[i * n:(i + 1) * n] for i in range(n)] for v in A]
    A2 = span_basis([[x for r in matmul(a, b) for x in r] for a in Am for b in Am], n * n)
    if len(A2) != 1:
        return None
    w = A2[0]
    p = next(k for k, x in enumerate(w) if x != 0)
    comp = []
    acc = list(A2)
    for v, M in zip(A, Am):
        if rank(acc + [v], n * n) > len(acc):
            acc.append(v)
            comp.append(M)

    def coeff(a, b):
        ab = [x for r in matmul(a, b) for x in r]
        ba = [x for r in matmul(b, a) for x in r]
        return (ab[p] + ba[p]) / (2 * w[p])

    G = [[coeff(a, b) for b in comp] for a in comp]
    pos, neg, zero = symmetric_inertia(G) if comp else (0, 0, 0)
    return (max(pos, neg), min(pos, neg), zero)


def fingerprint_oracle(g, gens=None):
    """The same invariant tuple as the library's Fingerprint.key()."""
    N = span_basis(nilradical_solvable(g), g.dim)
    lcs = lcs_dims(g, N)
    return (
        g.dim,
        tuple(derived_dims(g)),
        centre_dim(g, [g.e(i) for i in range(g.dim)]),
        derivation_dim(g),
        killing_inertia(g),
        len(N),
        tuple(lcs),
        len([x for x in lcs if x]) if lcs[-1] == 0 else None,
        len(bracket_span(g, N, N)),
        centre_dim(g, N),
        square_form([[list(r) for r in M.data] for M in gens]) if gens else None,
    )


def pfaffian_expand(S):
    """Pfaffian by expansion along the first row (no memoisation)."""
    n = len(S)
    if n == 0:
        return Fraction(1)
    if n % 2:
        return Fraction(0)
    total = Fraction(0)
    for j in range(1, n):
        if S[0][j] == 0:
            continue
        rest = [k for k in range(1, n) if k != j]
        sub = [[S[a][b] for b in rest] for a in rest]
        sign = -1 if (j - 1) % 2 else 1
        total += sign * S[0][j] * pfaffian_expand(sub)
    return total
