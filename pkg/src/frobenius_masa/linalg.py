"""Exact dense matrices and subspaces over Q or Q(s).

Entries are ``Fraction`` or ``QuadExt``; nothing here assumes more than the
field operations.  Row reduction is done on sparse dict rows, which keeps
the derivation systems (dim^2 unknowns, dim^3 equations) cheap.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .poly import PolyQ
from .scalars import QuadExt, as_rational, decode_scalar, encode_scalar, simplify

ZERO = Fraction(0)
ONE = Fraction(1)


class LinAlgError(ArithmeticError):
    pass


def _scalar(x):
    if isinstance(x, (Fraction, QuadExt)):
        return x
    return as_rational(x)


# ---------------------------------------------------------------------------
# sparse row reduction


class RowReducer:
    """Incremental reduced row echelon form over sparse dict rows.

    Invariant: no pivot row contains another row's pivot column.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict[int, object]] = {}

    def reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v != 0}
        for col in [c for c in row if c in self.rows]:
            f = row.get(col)
            if not f:
                continue
            for c, v in self.rows[col].items():
                nv = row.get(c, ZERO) - f * v
                if nv == 0:
                    row.pop(c, None)
                else:
                    row[c] = nv
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; return True when it raised the rank."""
        row = self.reduce(row)
        if not row:
            return False
        piv = min(row)
        inv = ONE / row[piv]
        row = {c: simplify(v * inv) for c, v in row.items()}
        for other in self.rows.values():
            f = other.get(piv)
            if f:
                for c, v in row.items():
                    nv = other.get(c, ZERO) - f * v
                    if nv == 0:
                        other.pop(c, None)
                    else:
                        other[c] = simplify(nv)
        self.rows[piv] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def echelon_rows(self):
        out = []
        for p in sorted(self.rows):
            v = [ZERO] * self.ncols
            for c, x in self.rows[p].items():
                v[c] = x
            out.append(tuple(v))
        return out

    def kernel(self, nvars: int | None = None):
        """Basis of the solution space of the homogeneous system."""
        n = self.ncols if nvars is None else nvars
        free = [c for c in range(n) if c not in self.rows]
        basis = []
        for f in free:
            v = [ZERO] * n
            v[f] = ONE
            for p, row in self.rows.items():
                x = row.get(f)
                if x:
                    v[p] = -x
            basis.append(tuple(v))
        return basis


def sparse_kernel(equations, nvars: int):
    rr = RowReducer(nvars)
    for eq in equations:
        rr.add(eq)
    return rr.kernel()


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        rows = [tuple(_scalar(x) for x in r) for r in data]
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise LinAlgError("ragged matrix data")
        self.data = tuple(rows)

    # constructors
    @classmethod
    def zeros(cls, m, n=None):
        n = m if n is None else n
        return cls([[ZERO] * n for _ in range(m)])

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n, i, j):
        """The matrix E_{i,j} (1-based indices)."""
        return cls([[ONE if (a, b) == (i - 1, j - 1) else ZERO for b in range(n)]
                    for a in range(n)])

    @classmethod
    def diag(cls, values):
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_flat(cls, vec, m, n=None):
        n = m if n is None else n
        vec = list(vec)
        return cls([vec[i * n:(i + 1) * n] for i in range(m)])

    @classmethod
    def from_columns(cls, columns):
        columns = [list(c) for c in columns]
        return cls([list(r) for r in zip(*columns)])

    @classmethod
    def block_diag(cls, blocks):
        n = sum(b.rows for b in blocks)
        out = [[ZERO] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[off + i][off + j] = b.data[i][j]
            off += b.rows
        return cls(out)

    # access
    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def flat(self):
        return tuple(x for r in self.data for x in r)

    def column(self, j):
        return tuple(r[j] for r in self.data)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    # arithmetic
    def __add__(self, other):
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.data])

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise LinAlgError(f"shape mismatch {self.shape} vs {other.shape}")

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise LinAlgError(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other.data))
            out = []
            for r in self.data:
                nz = [(k, a) for k, a in enumerate(r) if a != 0]
                row = []
                for c in cols:
                    acc = ZERO
                    for k, a in nz:
                        b = c[k]
                        if b != 0:
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return Matrix(out)
        c = _scalar(other)
        return Matrix([[c * a for a in r] for r in self.data])

    def __rmul__(self, other):
        c = _scalar(other)
        return Matrix([[c * a for a in r] for r in self.data])

    def apply(self, vec):
        return tuple(sum((a * b for a, b in zip(r, vec)), ZERO) for r in self.data)

    def __pow__(self, k: int):
        if not self.is_square():
            raise LinAlgError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        out = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def commutator(self, other):
        return self * other - other * self

    def transpose(self):
        return Matrix([list(c) for c in zip(*self.data)]) if self.rows else Matrix([])

    T = property(transpose)

    def trace(self):
        return sum((self.data[i][i] for i in range(min(self.rows, self.cols))), ZERO)

    def is_zero(self):
        return all(x == 0 for r in self.data for x in r)

    def map(self, f):
        return Matrix([[f(x) for x in r] for r in self.data])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.data, other.data) for a, b in zip(r, s)
        )

    def __hash__(self):
        return hash(tuple(hash(x) for x in self.flat()))

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.data) + "])"

    __str__ = __repr__

    def pretty(self):
        cells = [[str(x) for x in r] for r in self.data]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)

    # elimination based
    def _reducer(self):
        rr = RowReducer(self.cols)
        for r in self.data:
            rr.add({j: x for j, x in enumerate(r) if x != 0})
        return rr

    def rank(self):
        return self._reducer().rank

    def kernel(self):
        return self._reducer().kernel()

    def rref(self):
        return self._reducer().echelon_rows()

    def det(self):
        if not self.is_square():
            raise LinAlgError("determinant of a non-square matrix")
        a = [list(r) for r in self.data]
        n = self.rows
        sign = 1
        acc = ONE
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] != 0), None)
            if piv is None:
                return ZERO
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                sign = -sign
            p = a[c][c]
            acc = acc * p
            inv = 1 / p
            for r in range(c + 1, n):
                f = a[r][c]
                if f != 0:
                    f = f * inv
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return simplify(acc * sign)

    def inverse(self):
        if not self.is_square():
            raise LinAlgError("inverse of a non-square matrix")
        n = self.rows
        a = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.data)]
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] != 0), None)
            if piv is None:
                raise LinAlgError("matrix is singular")
            a[c], a[piv] = a[piv], a[c]
            inv = 1 / a[c][c]
            a[c] = [simplify(x * inv) for x in a[c]]
            for r in range(n):
                if r != c and a[r][c] != 0:
                    f = a[r][c]
                    a[r] = [simplify(x - f * y) for x, y in zip(a[r], a[c])]
        return Matrix([r[n:] for r in a])

    def is_invertible(self):
        return self.is_square() and self.rank() == self.rows

    # JSON
    def to_json(self):
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[encode_scalar(x) for x in r] for r in self.data]}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "entries" not in obj:
            raise ValueError("matrix JSON needs 'entries'")
        entries = obj["entries"]
        if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
            raise ValueError("'entries' must be a list of rows")
        m = cls([[decode_scalar(x) for x in r] for r in entries])
        if "rows" in obj and obj["rows"] != m.rows:
            raise ValueError(f"'rows' says {obj['rows']} but entries has {m.rows}")
        if "cols" in obj and obj["cols"] != m.cols:
            raise ValueError(f"'cols' says {obj['cols']} but entries has {m.cols}")
        return m


def rank_kernel_solve(M: Matrix, b=None):
    """(rank, kernel basis, particular solution or None).

    With ``b`` given, an inconsistent system yields ``None`` as the third
    component; without ``b`` the third component is always None.
    """
    rr = M._reducer()
    rank = rr.rank
    kernel = rr.kernel()
    if b is None:
        return rank, kernel, None
    b = [_scalar(x) for x in b]
    if len(b) != M.rows:
        raise LinAlgError("right-hand side has the wrong length")
    aug = RowReducer(M.cols + 1)
    for r, bi in zip(M.data, b):
        row = {j: x for j, x in enumerate(r) if x != 0}
        if bi != 0:
            row[M.cols] = bi
        aug.add(row)
    if M.cols in aug.rows:
        return rank, kernel, None
    x = [ZERO] * M.cols
    for p, row in aug.rows.items():
        x[p] = row.get(M.cols, ZERO)
    return rank, kernel, tuple(x)


def solve(M: Matrix, b):
    return rank_kernel_solve(M, b)[2]


# ---------------------------------------------------------------------------
# polynomials of matrices


def char_poly(M: Matrix) -> PolyQ:
    """det(X I - M) by Faddeev-LeVerrier."""
    if not M.is_square():
        raise LinAlgError("characteristic polynomial of a non-square matrix")
    n = M.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    Mk = Matrix.zeros(n)
    I = Matrix.identity(n)
    for k in range(1, n + 1):
        Mk = M * Mk + I * coeffs[n - k + 1]
        coeffs[n - k] = simplify(-(M * Mk).trace() / k)
    return PolyQ([as_rational(c) for c in coeffs])


def poly_eval_matrix(p: PolyQ, M: Matrix) -> Matrix:
    n = M.rows
    acc = Matrix.zeros(n)
    I = Matrix.identity(n)
    for c in reversed(p.coeffs):
        acc = acc * M + I * c
    return acc


def min_poly(M: Matrix) -> PolyQ:
    """Least monic p with p(M) = 0: first dependence among I, M, M^2, ..."""
    if not M.is_square():
        raise LinAlgError("minimal polynomial of a non-square matrix")
    n = M.rows
    powers = [Matrix.identity(n)]
    while True:
        k = len(powers) - 1
        # is M^k in span of lower powers?
        cols = [P.flat() for P in powers[:-1]]
        target = powers[-1].flat()
        if cols:
            A = Matrix.from_columns(cols)
            x = solve(A, target)
        else:
            x = None if any(t != 0 for t in target) else ()
        if x is not None:
            return PolyQ([-as_rational(c) for c in x] + [1])
        if k > n:
            raise LinAlgError("minimal polynomial search exceeded n")
        powers.append(powers[-1] * M)


def conjugate(M: Matrix, P: Matrix) -> Matrix:
    """P M P^{-1}."""
    return P * M * P.inverse()


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """Subspace of K^N kept in reduced echelon form (syntactic equality)."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, vectors=()):
        self.ambient_dim = ambient_dim
        rr = RowReducer(ambient_dim)
        for v in vectors:
            v = tuple(v)
            if len(v) != ambient_dim:
                raise LinAlgError("vector length does not match ambient dimension")
            rr.add({j: _scalar(x) for j, x in enumerate(v) if x != 0})
        self.basis = tuple(rr.echelon_rows())

    @classmethod
    def of_matrices(cls, mats):
        mats = list(mats)
        if not mats:
            raise LinAlgError("need at least one matrix to fix the ambient size")
        return cls(mats[0].rows * mats[0].cols, [m.flat() for m in mats])

    @classmethod
    def zero(cls, n):
        return cls(n, [])

    @classmethod
    def full(cls, n):
        return cls(n, [tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)])

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v) -> bool:
        rr = RowReducer(self.ambient_dim)
        for b in self.basis:
            rr.add({j: x for j, x in enumerate(b) if x != 0})
        return not rr.reduce({j: _scalar(x) for j, x in enumerate(v) if x != 0})

    def __contains__(self, v):
        if isinstance(v, Matrix):
            v = v.flat()
        return self.contains(v)

    def coordinates(self, v):
        """Coefficients of v in this echelon basis, or None if v is outside."""
        if not self.contains(v):
            return None
        pivots = [next(j for j, x in enumerate(b) if x != 0) for b in self.basis]
        return tuple(_scalar(v[p]) for p in pivots)

    def __add__(self, other):
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def intersect(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise LinAlgError("ambient dimension mismatch")
        # solve sum a_i u_i = sum b_j w_j
        a, b = self.basis, other.basis
        if not a or not b:
            return Subspace.zero(self.ambient_dim)
        cols = list(a) + [tuple(-x for x in w) for w in b]
        ker = Matrix.from_columns(cols).kernel()
        vecs = []
        for k in ker:
            v = [ZERO] * self.ambient_dim
            for coef, u in zip(k[:len(a)], a):
                if coef != 0:
                    v = [x + coef * y for x, y in zip(v, u)]
            vecs.append(v)
        return Subspace(self.ambient_dim, vecs)

    def is_subspace_of(self, other) -> bool:
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def matrices(self, n=None):
        n = n or _isqrt_exact(self.ambient_dim)
        return [Matrix.from_flat(v, n) for v in self.basis]

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def _isqrt_exact(N):
    from math import isqrt
    n = isqrt(N)
    if n * n != N:
        raise LinAlgError("ambient dimension is not a perfect square")
    return n


def span_matrices(mats) -> Subspace:
    return Subspace.of_matrices(mats)


def _check_square_family(S):
    S = list(S)
    if not S:
        raise LinAlgError("empty matrix family")
    n = S[0].rows
    for A in S:
        if A.shape != (n, n):
            raise LinAlgError(f"size mismatch: expected {n}x{n}, got {A.rows}x{A.cols}")
    return S, n


def centralizer(S) -> Subspace:
    """{X in gl(n) : X A = A X for all A in S}."""
    S, n = _check_square_family(S)
    rr = RowReducer(n * n)
    for A in S:
        # (XA - AX)_{ij} = sum_k X_{ik}A_{kj} - A_{ik}X_{kj}
        for i, j in product(range(n), repeat=2):
            eq = {}
            for k in range(n):
                a = A.data[k][j]
                if a != 0:
                    eq[i * n + k] = eq.get(i * n + k, ZERO) + a
                a = A.data[i][k]
                if a != 0:
                    eq[k * n + j] = eq.get(k * n + j, ZERO) - a
            rr.add(eq)
    return Subspace(n * n, rr.kernel())


def is_commuting_family(S) -> bool:
    S = list(S)
    return all((A * B - B * A).is_zero() for i, A in enumerate(S) for B in S[i + 1:])


def normalizer_of_span(S) -> Subspace:
    """{X : [X, A] in span(S) for all A in S}."""
    S, n = _check_square_family(S)
    W = span_matrices(S)
    for i, A in enumerate(S):
        for B in S[i + 1:]:
            if not W.contains((A * B - B * A).flat()):
                raise LinAlgError("span is not closed under the commutator")
    N = n * n
    m = W.dim
    # unknowns: X (N entries) then coefficients c_{A,t} (m per generator)
    nvars = N + m * len(S)
    rr = RowReducer(nvars)
    for g, A in enumerate(S):
        for i, j in product(range(n), repeat=2):
            eq = {}
            for k in range(n):
                a = A.data[k][j]
                if a != 0:
                    eq[i * n + k] = eq.get(i * n + k, ZERO) + a
                a = A.data[i][k]
                if a != 0:
                    eq[k * n + j] = eq.get(k * n + j, ZERO) - a
            for t, w in enumerate(W.basis):
                x = w[i * n + j]
                if x != 0:
                    eq[N + g * m + t] = -x
            rr.add(eq)
    vecs = [v[:N] for v in rr.kernel()]
    return Subspace(N, vecs)


def subalgebra_powers(S, k: int) -> Subspace:
    """Span of all k-fold products of elements of span(S)."""
    if k < 1:
        raise LinAlgError("k must be at least 1")
    S, n = _check_square_family(S)
    base = span_matrices(S)
    gens = base.matrices(n)
    cur = base
    for _ in range(k - 1):
        prods = [A * B for A in gens for B in cur.matrices(n)]
        cur = Subspace(n * n, [P.flat() for P in prods])
        if cur.dim == 0:
            break
    return cur


def image_of_family(S) -> Subspace:
    """span{A x : A in S, x in K^n}."""
    S, n = _check_square_family(S)
    return Subspace(n, [A.column(j) for A in S for j in range(n)])


def common_kernel(S) -> Subspace:
    S, n = _check_square_family(S)
    rows = [r for A in S for r in A.data]
    return Subspace(n, Matrix(rows).kernel())


def traceless_subspace(n) -> Subspace:
    """sl(n) inside gl(n), as a flattened subspace."""
    trace_row = [ONE if i % (n + 1) == 0 else ZERO for i in range(n * n)]
    return Subspace(n * n, Matrix([trace_row]).kernel())


def matrix_algebra_closure(S, include_identity=True):
    """Associative algebra generated by S (and I)."""
    S, n = _check_square_family(S)
    gens = list(S) + ([Matrix.identity(n)] if include_identity else [])
    cur = Subspace(n * n, [g.flat() for g in gens])
    while True:
        mats = cur.matrices(n)
        nxt = Subspace(n * n, [m.flat() for m in mats] + [(a * b).flat() for a in mats for b in gens])
        if nxt.dim == cur.dim:
            return cur
        cur = nxt
