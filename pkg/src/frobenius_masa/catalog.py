"""Named 2-solvable Lie algebras B ⋉ R^n, their matrix generators and
hand-written bracket tables (cross-checked against each other), explicit
isomorphisms between them, and the dimension <= 8 classification tables.

Indices in bracket tables and in ``params`` are 1-based.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .lie import (
    LieAlgebra,
    LieError,
    direct_sum,
    make_lie_algebra,
    semidirect_sum,
)
from .linalg import ONE, ZERO, Matrix, is_commuting_family
from .nonderog import (
    circular_permutation,
    complex_nilpotent_generator,
    polynomial_basis,
    rotation_block,
    shift_matrix,
)

DEFAULT_MAX_N = 10


class CatalogError(ValueError):
    pass


class CatalogMismatch(CatalogError):
    """Matrix build and bracket table disagree; both tables are attached."""

    def __init__(self, name, matrix_table, bracket_table):
        self.matrix_table = matrix_table
        self.bracket_table = bracket_table
        super().__init__(
            f"{name}: matrix build and bracket table differ\n"
            f"  from matrices: {matrix_table}\n  from table:    {bracket_table}"
        )


def max_n() -> int:
    raw = os.environ.get("FROBENIUS_MAX_N", "")
    if not raw:
        return DEFAULT_MAX_N
    try:
        v = int(raw)
    except ValueError:
        raise CatalogError(f"FROBENIUS_MAX_N must be an integer, got {raw!r}") from None
    if v < 1:
        raise CatalogError("FROBENIUS_MAX_N must be positive")
    return v


@dataclass
class CatalogEntry:
    name: str
    parameters: dict
    matrix_generators: list | None
    algebra: LieAlgebra | None
    expected: dict = field(default_factory=dict)
    associative: "AssocAlgebra | None" = None
    defect: str | None = None

    @property
    def label(self):
        return _format_name(self.name, self.parameters)

    def to_json(self):
        out = {
            "name": self.name,
            "label": self.label,
            "parameters": {k: _jsonable(v) for k, v in self.parameters.items()},
            "matrix_generators": (
                [m.to_json() for m in self.matrix_generators]
                if self.matrix_generators is not None else None
            ),
            "algebra": self.algebra.to_json() if self.algebra is not None else None,
            "expected": {k: _jsonable(v) for k, v in self.expected.items()},
        }
        if self.associative is not None:
            out["associative"] = self.associative.to_json()
        if self.defect is not None:
            out["defect"] = self.defect
        return out


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, Matrix):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _format_name(name, params):
    if name in ("aff_R", "aff_C"):
        return "aff(R)" if name == "aff_R" else "aff(C)"
    if name == "sum":
        return params["label"]
    if not params:
        return name
    inner = ",".join(f"{k}={_jsonable(v)}" for k, v in params.items())
    return f"{name}({inner})"


# ---------------------------------------------------------------------------
# small matrix helpers


def E(n, i, j):
    return Matrix.unit(n, i, j)


def lin(n, *terms):
    """sum c * E_{i,j} over (c, i, j)."""
    rows = [[ZERO] * n for _ in range(n)]
    for c, i, j in terms:
        rows[i - 1][j - 1] += Fraction(c)
    return Matrix(rows)


def _diag(*vals):
    return Matrix.diag([Fraction(v) for v in vals])


def _cross_check(name, gens, n, table_alg):
    got = semidirect_sum(gens, n)
    if not got.structure_equal(table_alg):
        raise CatalogMismatch(name, got.table(), table_alg.table())
    return got


def _require(cond, msg):
    if not cond:
        raise CatalogError(msg)


def _int_param(params, key, lo=None):
    if key not in params:
        raise CatalogError(f"missing parameter {key!r}")
    v = params[key]
    if isinstance(v, str):
        try:
            v = int(v)
        except ValueError:
            raise CatalogError(f"parameter {key!r} must be an integer") from None
    if not isinstance(v, int) or isinstance(v, bool):
        raise CatalogError(f"parameter {key!r} must be an integer")
    if lo is not None and v < lo:
        raise CatalogError(f"parameter {key}={v} must be >= {lo}")
    return v


def _size_param(params, key="n", lo=1):
    v = _int_param(params, key, lo)
    cap = max_n()
    if v > cap:
        raise CatalogError(f"{key}={v} exceeds the size ceiling {cap} (FROBENIUS_MAX_N)")
    return v


# ---------------------------------------------------------------------------
# bracket tables written directly (independent of the matrix builds)


def table_aff_R():
    return make_lie_algebra(2, {(1, 2): {2: 1}})


def table_aff_C():
    return make_lie_algebra(4, {
        (1, 3): {3: 1}, (1, 4): {4: 1},
        (2, 3): {4: 1}, (2, 4): {3: -1},
    })


def table_D0(n):
    br = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            k = n + j + i - 1
            if k <= 2 * n:
                br[(i, n + j)] = {k: 1}
    return make_lie_algebra(2 * n, br)


def table_D01_4():
    br = {(1, l): {l: 1} for l in range(5, 9)}
    br.update({
        (2, 5): {6: 1}, (2, 6): {5: -1}, (2, 7): {5: 1, 8: 1}, (2, 8): {6: 1, 7: -1},
        (3, 5): {5: -1}, (3, 6): {6: -1}, (3, 7): {6: 2, 7: -1}, (3, 8): {5: -2, 8: -1},
        (4, 5): {6: -1}, (4, 6): {5: 1}, (4, 7): {5: -3, 8: -1}, (4, 8): {6: -3, 7: 1},
    })
    return make_lie_algebra(8, br)


def table_G(n, p):
    br = {(1, n + j): {n + j: 1} for j in range(1, n + 1)}
    for k in range(2, p + 2):
        for q in range(k, p + 2):
            br[(k, n + q)] = {n + q - k + 1: 1}
    for q in range(p + 2, n + 1):
        br[(q, n + q)] = {n + 1: 1}
    return make_lie_algebra(2 * n, br)


def table_h(n, p):
    br = {(1, n + j): {n + j: 1} for j in range(1, n + 1)}
    for j in range(2, n + 1):
        br[(j, n + j)] = {n + 1: 1}
    for k in range(2, p + 1):
        # [e_k, e_{2n}] = e_{n+k}; for k = n this would collide, but p <= n-1
        br[(k, 2 * n)] = {n + k: 1}
    return make_lie_algebra(2 * n, br)


def table_Gprime(n):
    br = {(1, n + j): {n + j: 1} for j in range(1, n + 1)}
    for j in range(2, n):
        br[(j, n + j)] = {n + 1: 1}
        br[(j, 2 * n)] = {2 * n - j + 1: 1}
    br[(n, 2 * n)] = {n + 1: 2}
    return make_lie_algebra(2 * n, br)


def table_B(n):
    br = {(1, n + j): {n + j: 1} for j in range(1, n + 1)}
    for i in range(1, n):
        br[(i + 1, 2 * n)] = {n + i: 1}
    return make_lie_algebra(2 * n, br)


def table_Y4():
    br = {(1, 4 + j): {4 + j: 1} for j in range(1, 5)}
    br.update({(2, 7): {5: 1}, (2, 8): {7: 1}, (3, 8): {5: 1}, (4, 8): {6: 1}})
    return make_lie_algebra(8, br)


def table_Y6(eps):
    br = {(1, 4 + j): {4 + j: 1} for j in range(1, 5)}
    br.update({
        (2, 6): {5: 1}, (2, 8): {6: 1},
        (3, 7): {5: 1}, (3, 8): {7: eps},
        (4, 8): {5: 1},
    })
    return make_lie_algebra(8, br)


# ---------------------------------------------------------------------------
# matrix generators


def gens_G(n, p):
    M = lin(n, *[(1, l, l + 1) for l in range(1, p + 1)])
    gens = [Matrix.identity(n)]
    for _ in range(p):
        gens.append(gens[-1] * M)
    gens += [E(n, 1, j) for j in range(p + 2, n + 1)]
    return gens


def gens_h(n, p):
    return ([Matrix.identity(n)]
            + [lin(n, (1, 1, j), (1, j, n)) for j in range(2, p + 1)]
            + [E(n, 1, j) for j in range(p + 1, n + 1)])


def gens_Gprime(n):
    return [Matrix.identity(n)] + [lin(n, (1, 1, j), (1, n - j + 1, n)) for j in range(2, n + 1)]


def gens_B(n):
    return [Matrix.identity(n)] + [E(n, i, n) for i in range(1, n)]


def gens_D0(n):
    # lower shift: its powers act on the standard basis the way the upper
    # shift acts on the reversed basis, matching [e_i, e_{n+j}] = e_{n+j+i-1}
    return polynomial_basis(shift_matrix(n).transpose())


def gens_D01(n):
    return polynomial_basis(complex_nilpotent_generator(n))




def _l2_gens(i):
    n = 3
    I = Matrix.identity(3)
    table = {
        1: [_diag(1, -1, 0), _diag(1, 1, -2)],
        2: [_diag(1, 1, -2), lin(n, (1, 1, 2), (-1, 2, 1))],
        3: [_diag(1, 1, -2), E(n, 1, 2)],
        4: [E(n, 1, 3), E(n, 2, 3)],
        5: [E(n, 1, 2), E(n, 1, 3)],
        6: [lin(n, (1, 1, 2), (1, 2, 3)), E(n, 1, 3)],
    }
    return [I] + table[i]


# nonderogatory elements S with R I + L = R[S], when one exists
_L2_NONDEROG = {
    1: lambda: _diag(1, 0, -1),
    2: lambda: lin(3, (1, 1, 2), (-1, 2, 1)),
    3: lambda: lin(3, (1, 1, 2), (1, 3, 3)),
    6: lambda: lin(3, (1, 1, 2), (1, 2, 3)),
}

_L2_EXPECT = {
    1: {"frobenius": True, "isomorphic_to": "aff(R)+aff(R)+aff(R)"},
    2: {"frobenius": True, "isomorphic_to": "aff(R)+aff(C)"},
    3: {"frobenius": True, "isomorphic_to": "D0(2)+aff(R)"},
    4: {"frobenius": False},
    5: {"frobenius": True, "isomorphic_to": "G(3,1)", "identical_to": ("G", {"n": 3, "p": 1})},
    6: {"frobenius": True, "isomorphic_to": "D0(3)"},
}


def _y_gens(i, eps=1, corrected=True):
    n = 4
    I = Matrix.identity(4)
    d1111 = _diag(1, 1, 1, -3)
    d1100 = _diag(1, 1, -1, -1)
    if i == 1:
        return [I, E(n, 1, 3), E(n, 1, 4), E(n, 2, 3), E(n, 2, 4)]
    if i == 2:
        return [I, E(n, 1, 2), E(n, 1, 3), E(n, 1, 4)]
    if i == 3:
        return [I, E(n, 1, 4), E(n, 2, 4), E(n, 3, 4)]
    if i == 4:
        return [I, lin(n, (1, 1, 3), (1, 3, 4)), E(n, 1, 4), E(n, 2, 4)]
    if i == 5:
        return [I, lin(n, (1, 1, 2), (1, 2, 4)), E(n, 1, 3), E(n, 1, 4)]
    if i == 6:
        return [I, lin(n, (1, 1, 2), (1, 2, 4)), lin(n, (1, 1, 3), (eps, 3, 4)), E(n, 1, 4)]
    if i == 7:
        return [I, lin(n, (1, 1, 2), (1, 2, 3), (1, 3, 4)), lin(n, (1, 1, 3), (1, 2, 4)), E(n, 1, 4)]
    if i == 8:
        if corrected:
            return [I, lin(n, (1, 1, 2), (-1, 2, 1), (1, 3, 4), (-1, 4, 3)),
                    lin(n, (1, 1, 3), (1, 2, 4)), lin(n, (1, 1, 4), (-1, 2, 3))]
        return [I, lin(n, (1, 1, 2), (-1, 2, 1), (1, 2, 4), (-1, 4, 3)),
                lin(n, (1, 1, 3), (1, 2, 4)), E(n, 1, 4)]
    if i == 9:
        return [I, d1111, E(n, 1, 2), E(n, 1, 3)]
    if i == 10:
        return [I, d1111, E(n, 1, 3), E(n, 2, 3)]
    if i == 11:
        return [I, d1111, lin(n, (1, 1, 2), (1, 2, 3)), E(n, 1, 3)]
    if i == 12:
        return [I, d1100, lin(n, (1, 1, 2), (-1, 2, 1)), lin(n, (1, 3, 4), (-1, 4, 3))]
    if i == 13:
        return [I, d1100, lin(n, (1, 1, 2), (-1, 2, 1)), E(n, 3, 4)]
    if i == 14:
        # E33 - E44, the element the basis change below is written in
        return [I, d1100, lin(n, (1, 1, 2), (-1, 2, 1)), _diag(0, 0, 1, -1)]
    if i == 15:
        return [I, d1100, E(n, 1, 2), _diag(0, 0, 1, -1)]
    if i == 16:
        return [I, d1111, _diag(1, 1, -2, 0), _diag(1, -1, 0, 0)]
    if i == 17:
        return [I, d1100, E(n, 1, 2), E(n, 3, 4)]
    raise CatalogError(f"Y index must be 1..17, got {i}")


_Y_EXPECT = {
    1: {"relevant": False},
    2: {"frobenius": True, "isomorphic_to": "G(4,1)", "identical_to": ("G", {"n": 4, "p": 1})},
    3: {"frobenius": False},
    4: {"frobenius": False},
    5: {"frobenius": True, "isomorphic_to": "h(4,2)", "identical_to": ("h", {"n": 4, "p": 2})},
    7: {"frobenius": True, "isomorphic_to": "D0(4)"},
    8: {"frobenius": True, "isomorphic_to": "D01(4)"},
    9: {"frobenius": True, "isomorphic_to": "G(3,1)+aff(R)"},
    10: {"frobenius": False, "isomorphic_to": "B(3)+aff(R)"},
    11: {"frobenius": True, "isomorphic_to": "D0(3)+aff(R)"},
    12: {"frobenius": True, "isomorphic_to": "aff(C)+aff(C)"},
    13: {"frobenius": True, "isomorphic_to": "aff(C)+D0(2)"},
    14: {"frobenius": True, "isomorphic_to": "aff(C)+aff(R)+aff(R)"},
    15: {"frobenius": True, "isomorphic_to": "D0(2)+aff(R)+aff(R)"},
    16: {"frobenius": True, "isomorphic_to": "aff(R)+aff(R)+aff(R)+aff(R)"},
    17: {"frobenius": True, "isomorphic_to": "D0(2)+D0(2)"},
}

# nonderogatory element generating I + Y_i when the span is a polynomial algebra
_Y_NONDEROG = {
    7: lambda: lin(4, (1, 1, 2), (1, 2, 3), (1, 3, 4)),
    8: lambda: lin(4, (1, 1, 2), (-1, 2, 1), (1, 3, 4), (-1, 4, 3), (1, 1, 3), (1, 2, 4)),
}


# ---------------------------------------------------------------------------
# de Graaf's nilpotent 3-dimensional associative algebras


@dataclass
class AssocAlgebra:
    """Associative algebra on basis (a, b, c) with products {(x, y): {z: coeff}}."""

    name: str
    products: dict

    basis = ("a", "b", "c")

    def mul(self, u, v):
        out = [ZERO, ZERO, ZERO]
        for i, x in enumerate(u):
            if not x:
                continue
            for j, y in enumerate(v):
                if not y:
                    continue
                for k, c in self.products.get((self.basis[i], self.basis[j]), {}).items():
                    out[self.basis.index(k)] += x * y * Fraction(c)
        return tuple(out)

    def _units(self):
        return [tuple(ONE if k == i else ZERO for k in range(3)) for i in range(3)]

    def is_associative(self):
        U = self._units()
        return all(self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z))
                   for x in U for y in U for z in U)

    def is_commutative(self):
        U = self._units()
        return all(self.mul(x, y) == self.mul(y, x) for x in U for y in U)

    def is_nilpotent(self):
        U = self._units()
        return all(self.mul(x, self.mul(y, z)) == (ZERO,) * 3 for x in U for y in U for z in U) \
            or all(self.mul(self.mul(self.mul(w, x), y), z) == (ZERO,) * 3
                   for w in U for x in U for y in U for z in U)

    def square_form_inertia(self):
        """Inertia of (u, v) -> c-coefficient of (uv + vu)/2 on span(a, b);
        this separates A_{3,3}^s by the sign of s."""
        from .lie import inertia
        U = self._units()[:2]
        rows = [[(self.mul(x, y)[2] + self.mul(y, x)[2]) / 2 for y in U] for x in U]
        return inertia(Matrix(rows))

    def realizes(self, mats):
        """True when a, b, c -> mats is a multiplicative linear map."""
        if len(mats) != 3:
            return False
        U = self._units()
        for i, x in enumerate(U):
            for j, y in enumerate(U):
                prod = self.mul(x, y)
                want = Matrix.zeros(mats[0].rows)
                for k, c in enumerate(prod):
                    if c:
                        want = want + mats[k] * c
                if mats[i] * mats[j] != want:
                    return False
        return True

    def to_json(self):
        return {
            "name": self.name,
            "products": [{"x": x, "y": y, "value": {k: str(Fraction(c)) for k, c in t.items()}}
                         for (x, y), t in sorted(self.products.items())],
        }


def degraaf(i, s=None) -> AssocAlgebra:
    if i == 1:
        return AssocAlgebra("A3,1", {})
    if i == 2:
        return AssocAlgebra("A3,2", {("a", "a"): {"c": 1}})
    if i == 3:
        s = Fraction(s if s is not None else 1)
        _require(s != 0, "A3,3 needs s != 0")
        return AssocAlgebra(f"A3,3^{s}", {("a", "a"): {"c": s}, ("b", "b"): {"c": 1}})
    if i == 4:
        s = Fraction(s if s is not None else 0)
        return AssocAlgebra(f"A3,4^{s}", {("a", "a"): {"c": s}, ("b", "b"): {"c": 1},
                                          ("a", "b"): {"c": 1}})
    if i == 5:
        return AssocAlgebra("A3,5", {("a", "b"): {"c": 1}, ("b", "a"): {"c": -1}})
    if i == 6:
        return AssocAlgebra("A3,6", {("a", "a"): {"b": 1}, ("a", "b"): {"c": 1},
                                     ("b", "a"): {"c": 1}})
    raise CatalogError(f"de Graaf index must be 1..6, got {i}")


def degraaf_realization(i, s=None):
    """Nilpotent 4x4 matrices (a, b, c) realizing the commutative algebras
    as a 3-dimensional MASA of sl(4), with the Lie algebra name it yields."""
    n = 4
    if i == 1:
        return [E(n, 1, 2), E(n, 1, 3), E(n, 1, 4)], "G(4,1)"
    if i == 2:
        return [lin(n, (1, 1, 2), (1, 2, 4)), E(n, 1, 3), E(n, 1, 4)], "h(4,2)"
    if i == 3:
        s = Fraction(s if s is not None else 1)
        if s > 0:
            return [lin(n, (1, 1, 2), (1, 2, 4)), lin(n, (1, 1, 3), (1, 3, 4)), E(n, 1, 4)], "h(4,3)"
        return ([lin(n, (1, 1, 2), (1, 3, 4), (-1, 1, 3), (-1, 2, 4)),
                 lin(n, (1, 1, 2), (1, 3, 4), (1, 1, 3), (1, 2, 4)),
                 lin(n, (2, 1, 4))], "Gprime(4)")
    if i == 6:
        M = shift_matrix(4)
        return [M, M * M, M * M * M], "D0(4)"
    return None, None


# ---------------------------------------------------------------------------
# label parsing for direct sums


_PART_RE = re.compile(r"^(aff\(R\)|aff\(C\)|D0|D01|G|h|Gprime|B)(?:\(([\d,\s]*)\))?$")


def parse_part(text):
    text = text.strip()
    if text == "aff(R)":
        return "aff_R", {}
    if text == "aff(C)":
        return "aff_C", {}
    m = _PART_RE.match(text)
    if not m or not m.group(2):
        raise CatalogError(f"cannot parse summand {text!r}")
    kind, args = m.group(1), [int(x) for x in m.group(2).split(",") if x.strip()]
    if kind == "G":
        _require(len(args) == 2, "G needs (n,p)")
        return "G", {"n": args[0], "p": args[1]}
    if kind == "h":
        _require(len(args) == 2, "h needs (n,p)")
        return "h", {"n": args[0], "p": args[1]}
    _require(len(args) == 1, f"{kind} needs one size argument")
    return kind, {"n": args[0]}


def same_label(a, b) -> bool:
    """Equal as multisets of summands ('aff(C)+aff(R)' == 'aff(R)+aff(C)')."""
    return sorted(split_label(str(a))) == sorted(split_label(str(b)))


def split_label(label):
    parts, depth, cur = [], 0, ""
    for ch in label:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p for p in (x.strip() for x in parts) if p]


# ---------------------------------------------------------------------------
# build


NAMES = ("aff_R", "aff_C", "D0", "D01", "G", "h", "Gprime", "B",
         "L2", "Y", "A3", "circular", "sum")


def build(name: str, params: dict | None = None) -> CatalogEntry:
    params = dict(params or {})
    if name not in NAMES:
        raise CatalogError(f"unknown catalog name {name!r}; known: {', '.join(NAMES)}")
    return _BUILDERS[name](params)


def _b_aff_R(params):
    gens = [Matrix.identity(1)]
    alg = _cross_check("aff(R)", gens, 1, table_aff_R())
    return CatalogEntry("aff_R", {}, gens, alg,
                        {"frobenius": True, "functional": 2, "masa_gl": True, "label": "aff(R)"})


def _b_aff_C(params):
    psi = Matrix([[0, -1], [1, 0]]).map(Fraction)
    gens = [Matrix.identity(2), psi]
    alg = _cross_check("aff(C)", gens, 2, table_aff_C())
    return CatalogEntry("aff_C", {}, gens, alg,
                        {"frobenius": True, "functional": 3, "masa_gl": True, "label": "aff(C)"})


def _b_D0(params):
    n = _size_param(params)
    gens = gens_D0(n)
    alg = _cross_check(f"D0({n})", gens, n, table_D0(n))
    label = "aff(R)" if n == 1 else f"D0({n})"
    return CatalogEntry("D0", {"n": n}, gens, alg, {
        "frobenius": True, "functional": 2 * n, "masa_gl": True, "label": label,
        "nilradical_dim": 2 * n - 1, "nilradical_class": n,
        "nonderogatory_element": shift_matrix(n).transpose(),
    })


def _b_D01(params):
    n = _size_param(params, lo=2)
    _require(n % 2 == 0, f"D01 needs even n, got {n}")
    gens = gens_D01(n)
    if n == 4:
        alg = _cross_check("D01(4)", gens, 4, table_D01_4())
    elif n == 2:
        alg = _cross_check("D01(2)", gens, 2, table_aff_C())
    else:
        alg = semidirect_sum(gens, n)
    label = "aff(C)" if n == 2 else f"D01({n})"
    return CatalogEntry("D01", {"n": n}, gens, alg, {
        "frobenius": True, "functional": n + 1, "masa_gl": True, "label": label,
        "nonderogatory_element": complex_nilpotent_generator(n),
    })


def _b_G(params):
    n = _size_param(params, lo=2)
    p = _int_param(params, "p", 1)
    _require(p <= n - 1, f"G needs 1 <= p <= n-1, got p={p}, n={n}")
    gens = gens_G(n, p)
    alg = _cross_check(f"G({n},{p})", gens, n, table_G(n, p))
    exp = {
        "frobenius": True, "functional": n + 1, "masa_gl": True,
        "nilradical_dim": 2 * n - 1, "nilradical_derived_dim": p, "nilradical_class": p + 1,
    }
    if p == 1:
        exp["nilradical"] = f"Heisenberg({2 * n - 1})"
    if p == n - 1:
        exp["label"] = f"D0({n})" if n > 1 else "aff(R)"
    return CatalogEntry("G", {"n": n, "p": p}, gens, alg, exp)


def _b_h(params):
    n = _size_param(params, lo=3)
    p = _int_param(params, "p", 2)
    _require(p <= n - 1, f"h needs 2 <= p <= n-1, got p={p}, n={n}")
    gens = gens_h(n, p)
    alg = _cross_check(f"h({n},{p})", gens, n, table_h(n, p))
    return CatalogEntry("h", {"n": n, "p": p}, gens, alg, {
        "frobenius": True, "functional": n + 1, "masa_gl": True,
        "nilradical_dim": 2 * n - 1, "nilradical_derived_dim": p,
        "nilradical_class": 3 if n >= 4 else None,
    })


def _b_Gprime(params):
    n = _size_param(params, lo=3)
    gens = gens_Gprime(n)
    alg = _cross_check(f"Gprime({n})", gens, n, table_Gprime(n))
    return CatalogEntry("Gprime", {"n": n}, gens, alg, {
        "frobenius": True, "functional": n + 1, "masa_gl": True,
        "nilradical_dim": 2 * n - 1, "nilradical_derived_dim": n - 1,
    })


def _b_B(params):
    n = _size_param(params, lo=3)
    gens = gens_B(n)
    alg = _cross_check(f"B({n})", gens, n, table_B(n))
    return CatalogEntry("B", {"n": n}, gens, alg, {"frobenius": False, "masa_gl": True})


def _b_L2(params):
    i = _int_param(params, "i", 1)
    _require(i <= 6, f"L2 index must be 1..6, got {i}")
    gens = _l2_gens(i)
    alg = semidirect_sum(gens, 3)
    exp = dict(_L2_EXPECT[i])
    exp["masa_gl"] = True
    if i in _L2_NONDEROG:
        exp["nonderogatory_element"] = _L2_NONDEROG[i]()
    return CatalogEntry("L2", {"i": i}, gens, alg, exp)


def _b_Y(params):
    i = _int_param(params, "i", 1)
    _require(i <= 17, f"Y index must be 1..17, got {i}")
    eps = _int_param(params, "eps") if "eps" in params else 1
    corrected = params.get("corrected", True)
    if isinstance(corrected, str):
        corrected = corrected.lower() not in ("0", "false", "no")
    p = {"i": i}
    if i == 6:
        _require(eps in (1, -1), f"eps must be +1 or -1, got {eps}")
        p["eps"] = eps
    if i == 8:
        p["corrected"] = bool(corrected)
    gens = _y_gens(i, eps, corrected)
    if not is_commuting_family(gens):
        return CatalogEntry("Y", p, gens, None, {"commuting": False},
                            defect="generators do not commute")
    if i == 4:
        alg = _cross_check("Y4", gens, 4, table_Y4())
    elif i == 6:
        alg = _cross_check(f"Y6(eps={eps})", gens, 4, table_Y6(eps))
    else:
        alg = semidirect_sum(gens, 4)
    if i == 6:
        exp = {"frobenius": True, "functional": 5,
               "isomorphic_to": "h(4,3)" if eps == 1 else "Gprime(4)"}
        if eps == 1:
            exp["identical_to"] = ("h", {"n": 4, "p": 3})
    else:
        exp = dict(_Y_EXPECT[i])
    exp["commuting"] = True
    if i != 1:
        exp["masa_gl"] = True
    if i in _Y_NONDEROG:
        exp["nonderogatory_element"] = _Y_NONDEROG[i]()
    return CatalogEntry("Y", p, gens, alg, exp)


def _b_A3(params):
    i = _int_param(params, "i", 1)
    _require(i <= 6, f"de Graaf index must be 1..6, got {i}")
    s = params.get("s")
    if s is not None:
        s = Fraction(s)
    A = degraaf(i, s)
    p = {"i": i}
    if i in (3, 4):
        p["s"] = A.products[("a", "a")]["c"]
    exp = {"commutative": i not in (4, 5)}
    mats, target = degraaf_realization(i, s)
    if mats is None:
        return CatalogEntry("A3", p, None, None, exp, associative=A)
    gens = [Matrix.identity(4)] + mats
    exp.update({"realizes": True, "isomorphic_to": target, "frobenius": True, "masa_gl": True})
    return CatalogEntry("A3", p, gens, semidirect_sum(gens, 4), exp, associative=A)


def _b_circular(params):
    n = _size_param(params, lo=2)
    phi = circular_permutation(n)
    gens = polynomial_basis(phi)
    label = "+".join(["aff(R)"] * (2 if n % 2 == 0 else 1) + ["aff(C)"] * ((n - 1) // 2))
    return CatalogEntry("circular", {"n": n}, gens, semidirect_sum(gens, n), {
        "frobenius": True, "masa_gl": True, "label": label, "nonderogatory_element": phi,
    })


def _b_sum(params):
    label = params.get("label")
    _require(isinstance(label, str) and label, "sum needs a 'label' such as 'D0(2)+aff(C)'")
    parts = [build(*parse_part(t)) for t in split_label(label)]
    _require(len(parts) >= 1, "empty sum")
    alg = direct_sum([p.algebra for p in parts]) if len(parts) > 1 else parts[0].algebra
    gens = None
    if all(p.matrix_generators is not None for p in parts):
        gens = _block_generators([p.matrix_generators for p in parts])
        _check_sum_layout(label, parts, gens, alg)
    exp = {"frobenius": all(p.expected.get("frobenius") for p in parts),
           "masa_gl": True, "summands": [p.label for p in parts]}
    if all("label" in p.expected for p in parts):
        exp["label"] = "+".join(p.expected["label"] for p in parts)
    return CatalogEntry("sum", {"label": label}, gens, alg, exp)


def _block_generators(families):
    sizes = [f[0].rows for f in families]
    out = []
    for idx, fam in enumerate(families):
        for M in fam:
            blocks = [M if k == idx else Matrix.zeros(sizes[k]) for k in range(len(families))]
            out.append(Matrix.block_diag(blocks))
    return out


def sum_layout(parts):
    """Permutation matrix taking the direct-sum basis to the basis of
    semidirect_sum(block generators): columns are images of sum basis vectors."""
    m_total = sum(len(p.matrix_generators) for p in parts)
    dim = sum(p.algebra.dim for p in parts)
    cols = []
    b_off = 0
    v_off = m_total
    for p in parts:
        m = len(p.matrix_generators)
        n = p.algebra.dim - m
        for k in range(m):
            cols.append(b_off + k)
        for k in range(n):
            cols.append(v_off + k)
        b_off += m
        v_off += n
    return Matrix([[ONE if cols[j] == i else ZERO for j in range(dim)] for i in range(dim)])


def _check_sum_layout(label, parts, gens, alg):
    from .lie import verify_isomorphism
    n = gens[0].rows
    semi = semidirect_sum(gens, n)
    if not verify_isomorphism(sum_layout(parts), alg, semi):
        raise CatalogMismatch(label, semi.table(), alg.table())


_BUILDERS = {
    "aff_R": _b_aff_R, "aff_C": _b_aff_C, "D0": _b_D0, "D01": _b_D01, "G": _b_G,
    "h": _b_h, "Gprime": _b_Gprime, "B": _b_B, "L2": _b_L2, "Y": _b_Y, "A3": _b_A3,
    "circular": _b_circular, "sum": _b_sum,
}


def build_label(label: str) -> CatalogEntry:
    """Entry for a single summand ('G(3,1)') or a sum ('D0(2)+aff(C)')."""
    parts = split_label(label)
    if len(parts) == 1:
        return build(*parse_part(parts[0]))
    return build("sum", {"label": label})


# ---------------------------------------------------------------------------
# isomorphism witnesses


@dataclass
class Witness:
    name: str
    psi: Matrix
    source: LieAlgebra
    target: LieAlgebra


def _perm_matrix(images, dim):
    """Matrix whose column j is the unit vector at images[j] (0-based)."""
    return Matrix([[ONE if images[j] == i else ZERO for j in range(dim)] for i in range(dim)])


def gn2_to_hn2(n) -> Witness:
    """Swap e_3 <-> e_n and e_{n+3} <-> e_{2n}."""
    swap = {3: n, n: 3, n + 3: 2 * n, 2 * n: n + 3}
    images = [swap.get(m, m) - 1 for m in range(1, 2 * n + 1)]
    return Witness(f"G({n},2)->h({n},2)", _perm_matrix(images, 2 * n),
                   build("G", {"n": n, "p": 2}).algebra, build("h", {"n": n, "p": 2}).algebra)


def y6_to_gprime4() -> Witness:
    # images in the basis (e1', .., e4', ~e1', .., ~e4') of Gprime(4).
    # With e4 -> -2 e4' and ~e1 -> -4 ~e1' the relations [e2, ~e2] = ~e1 and
    # [e4, ~e4] = ~e1 cannot both hold; halving both images repairs it, and
    # ~e4 -> ~e4' is forced by the remaining brackets.
    cols = [
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, -1, 0, 0, 0, 0, 0],
        [0, -1, -1, 0, 0, 0, 0, 0],
        [0, 0, 0, -1, 0, 0, 0, 0],
        [0, 0, 0, 0, -2, 0, 0, 0],
        [0, 0, 0, 0, 0, -1, 1, 0],
        [0, 0, 0, 0, 0, 1, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ]
    psi = Matrix.from_columns([[Fraction(x) for x in c] for c in cols])
    return Witness("Y6(eps=-1)->Gprime(4)", psi,
                   build("Y", {"i": 6, "eps": -1}).algebra, build("Gprime", {"n": 4}).algebra)


def affc_witness(r, s, p=1, q=0) -> Witness:
    """aff(C) -> K[phi] ⋉ R^2 for phi = [[r, -s], [s, r]], s != 0, p^2 + q^2 != 0."""
    r, s, p, q = (Fraction(x) for x in (r, s, p, q))
    _require(s != 0, "need s != 0")
    _require(p * p + q * q != 0, "need p^2 + q^2 != 0")
    phi = rotation_block(r, s)
    target = semidirect_sum([Matrix.identity(2), phi], 2)
    cols = [
        [ONE, ZERO, ZERO, ZERO],
        [-r / s, 1 / s, ZERO, ZERO],
        [ZERO, ZERO, p, -q],
        [ZERO, ZERO, q, p],
    ]
    return Witness(f"aff(C)->G_phi(r={r},s={s})", Matrix.from_columns(cols),
                   build("aff_C").algebra, target)


def _vec(dim, terms):
    v = [ZERO] * dim
    for k, c in terms.items():
        v[k - 1] += Fraction(c)
    return v


def _y_witness(i, parts_label, columns, b_change):
    """Witness Y_i -> sum model.  ``b_change[k]`` gives the new B-basis
    element e'_k as {old index: coeff}; ``columns`` lists, for each basis
    vector of the model sum, its image as ('e', k) (the k-th new B element)
    or ('v', j) (the j-th standard vector, 1-based)."""
    src = build("Y", {"i": i}).algebra
    model = build_label(parts_label).algebra
    cols = []
    for kind, idx in columns:
        if kind == "e":
            cols.append(_vec(8, b_change[idx]))
        else:
            sign = -1 if idx < 0 else 1
            cols.append(_vec(8, {4 + abs(idx): sign}))
    fwd = Matrix.from_columns(cols)  # model -> Y
    return Witness(f"Y{i}->{parts_label}", fwd.inverse(), src, model)


_Q = Fraction


def y_witnesses():
    w = []
    quarter_sum = {1: {1: _Q(3, 4), 2: _Q(1, 4)}, 2: {3: 1}, 3: {4: 1}, 4: {1: _Q(1, 4), 2: _Q(-1, 4)}}
    w.append(_y_witness(9, "G(3,1)+aff(R)", [
        ("e", 1), ("e", 2), ("e", 3), ("v", 1), ("v", 2), ("v", 3), ("e", 4), ("v", 4)],
        quarter_sum))
    w.append(_y_witness(10, "B(3)+aff(R)", [
        ("e", 1), ("e", 2), ("e", 3), ("v", 1), ("v", 2), ("v", 3), ("e", 4), ("v", 4)],
        quarter_sum))
    # D0 blocks use the lower shift, so the Y-side vectors appear reversed
    w.append(_y_witness(11, "D0(3)+aff(R)", [
        ("e", 1), ("e", 2), ("e", 3), ("v", 3), ("v", 2), ("v", 1), ("e", 4), ("v", 4)],
        quarter_sum))
    half = {1: {1: _Q(1, 2), 2: _Q(1, 2)}, 2: {3: 1}, 3: {1: _Q(1, 2), 2: _Q(-1, 2)}, 4: {4: 1}}
    w.append(_y_witness(12, "aff(C)+aff(C)", [
        ("e", 1), ("e", 2), ("v", 2), ("v", 1), ("e", 3), ("e", 4), ("v", 4), ("v", 3)], half))
    w.append(_y_witness(13, "aff(C)+D0(2)", [
        ("e", 1), ("e", 2), ("v", 2), ("v", 1), ("e", 3), ("e", 4), ("v", 4), ("v", 3)], half))
    split = {1: {1: _Q(1, 2), 2: _Q(1, 2)}, 2: {3: 1},
             3: {1: _Q(1, 4), 2: _Q(-1, 4), 4: _Q(1, 2)},
             4: {1: _Q(1, 4), 2: _Q(-1, 4), 4: _Q(-1, 2)}}
    w.append(_y_witness(14, "aff(C)+aff(R)+aff(R)", [
        ("e", 1), ("e", 2), ("v", 2), ("v", 1), ("e", 3), ("v", 3), ("e", 4), ("v", 4)], split))
    w.append(_y_witness(15, "D0(2)+aff(R)+aff(R)", [
        ("e", 1), ("e", 2), ("v", 2), ("v", 1), ("e", 3), ("v", 3), ("e", 4), ("v", 4)], split))
    twelfth = {
        1: {1: _Q(3, 12), 2: _Q(1, 12), 3: _Q(2, 12), 4: _Q(6, 12)},
        2: {1: _Q(3, 12), 2: _Q(1, 12), 3: _Q(2, 12), 4: _Q(-6, 12)},
        # (3 e1 + e2 - 4 e3)/4 would be 3 E33; the idempotent needs /12
        3: {1: _Q(3, 12), 2: _Q(1, 12), 3: _Q(-4, 12)},
        4: {1: _Q(1, 4), 2: _Q(-1, 4)},
    }
    w.append(_y_witness(16, "aff(R)+aff(R)+aff(R)+aff(R)", [
        ("e", 1), ("v", 1), ("e", 2), ("v", 2), ("e", 3), ("v", 3), ("e", 4), ("v", 4)], twelfth))
    w.append(_y_witness(17, "D0(2)+D0(2)", [
        ("e", 1), ("e", 2), ("v", 2), ("v", 1), ("e", 3), ("e", 4), ("v", 4), ("v", 3)], half))
    return w


def witnesses(max_gn2=6):
    out = [gn2_to_hn2(n) for n in range(3, min(max_gn2, max_n()) + 1)]
    out.append(y6_to_gprime4())
    out.append(affc_witness(2, 3, 1, 2))
    out.append(affc_witness(-1, Fraction(1, 2), 0, 1))
    out.extend(y_witnesses())
    return out


# ---------------------------------------------------------------------------
# classification tables


LOWDIM_LABELS = (
    "aff(R)", "D0(2)", "aff(C)", "D0(3)", "G(3,1)",
    "aff(R)+aff(R)", "D0(2)+aff(R)", "aff(C)+aff(R)", "aff(R)+aff(R)+aff(R)",
)

DIM8_NONDEROG_LABELS = (
    "D01(4)", "D0(4)", "D0(3)+aff(R)", "D0(2)+D0(2)", "D0(2)+aff(C)",
    "D0(2)+aff(R)+aff(R)", "aff(C)+aff(C)", "aff(C)+aff(R)+aff(R)",
    "aff(R)+aff(R)+aff(R)+aff(R)",
)

DIM8_OTHER_LABELS = ("G(4,1)", "h(4,2)", "h(4,3)", "Gprime(4)", "G(3,1)+aff(R)")


def lowdim_table():
    return [build_label(x) for x in LOWDIM_LABELS]


def dim8_table():
    out = []
    for x in DIM8_NONDEROG_LABELS + DIM8_OTHER_LABELS:
        e = build_label(x)
        e.expected["nonderogatory_form"] = x in DIM8_NONDEROG_LABELS
        out.append(e)
    return out


def list_entries():
    """Names with a short parameter hint, for browsing."""
    return [
        ("aff_R", "", "affine algebra of the real line"),
        ("aff_C", "", "affine algebra of the complex line, as a real algebra"),
        ("D0", "n", "K[M0] ⋉ R^n, M0 principal nilpotent"),
        ("D01", "n (even)", "K[M01] ⋉ R^n, M01 = Ms + Mn"),
        ("G", "n, p (1 <= p <= n-1)", "B_{n,p} ⋉ R^n, functional e_{n+1}^*"),
        ("h", "n, p (2 <= p <= n-1)", "C_{n,p} ⋉ R^n"),
        ("Gprime", "n", "B'_{n,n} ⋉ R^n"),
        ("B", "n", "(R I + span E_{i,n}) ⋉ R^n, not Frobenius"),
        ("L2", "i (1..6)", "MASAs of sl(3), extended by R I"),
        ("Y", "i (1..17), eps for i=6, corrected for i=8", "MASAs of sl(4), extended by R I"),
        ("A3", "i (1..6), s for i=3,4", "nilpotent 3-dim associative algebras"),
        ("circular", "n", "K[phi] ⋉ R^n for the circular permutation"),
        ("sum", "label", "direct sum, e.g. label=D0(2)+aff(C)"),
    ]


__all__ = [
    "CatalogEntry", "CatalogError", "CatalogMismatch", "AssocAlgebra", "Witness",
    "build", "build_label", "witnesses", "lowdim_table", "dim8_table", "degraaf",
    "degraaf_realization", "list_entries", "max_n", "NAMES", "same_label", "split_label",
]
