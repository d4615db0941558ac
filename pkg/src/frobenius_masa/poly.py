"""Dense univariate polynomials over Q (ascending coefficient lists)."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .scalars import as_rational


class PolyError(ArithmeticError):
    pass


class PolyQ:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # constructors
    @classmethod
    def X(cls) -> "PolyQ":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "PolyQ":
        return cls([c])

    @classmethod
    def from_roots(cls, roots) -> "PolyQ":
        p = cls([1])
        for r in roots:
            p = p * cls([-as_rational(r), 1])
        return p

    @classmethod
    def quadratic(cls, r, s2) -> "PolyQ":
        """(X - r)^2 + s2."""
        r, s2 = as_rational(r), as_rational(s2)
        return cls([r * r + s2, -2 * r, 1])

    # basic data
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self) -> "PolyQ":
        if self.is_zero():
            raise PolyError("zero polynomial has no monic form")
        c = self.lc()
        return PolyQ([x / c for x in self.coeffs])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "PolyQ":
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:])

    # arithmetic
    def _lift(self, other):
        if isinstance(other, PolyQ):
            return other
        return PolyQ([other])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return PolyQ([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return PolyQ([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = PolyQ([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc()
        if len(rem) - 1 < dq:
            return PolyQ(), PolyQ(rem)
        quo = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lc
            quo[i - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return PolyQ(quo), PolyQ(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, PolyQ):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == PolyQ([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PolyQ({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "X" if i == 1 else f"X^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self):
        from .scalars import encode_scalar
        return {"coeffs": [encode_scalar(c) for c in self.coeffs] or ["0"]}

    @classmethod
    def from_json(cls, obj):
        from .scalars import decode_scalar
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise ValueError("polynomial JSON needs a 'coeffs' list")
        return cls([decode_scalar(c) for c in obj["coeffs"]])


def poly_arith(p: PolyQ, q: PolyQ, op: str):
    if op == "+":
        return p + q
    if op in ("-", "−"):
        return p - q
    if op in ("*", "×"):
        return p * q
    if op == "divmod":
        return divmod(p, q)
    raise ValueError(f"unknown operation {op!r}")


def poly_gcd(p: PolyQ, q: PolyQ) -> PolyQ:
    if p.is_zero() and q.is_zero():
        raise PolyError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def square_free_decomposition(p: PolyQ):
    """Yun's algorithm. Returns [(f_i, i)] with f_i monic, squarefree,
    pairwise coprime and p = lc(p) * prod f_i^i. Trivial factors are dropped."""
    if p.is_zero():
        raise PolyError("square-free decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    f = p.monic()
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f // a
    c = fp // a
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d) if not d.is_zero() else b.monic()
        if g.degree > 0:
            out.append((g, i))
        b = b // g
        c = d // g
        d = c - b.derivative()
        i += 1
    return out


def is_squarefree(p: PolyQ) -> bool:
    if p.degree <= 0:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


def sturm_chain(p: PolyQ):
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_changes(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: PolyQ) -> int:
    """Number of distinct real roots of a squarefree polynomial."""
    if p.is_zero():
        raise PolyError("zero polynomial has infinitely many roots")
    if not is_squarefree(p):
        raise PolyError("count_real_roots needs a squarefree polynomial")
    if p.degree == 0:
        return 0
    chain = sturm_chain(p)

    def sgn(x):
        return (x > 0) - (x < 0)

    at_pos = [sgn(q.lc()) for q in chain]
    at_neg = [sgn(q.lc()) * (-1) ** q.degree for q in chain]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def rational_roots(p: PolyQ):
    """Distinct rational roots, by the rational root theorem."""
    if p.is_zero():
        raise PolyError("zero polynomial")
    cs = list(p.coeffs)
    roots = []
    while cs and cs[0] == 0:
        cs.pop(0)
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(cs) <= 1:
        return roots
    from math import lcm
    den = lcm(*(c.denominator for c in cs))
    ints = [int(c * den) for c in cs]
    a0, an = abs(ints[0]), abs(ints[-1])
    q = PolyQ(cs)
    for num in _divisors(a0):
        for dd in _divisors(an):
            for cand in (Fraction(num, dd), Fraction(-num, dd)):
                if cand not in roots and q(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def binomial_poly(r, n: int) -> PolyQ:
    """(X - r)^n, expanded."""
    r = as_rational(r)
    return PolyQ([comb(n, k) * (-r) ** (n - k) for k in range(n + 1)])
