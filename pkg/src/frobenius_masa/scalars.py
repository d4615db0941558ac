"""Exact scalars: rationals (``fractions.Fraction``) and the quadratic
extension Q(s), s = +sqrt(d) for a fixed positive rational d.

Everything else in the package is written against the small protocol both
types share (``+ - * /``, ``== 0``), so matrices may hold either.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational as _RationalABC

Rational = Fraction


class ScalarError(ArithmeticError):
    pass


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, QuadExt) and x.b == 0:
        return x.a
    raise TypeError(f"cannot read {x!r} as a rational")


def rational_arith(x, y, op: str) -> Fraction:
    """Apply one of ``+ - * /`` to two rationals, exactly."""
    x, y = as_rational(x), as_rational(y)
    if op == "+":
        return x + y
    if op in ("-", "−"):
        return x - y
    if op in ("*", "×"):
        return x * y
    if op in ("/", "÷"):
        if y == 0:
            raise ZeroDivisionError("rational division by zero")
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def is_square_rational(d) -> Fraction | None:
    """Return sqrt(d) if d is the square of a rational, else None."""
    d = as_rational(d)
    if d < 0:
        raise ValueError("is_square_rational needs d >= 0")
    p, q = d.numerator, d.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def sqrt_rational(d):
    """sqrt(d) for rational d > 0: a Fraction when exact, otherwise
    c*sqrt(k) as a QuadExt with k a squarefree integer (trial division up
    to 10^5 for the square part)."""
    d = as_rational(d)
    if d <= 0:
        raise ValueError("sqrt_rational needs d > 0")
    exact = is_square_rational(d)
    if exact is not None:
        return exact
    k = d.numerator * d.denominator
    c = Fraction(1, d.denominator)
    p = 2
    while p * p <= k and p < 100000:
        while k % (p * p) == 0:
            k //= p * p
            c *= p
        p += 1
    return QuadExt(0, c, k)


class QuadExt:
    """Element a + b*s of Q(s) with s = +sqrt(d), d > 0 rational.

    Rationals (and ints) mix freely with QuadExt; two QuadExt values with
    different d do not, unless one of them has b == 0.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=2):
        self.a = as_rational(a)
        self.b = as_rational(b)
        self.d = as_rational(d)
        if self.d <= 0:
            raise ScalarError("QuadExt needs d > 0")

    @classmethod
    def sqrt(cls, d) -> "QuadExt":
        return cls(0, 1, d)

    # -- coercion -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                if other.b == 0:
                    return QuadExt(other.a, 0, self.d)
                if self.b == 0:
                    return None  # handled by caller swapping roles
                raise ScalarError(f"QuadExt mismatch: d={self.d} vs d={other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return NotImplemented

    def _pair(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented, NotImplemented
        if o is None:
            # self is rational-valued, other carries the extension
            return QuadExt(self.a, 0, other.d), other
        return self, o

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        x, y = self._pair(other)
        if x is NotImplemented:
            return NotImplemented
        return QuadExt(x.a + y.a, x.b + y.b, x.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        x, y = self._pair(other)
        if x is NotImplemented:
            return NotImplemented
        return QuadExt(x.a - y.a, x.b - y.b, x.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        x, y = self._pair(other)
        if x is NotImplemented:
            return NotImplemented
        return QuadExt(x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Conjugate norm a^2 - b^2 d (multiplicative)."""
        return self.a * self.a - self.b * self.b * self.d

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            # d > 0 and a + b s = 0 only for the zero element unless d is a
            # perfect square; either way there is no inverse
            raise ZeroDivisionError("QuadExt division by zero element")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        x, y = self._pair(other)
        if x is NotImplemented:
            return NotImplemented
        return x * y.inverse()

    def __rtruediv__(self, other):
        return QuadExt(as_rational(other), 0, self.d) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadExt(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                if self.b == 0 and other.b == 0:
                    return self.a == other.a
                if self.b == 0 or other.b == 0:
                    return False
                raise ScalarError(f"QuadExt mismatch: d={self.d} vs d={other.d}")
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        s = f"sqrt({self.d})"
        if self.a == 0:
            return f"{self.b}*{s}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*{s}"


def quadext_arith(x: QuadExt, y: QuadExt, op: str) -> QuadExt:
    if isinstance(x, QuadExt) and isinstance(y, QuadExt) and x.d != y.d:
        raise ScalarError(f"QuadExt mismatch: d={x.d} vs d={y.d}")
    if op == "+":
        return x + y
    if op in ("-", "−"):
        return x - y
    if op in ("*", "×"):
        return x * y
    if op in ("/", "÷"):
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def simplify(x):
    """Drop a QuadExt down to a Fraction when it is rational."""
    if isinstance(x, QuadExt) and x.b == 0:
        return x.a
    if isinstance(x, int):
        return Fraction(x)
    return x


# -- JSON encodings ------------------------------------------------------

def encode_scalar(x):
    if isinstance(x, QuadExt):
        if x.b == 0:
            return _enc_q(x.a)
        return {"a": _enc_q(x.a), "b": _enc_q(x.b), "d": _enc_q(x.d)}
    return _enc_q(as_rational(x))


def _enc_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def decode_scalar(obj):
    if isinstance(obj, dict):
        try:
            return simplify(QuadExt(obj["a"], obj.get("b", "0"), obj["d"]))
        except KeyError as exc:
            raise ValueError(f"QuadExt object missing key {exc}") from None
    if isinstance(obj, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(obj, (int, str)):
        return as_rational(obj)
    raise ValueError(f"cannot decode scalar from {obj!r}")
