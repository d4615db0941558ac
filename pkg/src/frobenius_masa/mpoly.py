"""Sparse multivariate polynomials with rational coefficients.

Used for the Pfaffian of d(alpha) in the variables alpha_1..alpha_m and for
symbolic entries in r, s of the complex Jordan transition matrix.
"""
from __future__ import annotations

from fractions import Fraction

from .scalars import as_rational


class MPoly:
    __slots__ = ("nvars", "terms", "names")

    def __init__(self, nvars: int, terms=None, names=None):
        self.nvars = nvars
        self.names = tuple(names) if names else tuple(f"x{i + 1}" for i in range(nvars))
        clean = {}
        for mono, c in (terms or {}).items():
            c = as_rational(c)
            if c != 0:
                if len(mono) != nvars:
                    raise ValueError("exponent vector length mismatch")
                clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def const(cls, nvars, c, names=None):
        return cls(nvars, {(0,) * nvars: c}, names)

    @classmethod
    def var(cls, nvars, i, names=None):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, names)

    def _new(self, terms):
        return MPoly(self.nvars, terms, self.names)

    def _lift(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MPoly.const(self.nvars, other, self.names)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MPoly.const(self.nvars, 1, self.names)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (MPoly, int, Fraction)):
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def evaluate(self, point):
        acc = 0
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t = t * x ** e
            acc = acc + t
        return acc

    def coefficient(self, mono) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(self.names, m) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        s, b = parts[0]
        out = ("-" if s == "-" else "") + b
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out
