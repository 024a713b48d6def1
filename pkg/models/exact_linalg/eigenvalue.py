"""
Exact Eigenvalues
Rationals and real quadratic surds (a + b*sqrt(d)) / c with integer a, b, c, d
"""

import functools
import math
from dataclasses import dataclass

import sympy
from sympy.ntheory.factor_ import core


@functools.total_ordering
@dataclass(frozen=True)
class AlgebraicEigenvalue:
    a: int
    b: int = 0
    d: int = 1
    c: int = 1

    def __post_init__(self):
        a, b, d, c = int(self.a), int(self.b), int(self.d), int(self.c)
        if c == 0:
            raise ZeroDivisionError("denominator is zero")
        if d < 0:
            raise ValueError("complex surds are not eigenvalues of symmetric matrices")
        if d == 0 or b == 0:
            b, d = 0, 1
        else:
            free = core(d)
            b *= math.isqrt(d // free)
            d = free
            if d == 1:
                a, b = a + b, 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(a, b), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "c", c)

    @classmethod
    def rational(cls, value):
        value = sympy.Rational(value)
        return cls(int(value.p), 0, 1, int(value.q))

    @classmethod
    def quadratic_roots(cls, p2, p1, p0):
        """Both real roots of p2 x^2 + p1 x + p0, larger first"""
        disc = p1 * p1 - 4 * p2 * p0
        if disc < 0:
            raise ValueError("complex roots")
        lo, hi = cls(-p1, -1, disc, 2 * p2), cls(-p1, 1, disc, 2 * p2)
        return (hi, lo) if hi >= lo else (lo, hi)

    @property
    def is_rational(self):
        return self.b == 0

    def to_sympy(self):
        return (sympy.Integer(self.a) + sympy.Integer(self.b) * sympy.sqrt(self.d)) / self.c

    def conjugate(self):
        return AlgebraicEigenvalue(self.a, -self.b, self.d, self.c)

    def scaled(self, k):
        return AlgebraicEigenvalue(k * self.a, k * self.b, self.d, self.c)

    def shifted(self, k):
        return AlgebraicEigenvalue(self.a + k * self.c, self.b, self.d, self.c)

    def minimal_polynomial(self):
        """Integer coefficients, highest first: [c] x - a, or c^2 x^2 - 2ac x + a^2 - b^2 d"""
        if self.is_rational:
            return (self.c, -self.a)
        return (self.c * self.c, -2 * self.a * self.c, self.a * self.a - self.b * self.b * self.d)

    def __float__(self):
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    def __lt__(self, other):
        if not isinstance(other, AlgebraicEigenvalue):
            return NotImplemented
        if self == other:
            return False
        gap = float(self) - float(other)
        if abs(gap) > 1e-9:
            return gap < 0
        return bool(sympy.simplify(self.to_sympy() - other.to_sympy()).is_negative)

    def __str__(self):
        if self.is_rational:
            return str(self.a) if self.c == 1 else f"{self.a}/{self.c}"
        root = "sqrt(%d)" % self.d
        mag = root if abs(self.b) == 1 else f"{abs(self.b)}*{root}"
        sign = "+" if self.b > 0 else "-"
        num = f"{self.a}{sign}{mag}" if self.a else (mag if self.b > 0 else f"-{mag}")
        if self.c == 1:
            return num
        return f"({num})/{self.c}"
