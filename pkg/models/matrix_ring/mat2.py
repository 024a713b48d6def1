"""
The Matrix Ring M2(F)
Ring arithmetic, predicates and the zero-divisor enumeration

- Matrices are row-major [[a, b], [c, d]] over integer element codes
- Predicates come from det and trace, never from annihilator search
"""

import itertools
import logging
from dataclasses import dataclass

from models.finite_field.field import add, enumerate_field, inv, mul, neg, sub
from utils.config import GAMMA_ORDER_CAP
from utils.errors import UnsupportedOrder

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def is_zero(self):
        return self.a == self.b == self.c == self.d == 0


ZERO = Mat2(0, 0, 0, 0)
IDENTITY = Mat2(1, 0, 0, 1)


def mat_mul(x, y, spec):
    return Mat2(
        add(mul(x.a, y.a, spec), mul(x.b, y.c, spec), spec),
        add(mul(x.a, y.b, spec), mul(x.b, y.d, spec), spec),
        add(mul(x.c, y.a, spec), mul(x.d, y.c, spec), spec),
        add(mul(x.c, y.b, spec), mul(x.d, y.d, spec), spec),
    )


def mat_add(x, y, spec):
    return Mat2(add(x.a, y.a, spec), add(x.b, y.b, spec), add(x.c, y.c, spec), add(x.d, y.d, spec))


def scalar_mul(s, x, spec):
    return Mat2(mul(s, x.a, spec), mul(s, x.b, spec), mul(s, x.c, spec), mul(s, x.d, spec))


def det(x, spec):
    return sub(mul(x.a, x.d, spec), mul(x.b, x.c, spec), spec)


def trace(x, spec):
    return add(x.a, x.d, spec)


# ==== Predicates ====
def is_idempotent(x, spec):
    return mat_mul(x, x, spec) == x


def is_nilpotent(x, spec):
    """Nonzero with trace 0 and det 0, i.e. x^2 = 0"""
    return not x.is_zero() and trace(x, spec) == 0 and det(x, spec) == 0


def is_unit(x, spec):
    return det(x, spec) != 0


def is_zero_divisor(x, spec):
    return not x.is_zero() and det(x, spec) == 0


def rank(x, spec):
    if x.is_zero():
        return 0
    return 1 if det(x, spec) == 0 else 2


def line_signature(x, spec):
    """
    For a rank-one matrix, return (column line, annihilated line) as points of
    the projective line over F: slopes t for (1, t) and q for the point (0, 1).
    xy = 0 exactly when x's second point equals y's first point.
    """
    q = spec.order
    if x.a != 0 or x.c != 0:
        col = (x.a, x.c)
    else:
        col = (x.b, x.d)
    row = (x.a, x.b) if (x.a != 0 or x.b != 0) else (x.c, x.d)
    # (row0, row1) annihilates the column vector (row1, -row0)
    ann = (row[1], neg(row[0], spec))

    def point(v):
        if v[0] == 0:
            return q
        return mul(v[1], inv(v[0], spec), spec)

    return point(col), point(ann)


# ==== Enumeration ====
def all_matrices(spec):
    elems = enumerate_field(spec)
    for a, b, c, d in itertools.product(elems, repeat=4):
        yield Mat2(a, b, c, d)


def zero_divisors(spec):
    """Nonzero singular matrices in lexicographic (a, b, c, d) order"""
    if spec.order > GAMMA_ORDER_CAP:
        raise UnsupportedOrder(f"GF({spec.order}) exceeds the graph order cap {GAMMA_ORDER_CAP}")
    out = tuple(x for x in all_matrices(spec) if is_zero_divisor(x, spec))
    logger.debug("GF(%d): %d zero-divisors", spec.order, len(out))
    return out


def general_linear_group(spec):
    return tuple(x for x in all_matrices(spec) if is_unit(x, spec))
