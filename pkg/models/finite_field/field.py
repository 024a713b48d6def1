"""
Finite Field Arithmetic
GF(p^k) for small orders, backed by precomputed tables

- Elements are integer codes: the coefficient vector (c0, ..., c_{k-1}) read
  as the base-p number c0 + c1*p + ... ; 0 and 1 are the codes 0 and 1
- Extension arithmetic reduces modulo a monic irreducible polynomial
"""

import logging
import re
from dataclasses import dataclass, field

from sympy import ZZ, factorint, isprime
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_mul, gf_neg, gf_rem, gf_strip

from utils.config import FIELD_TABLE_CAP
from utils.errors import (
    DivisionByZero,
    InvalidFieldString,
    NonPrimeCharacteristic,
    ReducibleModulus,
    UnsupportedOrder,
)

logger = logging.getLogger(__name__)

FieldElement = int

# Minimal-weight irreducible moduli, little-endian coefficients
BUILTIN_MODULI = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 0, 1),
    27: (1, 2, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    49: (1, 0, 1),
    64: (1, 1, 0, 0, 0, 0, 1),
}


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    modulus: tuple = None
    add_table: tuple = field(default=(), repr=False, compare=False)
    mul_table: tuple = field(default=(), repr=False, compare=False)
    neg_table: tuple = field(default=(), repr=False, compare=False)
    inv_table: tuple = field(default=(), repr=False, compare=False)

    @property
    def order(self):
        return self.p ** self.k

    @property
    def n(self):
        return self.order - 1

    @property
    def label(self):
        return f"GF({self.order})"

    def canonical(self):
        """Canonical flag string; parse_field(spec.canonical()) == spec"""
        if self.k == 1:
            return str(self.p)
        code = sum(c * self.p ** i for i, c in enumerate(self.modulus))
        return f"{self.p}^{self.k}:{code:x}"


def _poly(code, p):
    """Element code -> galoistools polynomial (highest degree first)"""
    coeffs = []
    while code:
        coeffs.append(code % p)
        code //= p
    return gf_strip(list(reversed(coeffs)))


def _code(poly, p):
    code = 0
    for c in poly:
        code = code * p + int(c) % p
    return code


def _build_tables(p, k, modulus):
    q = p ** k
    if k == 1:
        add_t = tuple((a + b) % p for a in range(q) for b in range(q))
        mul_t = tuple((a * b) % p for a in range(q) for b in range(q))
        neg_t = tuple((-a) % p for a in range(q))
    else:
        m = list(reversed(modulus))
        polys = [_poly(a, p) for a in range(q)]
        add_t = tuple(_code(gf_add(polys[a], polys[b], p, ZZ), p) for a in range(q) for b in range(q))
        mul_t = tuple(
            _code(gf_rem(gf_mul(polys[a], polys[b], p, ZZ), m, p, ZZ), p)
            for a in range(q) for b in range(q)
        )
        neg_t = tuple(_code(gf_neg(polys[a], p, ZZ), p) for a in range(q))

    inv_t = [-1] * q
    for a in range(1, q):
        for b in range(1, q):
            if mul_t[a * q + b] == 1:
                inv_t[a] = b
                break
    return add_t, mul_t, neg_t, tuple(inv_t)


def make_field(p, k=1, modulus=None):
    """Build GF(p^k) with a verified-irreducible modulus"""
    if not isprime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if k < 1:
        raise UnsupportedOrder(f"degree must be at least 1, got {k}")
    q = p ** k
    if q > FIELD_TABLE_CAP:
        raise UnsupportedOrder(f"GF({q}) exceeds the table cap {FIELD_TABLE_CAP}")

    if k == 1:
        modulus = None
    else:
        if modulus is None:
            modulus = BUILTIN_MODULI.get(q)
            if modulus is None:
                raise UnsupportedOrder(f"no built-in modulus for GF({q})")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ReducibleModulus(f"modulus {modulus} is not monic of degree {k}")
        if not gf_irreducible_p(list(reversed(modulus)), p, ZZ):
            raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")

    add_t, mul_t, neg_t, inv_t = _build_tables(p, k, modulus)
    logger.debug("built tables for GF(%d)", q)
    return FieldSpec(p, k, modulus, add_t, mul_t, neg_t, inv_t)


def parse_field(text):
    """Parse the --field flag: 'q', 'p^k' or 'p^k:modulus-hex'"""
    match = re.fullmatch(r"\s*(\d+)(?:\^(\d+))?(?::([0-9a-fA-F]+))?\s*", text or "")
    if not match:
        raise InvalidFieldString(f"cannot parse field {text!r}")
    base, exp, hex_modulus = match.groups()
    base = int(base)

    if exp is None:
        if base < 2:
            raise InvalidFieldString(f"{base} is not a prime power")
        factors = factorint(base)
        if len(factors) != 1:
            raise NonPrimeCharacteristic(f"{base} is not a prime power")
        (p, k), = factors.items()
    else:
        p, k = base, int(exp)

    modulus = None
    if hex_modulus is not None:
        code = int(hex_modulus, 16)
        modulus = []
        while code:
            modulus.append(code % p)
            code //= p
    return make_field(p, k, modulus)


# ==== Arithmetic ====
def add(a, b, spec):
    return spec.add_table[a * spec.order + b]


def neg(a, spec):
    return spec.neg_table[a]


def sub(a, b, spec):
    return spec.add_table[a * spec.order + spec.neg_table[b]]


def mul(a, b, spec):
    return spec.mul_table[a * spec.order + b]


def inv(a, spec):
    if a == 0:
        raise DivisionByZero("zero has no inverse")
    return spec.inv_table[a]


def div(a, b, spec):
    return mul(a, inv(b, spec), spec)


def enumerate_field(spec):
    """Elements in canonical order: 0, 1, then lexicographic coefficient order"""
    return tuple(range(spec.order))


def nonzero_elements(spec):
    return tuple(range(1, spec.order))


def coefficients(a, spec):
    """Little-endian coefficient vector of length k"""
    out = []
    for _ in range(spec.k):
        out.append(a % spec.p)
        a //= spec.p
    return tuple(out)


def element_str(a, spec):
    if spec.k == 1:
        return str(a)
    terms = []
    for power, c in reversed(list(enumerate(coefficients(a, spec)))):
        if c == 0:
            continue
        if power == 0:
            terms.append(str(c))
        else:
            mono = "x" if power == 1 else f"x^{power}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) or "0"
