"""
Canonical Forms
Idempotent and nilpotent normal forms of rank-one matrices in M2(F)

- Idempotents: E0, Etop0, E_sub(a), E_sup(a), F_sub(a), F_sup(a), E_pair(i, j)
- Nilpotents: N, M, N_k(k), each up to a nonzero scalar
"""

from dataclasses import dataclass

from models.finite_field.field import div, element_str, inv, mul, neg, sub
from models.matrix_ring.mat2 import (
    Mat2,
    is_idempotent,
    is_nilpotent,
    is_zero_divisor,
    scalar_mul,
    trace,
)
from utils.errors import NotIdempotent, NotNilpotent, NotZeroDivisor

IDEMPOTENT_TAGS = ("E0", "Etop0", "E_sub", "E_sup", "F_sub", "F_sup", "E_pair")
NILPOTENT_TAGS = ("N", "M", "N_k")


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    tag: str
    params: tuple = ()

    @property
    def nilpotent(self):
        return self.tag in NILPOTENT_TAGS

    def materialize(self, spec):
        one = 1
        if self.tag == "E0":
            return Mat2(0, 0, 0, one)
        if self.tag == "Etop0":
            return Mat2(one, 0, 0, 0)
        if self.tag == "E_sub":
            (a,) = self.params
            return Mat2(0, 0, a, one)
        if self.tag == "E_sup":
            (a,) = self.params
            return Mat2(one, a, 0, 0)
        if self.tag == "F_sub":
            (a,) = self.params
            return Mat2(one, 0, a, 0)
        if self.tag == "F_sup":
            (a,) = self.params
            return Mat2(0, a, 0, one)
        if self.tag == "E_pair":
            i, j = self.params
            one_minus_i = sub(one, i, spec)
            return Mat2(i, mul(j, one_minus_i, spec), div(i, j, spec), one_minus_i)
        if self.tag == "N":
            return Mat2(0, one, 0, 0)
        if self.tag == "M":
            return Mat2(0, 0, one, 0)
        if self.tag == "N_k":
            (k,) = self.params
            return Mat2(one, k, neg(inv(k, spec), spec), neg(one, spec))
        raise ValueError(f"unknown tag {self.tag}")

    def label(self, spec):
        if not self.params:
            return self.tag
        return f"{self.tag}({','.join(element_str(p, spec) for p in self.params)})"


def idempotent_form(x, spec):
    """Match a nonzero singular idempotent against the seven templates"""
    if x.is_zero() or not is_zero_divisor(x, spec) or not is_idempotent(x, spec):
        raise NotIdempotent(f"{x} is not a nonzero singular idempotent")

    if x.a == 0:
        if x.b == 0 and x.c == 0:
            form = CanonicalForm("E0")
        elif x.b == 0:
            form = CanonicalForm("E_sub", (x.c,))
        else:
            form = CanonicalForm("F_sup", (x.b,))
    elif x.a == 1:
        if x.b == 0 and x.c == 0:
            form = CanonicalForm("Etop0")
        elif x.c == 0:
            form = CanonicalForm("E_sup", (x.b,))
        else:
            form = CanonicalForm("F_sub", (x.c,))
    else:
        i = x.a
        j = div(x.b, sub(1, i, spec), spec)
        form = CanonicalForm("E_pair", (i, j))

    if form.materialize(spec) != x:
        raise NotIdempotent(f"{x} matches no idempotent template")
    return form


def nilpotent_form(x, spec):
    """Return (scalar, form) with x = scalar * form"""
    if not is_nilpotent(x, spec):
        raise NotNilpotent(f"{x} is not nilpotent")
    if x.a == 0:
        if x.b != 0:
            return x.b, CanonicalForm("N")
        return x.c, CanonicalForm("M")
    return x.a, CanonicalForm("N_k", (div(x.b, x.a, spec),))


def canonical_form(x, spec):
    """(scalar, form) for any zero-divisor, scalar * materialized form == x"""
    if not is_zero_divisor(x, spec):
        raise NotZeroDivisor(f"{x} is not a zero-divisor")
    if is_nilpotent(x, spec):
        return nilpotent_form(x, spec)
    t = trace(x, spec)
    return t, idempotent_form(scalar_mul(inv(t, spec), x, spec), spec)


def class_representative(x, spec):
    """The unique idempotent in [x], or the unit-scalar nilpotent form"""
    _, form = canonical_form(x, spec)
    return form.materialize(spec)
