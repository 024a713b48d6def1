"""
Equivalence Classes of Zero-Divisors
A ~ B iff A = UB = BV for invertible U, V; classes are scalar orbits

- related: scalar-orbit fast path
- related_bruteforce: GL2(F) oracle, used by the test suite and verify
- all_classes: ordered partition of Z(M2(F)) into (n+2)^2 classes of size n
"""

import logging
from collections import defaultdict
from dataclasses import dataclass

from models.classification.forms import CanonicalForm, canonical_form
from models.finite_field.field import div, inv, neg, nonzero_elements, sub
from models.matrix_ring.mat2 import (
    general_linear_group,
    is_zero_divisor,
    mat_mul,
    scalar_mul,
    zero_divisors,
)
from utils.errors import NotZeroDivisor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZClass:
    representative: CanonicalForm
    members: tuple

    @property
    def size(self):
        return len(self.members)


def related(x, y, spec):
    """x ~ y iff x = a*y for some nonzero scalar a"""
    if not is_zero_divisor(x, spec) or not is_zero_divisor(y, spec):
        raise NotZeroDivisor("related() needs two zero-divisors")
    for ye, xe in zip(y.entries(), x.entries()):
        if ye != 0:
            a = div(xe, ye, spec)
            return a != 0 and scalar_mul(a, y, spec) == x
    return False


class GL2Oracle:
    """Brute-force x ~ y over all U, V in GL2(F), orbits cached per y"""

    def __init__(self, spec):
        self.spec = spec
        self.group = general_linear_group(spec)
        self._left = {}
        self._right = {}

    def left_orbit(self, y):
        if y not in self._left:
            self._left[y] = frozenset(mat_mul(u, y, self.spec) for u in self.group)
        return self._left[y]

    def right_orbit(self, y):
        if y not in self._right:
            self._right[y] = frozenset(mat_mul(y, v, self.spec) for v in self.group)
        return self._right[y]

    def related(self, x, y):
        if not is_zero_divisor(x, self.spec) or not is_zero_divisor(y, self.spec):
            raise NotZeroDivisor("related() needs two zero-divisors")
        return x in self.left_orbit(y) and x in self.right_orbit(y)


def related_bruteforce(x, y, spec):
    return GL2Oracle(spec).related(x, y)


# ==== Class order: S0, then S_1..S_n, then T_1..T_n ====
def s0_forms():
    return [CanonicalForm("M"), CanonicalForm("N"), CanonicalForm("E0"), CanonicalForm("Etop0")]


def s_forms(s, spec):
    """
    The five classes around a_j = s. The nilpotent is N_{-s}: the one whose
    lines both equal 1/s, hence adjacent to the other four.
    """
    return [
        CanonicalForm("E_sub", (neg(inv(s, spec), spec),)),
        CanonicalForm("E_sup", (neg(s, spec),)),
        CanonicalForm("F_sup", (s,)),
        CanonicalForm("F_sub", (inv(s, spec),)),
        CanonicalForm("N_k", (neg(s, spec),)),
    ]


def t_forms(s, spec):
    """E_{s/(s-t), s} for nonzero t != s, ordered by t"""
    return [
        CanonicalForm("E_pair", (div(s, sub(s, t, spec), spec), s))
        for t in nonzero_elements(spec)
        if t != s
    ]


def ordered_forms(spec):
    """[(block id, form)] in the deterministic class order"""
    out = [("S0", f) for f in s0_forms()]
    for j, s in enumerate(nonzero_elements(spec), start=1):
        out += [(f"S{j}", f) for f in s_forms(s, spec)]
    for j, s in enumerate(nonzero_elements(spec), start=1):
        out += [(f"T{j}", f) for f in t_forms(s, spec)]
    return out


def class_members(form, spec):
    rep = form.materialize(spec)
    return tuple(scalar_mul(a, rep, spec) for a in nonzero_elements(spec))


def all_classes(spec):
    """Partition Z(M2(F)) by canonical representative, in class order"""
    grouped = defaultdict(list)
    for x in zero_divisors(spec):
        _, form = canonical_form(x, spec)
        grouped[form].append(x)

    order = [form for _, form in ordered_forms(spec)]
    if set(order) != set(grouped) or len(order) != len(grouped):
        raise RuntimeError("class order does not cover the computed partition")

    classes = []
    for form in order:
        members = class_members(form, spec)
        if set(members) != set(grouped[form]):
            raise RuntimeError(f"class {form} is not a scalar orbit")
        classes.append(ZClass(form, members))
    logger.debug("GF(%d): %d classes", spec.order, len(classes))
    return classes


def derived_pair_count(spec):
    """Number of E_pair idempotents, n(n-1)"""
    return spec.n * (spec.n - 1)
