"""
Zero-Product Relation Table
The listed products among canonical forms that vanish, always or under a
parameter condition, as executable records over every parameter value

Notation: E_a = E_sub(a), E^a = E_sup(a), F_a = F_sub(a), F^a = F_sup(a),
E_{i,k} = E_pair(i, k), N_a = N_k(a), E^0 = Etop0
"""

from dataclasses import dataclass

from models.classification.forms import CanonicalForm
from models.finite_field.field import add, div, enumerate_field, inv, neg, nonzero_elements, sub
from models.matrix_ring.mat2 import mat_mul


@dataclass(frozen=True)
class RelationRecord:
    group: int
    identity: str
    params: tuple
    expected: bool
    observed: bool

    @property
    def holds(self):
        return self.expected == self.observed


def _quot(a, b, spec):
    return None if b == 0 else div(a, b, spec)


def _pairs(spec):
    """Parameters (i, k) of every E_pair form: i not in {0, 1}, k != 0"""
    return [(i, k) for i in enumerate_field(spec) if i not in (0, 1) for k in nonzero_elements(spec)]


def zero_relation_table(spec):
    def mat(tag, *params):
        return CanonicalForm(tag, params).materialize(spec)

    def vanishes(x, y):
        return mat_mul(x, y, spec).is_zero()

    nz = nonzero_elements(spec)
    records = []

    def record(group, identity, params, expected, x, y):
        records.append(RelationRecord(group, identity, tuple(params), bool(expected), vanishes(x, y)))

    for a in nz:
        for b in nz:
            record(1, "F_a E_b = 0", (a, b), True, mat("F_sub", a), mat("E_sub", b))
            record(1, "F^a E^b = 0", (a, b), True, mat("F_sup", a), mat("E_sup", b))

            minus_inv_a = neg(inv(a, spec), spec)
            record(2, "E_a F^b = 0 iff b = -1/a", (a, b), b == minus_inv_a, mat("E_sub", a), mat("F_sup", b))
            record(2, "E^a F_b = 0 iff b = -1/a", (a, b), b == minus_inv_a, mat("E_sup", a), mat("F_sub", b))
            record(3, "E_a N_b = 0 iff b = 1/a", (a, b), b == inv(a, spec), mat("E_sub", a), mat("N_k", b))
            record(4, "E^a N_b = 0 iff b = a", (a, b), b == a, mat("E_sup", a), mat("N_k", b))
            record(5, "N_b F_a = 0 iff b = -1/a", (a, b), b == minus_inv_a, mat("N_k", b), mat("F_sub", a))
            record(6, "N_b F^a = 0 iff b = -a", (a, b), b == neg(a, spec), mat("N_k", b), mat("F_sup", a))

    for a in nz:
        for i, k in _pairs(spec):
            e_ik = mat("E_pair", i, k)
            record(7, "E_a E_{i,k} = 0 iff k = -1/a", (a, i, k), k == neg(inv(a, spec), spec), mat("E_sub", a), e_ik)
            record(8, "E^a E_{i,k} = 0 iff k = -a", (a, i, k), k == neg(a, spec), mat("E_sup", a), e_ik)
            record(
                9, "E_{i,k} F_a = 0 iff i = k/(k - 1/a)", (a, i, k),
                i == _quot(k, sub(k, inv(a, spec), spec), spec), e_ik, mat("F_sub", a),
            )
            record(
                10, "E_{i,k} F^a = 0 iff i = k/(k - a)", (a, i, k),
                i == _quot(k, sub(k, a, spec), spec), e_ik, mat("F_sup", a),
            )
            record(
                11, "E_{i,k} N_a = 0 iff i = k/(k + a)", (a, i, k),
                i == _quot(k, add(k, a, spec), spec), e_ik, mat("N_k", a),
            )
            record(12, "N_a E_{i,k} = 0 iff k = -a", (a, i, k), k == neg(a, spec), mat("N_k", a), e_ik)

    for i, j in _pairs(spec):
        for l, k in _pairs(spec):
            record(
                13, "E_{i,j} E_{l,k} = 0 iff i = j/(j - k)", (i, j, l, k),
                i == _quot(j, sub(j, k, spec), spec), mat("E_pair", i, j), mat("E_pair", l, k),
            )

    e0, etop0, m_, n_ = mat("E0"), mat("Etop0"), mat("M"), mat("N")
    for a in nz:
        record(14, "E0 E^a = 0", (a,), True, e0, mat("E_sup", a))
        record(14, "F_a E0 = 0", (a,), True, mat("F_sub", a), e0)
        record(14, "E^0 E_a = 0", (a,), True, etop0, mat("E_sub", a))
        record(14, "F^a E^0 = 0", (a,), True, mat("F_sup", a), etop0)
        record(14, "M E_a = 0", (a,), True, m_, mat("E_sub", a))
        record(14, "F_a M = 0", (a,), True, mat("F_sub", a), m_)
        record(14, "N E^a = 0", (a,), True, n_, mat("E_sup", a))
        record(14, "F^a N = 0", (a,), True, mat("F_sup", a), n_)
    record(14, "E0 E^0 = 0", (), True, e0, etop0)
    return records


def failed_relations(spec):
    return [r for r in zero_relation_table(spec) if not r.holds]
