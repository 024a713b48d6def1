"""
Verification Reports
Claim records collected per run, rendered as deterministic JSON or a text table

- kind 'check': counts toward the exit code
- kind 'discrepancy': a published statement the computation contradicts
"""

import json

import numpy as np
import pandas as pd

from utils.config import REPORT_SCHEMA_VERSION

CHECK = "check"
DISCREPANCY = "discrepancy"


def _plain(value):
    """JSON-safe copy: numpy scalars/arrays to Python, everything else exotic to str"""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


class ReportGenerator:
    def __init__(self, field, seed=None):
        self.field = field
        self.seed = seed
        self.claims = []

    def add(self, claim, expected, computed, passed, graph=None, method="exact", kind=CHECK):
        self.claims.append({
            "field": self.field,
            "graph": graph,
            "claim": claim,
            "expected": _plain(expected),
            "computed": _plain(computed),
            "method": method,
            "pass": bool(passed),
            "kind": kind,
        })

    def add_discrepancy(self, claim, printed, computed, graph=None, method="exact"):
        """A printed statement next to the recomputed value; never fatal"""
        self.add(claim, printed, computed, _plain(printed) == _plain(computed), graph, method, DISCREPANCY)

    def extend(self, other):
        self.claims.extend(other.claims)

    def sorted_claims(self):
        return sorted(self.claims, key=lambda c: c["claim"])

    def failed(self):
        return [c for c in self.sorted_claims() if c["kind"] == CHECK and not c["pass"]]

    @property
    def ok(self):
        return not self.failed()

    def summary(self):
        checks = [c for c in self.claims if c["kind"] == CHECK]
        return {
            "checks": len(checks),
            "passed": sum(c["pass"] for c in checks),
            "failed": len(checks) - sum(c["pass"] for c in checks),
            "discrepancies": sum(1 for c in self.claims if c["kind"] == DISCREPANCY and not c["pass"]),
        }

    def to_dict(self):
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "field": self.field,
            "seed": self.seed,
            "claims": self.sorted_claims(),
            "summary": self.summary(),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_frame(self):
        cols = ["claim", "graph", "kind", "method", "pass", "expected", "computed"]
        rows = [{k: c[k] for k in cols} for c in self.sorted_claims()]
        return pd.DataFrame(rows, columns=cols)

    def to_text(self):
        frame = self.to_frame()
        if frame.empty:
            return f"{self.field}: no claims"
        for col in ("expected", "computed"):
            frame[col] = frame[col].map(lambda v: _clip(json.dumps(v, sort_keys=True)))
        s = self.summary()
        tail = f"\n{s['passed']}/{s['checks']} checks passed, {s['discrepancies']} printed discrepancies"
        return frame.to_string(index=False) + tail


def _clip(text, width=60):
    return text if len(text) <= width else text[: width - 3] + "..."
