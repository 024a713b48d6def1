import logging

import pandas as pd

from models.classification.classes import all_classes
from models.finite_field.field import element_str, parse_field
from models.matrix_ring.mat2 import zero_divisors
from utils.errors import EXIT_FAILED_CLAIM, EXIT_OK, ShunyaError, error_result

logger = logging.getLogger(__name__)


def matrix_str(x, spec):
    e = [element_str(v, spec) for v in x.entries()]
    return f"[[{e[0]},{e[1]}],[{e[2]},{e[3]}]]"


def class_rows(spec):
    rows = []
    for cls in all_classes(spec):
        rep = cls.representative
        rows.append({
            "representative": rep.label(spec),
            "tag": rep.tag,
            "parameters": [element_str(p, spec) for p in rep.params],
            "kind": "nilpotent" if rep.nilpotent else "idempotent",
            "size": cls.size,
            "members": [matrix_str(m, spec) for m in cls.members],
        })
    return rows


def run_classify(field_text):
    try:
        spec = parse_field(field_text)
        rows = class_rows(spec)
        n = spec.n
        zd = len(zero_divisors(spec))
    except ShunyaError as exc:
        return error_result(exc)

    counts = {
        "zero_divisors": zd,
        "classes": len(rows),
        "nilpotent_classes": sum(r["kind"] == "nilpotent" for r in rows),
    }
    ok = (
        zd == n * (n + 2) ** 2
        and len(rows) == (n + 2) ** 2
        and all(r["size"] == n for r in rows)
        and counts["nilpotent_classes"] == n + 2
    )
    logger.debug("classified GF(%d): %s", spec.order, counts)
    return {
        "field": spec.canonical(),
        "rows": rows,
        "counts": counts,
        "ok": ok,
        "exit_code": EXIT_OK if ok else EXIT_FAILED_CLAIM,
    }


def rows_table(rows):
    frame = pd.DataFrame(rows, columns=["representative", "kind", "size"])
    return frame.to_string(index=False)
