"""McConnell's simplicity criterion and the GK-dimension dichotomy audit.

For delta = sum lambda_i x_i d/dx_i, the ring K_n[x, delta] is simple when
the lambda_i are linearly independent over Q.  A rational relation
sum c_i lambda_i = 0 with integer c gives a nonconstant central element
x^c - 1, so the ring is not simple in that case.  Nothing is claimed when
some beta_i is nonzero.

The audit only certifies NON-simplicity: a simple module over a simple ring
of this shape has growth degree 1 or n, so any other stabilized degree
rules simplicity out.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm

from .errors import UnstableInput
from .scalars import q_linear_relation


class SimplicityStatus(str, Enum):
    SIMPLE_BY_MCCONNELL = "SimpleByMcConnell"
    UNKNOWN_GENERAL_CASE = "UnknownGeneralCase"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class SimplicityVerdict:
    status: SimplicityStatus
    detail: str
    relation: tuple | None = None

    def as_dict(self):
        return {
            "status": self.status.value,
            "detail": self.detail,
            "relation": None if self.relation is None else list(self.relation),
        }


def integer_relation(values):
    """A primitive integer vector c with sum c_i v_i = 0, or None."""
    rel = q_linear_relation(list(values))
    if rel is None:
        return None
    den = lcm(*(Fraction(c).denominator for c in rel))
    ints = [int(Fraction(c) * den) for c in rel]
    g = gcd(*ints)
    ints = [v // g for v in ints]
    first = next(v for v in ints if v)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def check_simplicity(d):
    if any(d.beta):
        return SimplicityVerdict(
            SimplicityStatus.UNKNOWN_GENERAL_CASE,
            "some beta_i is nonzero; no simplicity criterion is available for this case",
        )
    rel = integer_relation(d.alpha)
    if rel is None:
        return SimplicityVerdict(
            SimplicityStatus.SIMPLE_BY_MCCONNELL,
            "beta = 0 and alpha_1..alpha_n are linearly independent over Q",
        )
    mono = "*".join(f"x{i}^{c}" for i, c in enumerate(rel, start=1) if c)
    return SimplicityVerdict(
        SimplicityStatus.NOT_APPLICABLE,
        f"alpha satisfies the integer relation {list(rel)}; {mono} - 1 is central, so the ring is not simple",
        rel,
    )


def central_witness(d, relation):
    """x^c for an integer relation c; commutes with x exactly when sum c_i alpha_i = 0."""
    return d.ring.monomial(relation)


class AuditVerdict(str, Enum):
    CERTIFIED_NOT_SIMPLE = "CertifiedNotSimple"
    CONSISTENT_WITH_SIMPLE = "ConsistentWithSimple"


@dataclass(frozen=True)
class AuditRow:
    module_id: str
    degree: int
    verdict: AuditVerdict
    justification: str
    asserted_simple: bool | None = None

    @property
    def conflict(self):
        return bool(self.asserted_simple) and self.verdict is AuditVerdict.CERTIFIED_NOT_SIMPLE


def _classify(degree, n):
    if degree < 0:
        return AuditVerdict.CERTIFIED_NOT_SIMPLE, "zero-module"
    if degree in (1, n):
        return AuditVerdict.CONSISTENT_WITH_SIMPLE, "dichotomy-allowed"
    if degree == 0:
        return AuditVerdict.CERTIFIED_NOT_SIMPLE, "gk-zero-impossible"
    if degree >= n + 1:
        return AuditVerdict.CERTIFIED_NOT_SIMPLE, "gk-above-n"
    return AuditVerdict.CERTIFIED_NOT_SIMPLE, "dichotomy-excluded"


def dichotomy_audit(reports, n):
    """reports: iterable of (module id, GrowthReport, asserted simple flag or None)."""
    rows = []
    for module_id, report, asserted in reports:
        if not report.stable:
            raise UnstableInput(f"growth of {module_id} did not stabilize")
        degree = report.dimension
        verdict, tag = _classify(degree, n)
        rows.append(AuditRow(module_id, degree, verdict, tag, asserted))
    return rows


def audit_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["module_id", "degree", "verdict", "justification", "asserted_simple"])
    for r in rows:
        asserted = "" if r.asserted_simple is None else str(r.asserted_simple).lower()
        w.writerow([r.module_id, r.degree, r.verdict.value, r.justification, asserted])
    return buf.getvalue()
