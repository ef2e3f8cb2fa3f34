"""Weak commutation relation checks for ordered matrix pairs.

Convention (fixed across the package and the report schema): for a report
on the ordered pair (a, b), membership is always read as "b belongs to the
one-sided commutation set OF a". The four primitive flags test which of the
two products commutes with which factor:

    ab_in_comm_a:  (ab)a == a(ab)
    ab_in_comm_b:  (ab)b == b(ab)
    ba_in_comm_a:  (ba)a == a(ba)
    ba_in_comm_b:  (ba)b == b(ba)

Derived memberships:

    comm_l = ab_in_comm_a and ba_in_comm_b
    comm_r = ab_in_comm_b and ba_in_comm_a
    comm_w = all four

As ordered-pair relations these three are symmetric: swapping (a, b)
permutes the primitive flags among themselves, so comm_l/comm_r/comm_w are
unchanged. Conjugate transposition swaps comm_l and comm_r.

The pointwise pieces of the three algebra-wide commutativity conditions:

    c1_pair = ab_in_comm_a or ba_in_comm_a or ba_in_comm_b
    c2_pair = ab_in_comm_a or ba_in_comm_a or ab_in_comm_b
    c3_pair = ab_in_comm_b or ba_in_comm_b

``residuals`` maps each flag name to the Frobenius norm of its defect
matrix (exactly 0.0 when the flag is true in the exact checker).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .numeric import CMatrix

__all__ = ["RelationReport", "relation_check", "relation_check_tol", "FLAG_NAMES"]

FLAG_NAMES = ("comm", "ab_in_comm_a", "ab_in_comm_b", "ba_in_comm_a", "ba_in_comm_b")


@dataclass(frozen=True)
class RelationReport:
    comm: bool
    ab_in_comm_a: bool
    ab_in_comm_b: bool
    ba_in_comm_a: bool
    ba_in_comm_b: bool
    comm_l: bool
    comm_r: bool
    comm_w: bool
    c1_pair: bool
    c2_pair: bool
    c3_pair: bool
    residuals: dict = field(compare=False)

    def flags(self):
        return {
            "comm": self.comm,
            "ab_in_comm_a": self.ab_in_comm_a,
            "ab_in_comm_b": self.ab_in_comm_b,
            "ba_in_comm_a": self.ba_in_comm_a,
            "ba_in_comm_b": self.ba_in_comm_b,
            "comm_l": self.comm_l,
            "comm_r": self.comm_r,
            "comm_w": self.comm_w,
            "c1_pair": self.c1_pair,
            "c2_pair": self.c2_pair,
            "c3_pair": self.c3_pair,
        }

    def to_json_dict(self):
        out = dict(self.flags())
        out["residuals"] = {k: float(v) for k, v in sorted(self.residuals.items())}
        return out


def _report_from_primitives(comm, ab_a, ab_b, ba_a, ba_b, residuals):
    return RelationReport(
        comm=comm,
        ab_in_comm_a=ab_a,
        ab_in_comm_b=ab_b,
        ba_in_comm_a=ba_a,
        ba_in_comm_b=ba_b,
        comm_l=ab_a and ba_b,
        comm_r=ab_b and ba_a,
        comm_w=ab_a and ab_b and ba_a and ba_b,
        c1_pair=ab_a or ba_a or ba_b,
        c2_pair=ab_a or ba_a or ab_b,
        c3_pair=ab_b or ba_b,
        residuals=residuals,
    )


def relation_check(a, b):
    """Exact relation report for the ordered pair (a, b) of ExactMatrix."""
    ab = a * b
    ba = b * a
    defects = {
        "comm": ab - ba,
        "ab_in_comm_a": ab * a - a * ab,
        "ab_in_comm_b": ab * b - b * ab,
        "ba_in_comm_a": ba * a - a * ba,
        "ba_in_comm_b": ba * b - b * ba,
    }
    flags = {k: d.is_zero() for k, d in defects.items()}
    residuals = {k: 0.0 if flags[k] else d.frobenius() for k, d in defects.items()}
    return _report_from_primitives(
        flags["comm"],
        flags["ab_in_comm_a"],
        flags["ab_in_comm_b"],
        flags["ba_in_comm_a"],
        flags["ba_in_comm_b"],
        residuals,
    )


def relation_check_tol(a, b, tol=1e-8):
    """Tolerance-based relation report for CMatrix operands.

    A defect D counts as zero when ||D||_F <= tol * (1 + ||a|| * ||b|| *
    (||a|| + ||b||)), the natural scale of the triple products involved.
    """
    aa = a.array if isinstance(a, CMatrix) else np.asarray(a, dtype=complex)
    bb = b.array if isinstance(b, CMatrix) else np.asarray(b, dtype=complex)
    ab = aa @ bb
    ba = bb @ aa
    defects = {
        "comm": ab - ba,
        "ab_in_comm_a": ab @ aa - aa @ ab,
        "ab_in_comm_b": ab @ bb - bb @ ab,
        "ba_in_comm_a": ba @ aa - aa @ ba,
        "ba_in_comm_b": ba @ bb - bb @ ba,
    }
    na = float(np.linalg.norm(aa, "fro"))
    nb = float(np.linalg.norm(bb, "fro"))
    threshold = tol * (1.0 + na * nb * (na + nb))
    residuals = {k: float(np.linalg.norm(d, "fro")) for k, d in defects.items()}
    flags = {k: residuals[k] <= threshold for k in defects}
    return _report_from_primitives(
        flags["comm"],
        flags["ab_in_comm_a"],
        flags["ab_in_comm_b"],
        flags["ba_in_comm_a"],
        flags["ba_in_comm_b"],
        residuals,
    )
