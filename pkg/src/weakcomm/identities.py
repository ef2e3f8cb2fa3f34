"""Catalog of verifiable consequences of one-sided commutation hypotheses.

Every identity in the catalog is a statement "hypothesis (relation flags,
possibly nilpotency) implies conclusion (exact matrix/polynomial equation,
membership, degree bound, or numeric inequality)". Checking an identity on
a concrete pair yields an :class:`IdentityResult` with a three-way verdict:

    pass     hypothesis met, conclusion holds
    fail     hypothesis met, conclusion violated
    vacuous  hypothesis not met (the conclusion is still evaluated and its
             raw outcome reported informationally)

``verify_suite`` samples pairs from the relation-class samplers and runs
the whole catalog over them deterministically, producing a JSON-stable
report with per-identity counts and a first-failure witness. A fault can
be injected into one identity (its computed verdict is inverted) to prove
the harness actually detects failures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .errors import UnknownIdentityError
from .exact import (
    ExactMatrix,
    charpoly,
    exp_exact_nilpotent,
    nilpotency_degree,
    poly_radical,
    poly_radical_nonzero,
)
from .numeric import CMatrix, spectral_radius_exact
from .relations import relation_check
from .scalar import Scalar
from .structure import kernel_inclusion_forward, kernel_inclusion_reverse, range_kernel_criterion

__all__ = [
    "IdentityId",
    "IdentityResult",
    "PairContext",
    "check_identity",
    "verify_suite",
    "SuiteReport",
    "identity_catalog",
]

RADIUS_TOL = 1e-8


class IdentityId(str, Enum):
    L1_I_i = "L1.I.i"
    L1_I_ii = "L1.I.ii"
    L1_I_iii = "L1.I.iii"
    L1_II_i = "L1.II.i"
    L1_II_ii = "L1.II.ii"
    L1_II_iii = "L1.II.iii"
    L1_III_i = "L1.III.i"
    L1_III_ii = "L1.III.ii"
    L1_III_iii = "L1.III.iii"
    L1_IV_i = "L1.IV.i"
    L1_IV_ii = "L1.IV.ii"
    L1_IV_iii = "L1.IV.iii"
    R_i = "R.i"
    R_ii = "R.ii"
    R_iii = "R.iii"
    R_iv = "R.iv"
    R_v = "R.v"
    NEWTON_R = "NEWTON_R"
    NEWTON_L = "NEWTON_L"
    BINOM = "BINOM"
    TELESCOPE = "TELESCOPE"
    EXP_CORR = "EXP_CORR"
    NIL_PROD = "NIL_PROD"
    NIL_SUM = "NIL_SUM"
    NIL_TELE = "NIL_TELE"
    RAD_PROD = "RAD_PROD"
    RAD_SUM = "RAD_SUM"
    QUASI_CLOSURE = "QUASI_CLOSURE"
    SPEC_INCL = "SPEC_INCL"
    SPEC_EQ_N2 = "SPEC_EQ_N2"
    SPEC_EQ_W = "SPEC_EQ_W"
    KER_INCL = "KER_INCL"
    KRITERION_RANGE = "KRITERION_RANGE"


@dataclass(frozen=True)
class IdentityResult:
    identity: IdentityId
    hypothesis_met: bool
    holds: bool
    residual: float
    params: dict
    defect: str | None

    @property
    def verdict(self):
        if not self.hypothesis_met:
            return "vacuous"
        return "pass" if self.holds else "fail"

    def to_json_dict(self):
        return {
            "identity": self.identity.value,
            "hypothesis_met": self.hypothesis_met,
            "holds": self.holds,
            "verdict": self.verdict,
            "residual": float(self.residual),
            "params": _json_params(self.params),
            "defect": self.defect,
        }


def _json_params(params):
    out = {}
    for k, v in params.items():
        if isinstance(v, Scalar):
            out[k] = v.literal()
        else:
            out[k] = v
    return out


class PairContext:
    """Cached products, powers and auxiliary data for one ordered pair."""

    def __init__(self, a, b, report=None):
        self.a = a
        self.b = b
        self.dim = a.dim
        self.report = report if report is not None else relation_check(a, b)
        self._bases = {"a": a, "b": b, "ab": a * b, "ba": b * a, "s": a + b}
        ident = ExactMatrix.identity(self.dim)
        self._pows = {k: [ident, v] for k, v in self._bases.items()}
        self._nil = {}
        self._cm = {}

    @property
    def ab(self):
        return self._bases["ab"]

    @property
    def ba(self):
        return self._bases["ba"]

    @property
    def s(self):
        return self._bases["s"]

    def base(self, name):
        return self._bases[name]

    def power(self, name, k):
        ps = self._pows[name]
        while len(ps) <= k:
            ps.append(ps[-1] * ps[1])
        return ps[k]

    def nil_degree(self, name):
        if name not in self._nil:
            self._nil[name] = nilpotency_degree(self._bases[name])
        return self._nil[name]

    def cmatrix(self, name):
        if name not in self._cm:
            self._cm[name] = CMatrix.from_exact(self._bases[name])
        return self._cm[name]


def _memb(x, y):
    """Defect of the membership x in comm(y)."""
    return x * y - y * x


def _from_defects(hyp, defects):
    residual = 0.0
    defect_lit = None
    ok = True
    for d in defects:
        if not d.is_zero():
            ok = False
            r = d.frobenius()
            residual = max(residual, r)
            if defect_lit is None:
                defect_lit = d.literal()
    return hyp, ok, residual, defect_lit


def _bool_result(hyp, ok, defect=None):
    return hyp, ok, 0.0 if ok else 1.0, None if ok else defect


# -- checkers -------------------------------------------------------------------
# Each checker maps (ctx, params) to (hypothesis_met, holds, residual, defect).

_POWERS = (1, 2, 3, 4)
_TRIPLE = (1, 2, 3)


def _chk_l1_i_i(ctx, p):
    hyp = ctx.report.ab_in_comm_a
    defects = []
    for n in _POWERS:
        anb = ctx.power("a", n) * ctx.b
        defects.extend(_memb(anb, ctx.power("a", m)) for m in _POWERS)
    return _from_defects(hyp, defects)


def _chk_l1_i_ii(ctx, p):
    hyp = ctx.report.ab_in_comm_a
    a, b = ctx.a, ctx.b
    defects = []
    for n in (2, 3, 4):
        ban = ctx.power("ba", n)
        defects.append(ctx.power("ab", n) - ctx.power("a", n) * ctx.power("b", n))
        defects.append(ban - b * ctx.power("a", n) * ctx.power("b", n - 1))
        defects.append(ban - ctx.ba * ctx.power("ab", n - 1))
        defects.append(ban - b * ctx.power("a", n - 1) * ctx.power("b", n - 1) * a)
    return _from_defects(hyp, defects)


def _chk_l1_i_iii(ctx, p):
    hyp = ctx.report.ab_in_comm_a
    return _from_defects(hyp, [_memb(ctx.a * ctx.s, ctx.a)])


def _chk_l1_ii_i(ctx, p):
    hyp = ctx.report.ab_in_comm_b
    defects = []
    for n in _POWERS:
        abn = ctx.a * ctx.power("b", n)
        defects.extend(_memb(abn, ctx.power("b", m)) for m in _POWERS)
    return _from_defects(hyp, defects)


def _chk_l1_ii_ii(ctx, p):
    hyp = ctx.report.ab_in_comm_b
    a, b = ctx.a, ctx.b
    defects = []
    for n in (2, 3, 4):
        ban = ctx.power("ba", n)
        defects.append(ctx.power("ab", n) - ctx.power("a", n) * ctx.power("b", n))
        defects.append(ban - ctx.power("a", n - 1) * ctx.power("b", n) * a)
        defects.append(ban - ctx.power("ab", n - 1) * ctx.ba)
        defects.append(ban - b * ctx.power("a", n - 1) * ctx.power("b", n - 1) * a)
    return _from_defects(hyp, defects)


def _chk_l1_ii_iii(ctx, p):
    hyp = ctx.report.ab_in_comm_b
    return _from_defects(hyp, [_memb(ctx.s * ctx.b, ctx.b)])


def _chk_l1_iii_i(ctx, p):
    hyp = ctx.report.comm_l
    defects = []
    for n in _TRIPLE:
        for m in _TRIPLE:
            anbm = ctx.power("a", n) * ctx.power("b", m)
            defects.extend(_memb(anbm, ctx.power("a", k)) for k in _TRIPLE)
    return _from_defects(hyp, defects)


def _telescope_sums(ctx, n):
    d = ctx.dim
    s_ba = ExactMatrix.zeros(d)
    s_ab = ExactMatrix.zeros(d)
    for j in range(n):
        s_ba = s_ba + ctx.power("b", j) * ctx.power("a", n - 1 - j)
        s_ab = s_ab + ctx.power("a", n - 1 - j) * ctx.power("b", j)
    return s_ba, s_ab


def _chk_l1_iii_ii(ctx, p):
    hyp = ctx.report.comm_l
    a, b = ctx.a, ctx.b
    defects = []
    for n in (2, 3, 4, 5):
        an, bn = ctx.power("a", n), ctx.power("b", n)
        an1, bn1 = ctx.power("a", n - 1), ctx.power("b", n - 1)
        s_ba, s_ab = _telescope_sums(ctx, n)
        defects.append((an - bn + b * an1 - an1 * b) - s_ba * (a - b))
        defects.append((an - bn + bn1 * a - a * bn1) - s_ab * (a - b))
    return _from_defects(hyp, defects)


def _chk_l1_iii_iii(ctx, p):
    hyp = ctx.report.comm_l
    return _from_defects(hyp, [_memb(ctx.s * ctx.a, ctx.s), _memb(ctx.b * ctx.s, ctx.b)])


def _chk_l1_iv_i(ctx, p):
    hyp = ctx.report.comm_r
    defects = []
    for n in _TRIPLE:
        for m in _TRIPLE:
            anbm = ctx.power("a", n) * ctx.power("b", m)
            defects.extend(_memb(anbm, ctx.power("b", k)) for k in _TRIPLE)
    return _from_defects(hyp, defects)


def _chk_l1_iv_ii(ctx, p):
    hyp = ctx.report.comm_r
    a, b = ctx.a, ctx.b
    defects = []
    for n in (2, 3, 4, 5):
        an, bn = ctx.power("a", n), ctx.power("b", n)
        an1, bn1 = ctx.power("a", n - 1), ctx.power("b", n - 1)
        s_ba, s_ab = _telescope_sums(ctx, n)
        defects.append((an - bn + a * bn1 - bn1 * a) - (a - b) * s_ba)
        defects.append((an - bn + an1 * b - b * an1) - (a - b) * s_ab)
    return _from_defects(hyp, defects)


def _chk_l1_iv_iii(ctx, p):
    hyp = ctx.report.comm_r
    return _from_defects(hyp, [_memb(ctx.a * ctx.s, ctx.s), _memb(ctx.s * ctx.b, ctx.b)])


def _shift(m, lam):
    return m - ExactMatrix.identity(m.dim) * lam


def _chk_r_i(ctx, p):
    lam = Scalar.coerce(p.get("lam", 0))
    mu = Scalar.coerce(p.get("mu", 0))
    hyp = ctx.report.ab_in_comm_a and (ctx.report.comm or lam.is_zero())
    sa, sb = _shift(ctx.a, lam), _shift(ctx.b, mu)
    return _from_defects(hyp, [_memb(sa * sb, sa)])


def _chk_r_ii(ctx, p):
    lam = Scalar.coerce(p.get("lam", 0))
    mu = Scalar.coerce(p.get("mu", 0))
    hyp = ctx.report.ba_in_comm_a and (ctx.report.comm or lam.is_zero())
    sa, sb = _shift(ctx.a, lam), _shift(ctx.b, mu)
    return _from_defects(hyp, [_memb(sb * sa, sa)])


def _chk_r_iii(ctx, p):
    hyp = ctx.report.comm_w
    defects = [
        _memb(ctx.power("a", n), ctx.power("b", m))
        for n in _TRIPLE
        for m in _TRIPLE
        if n * m >= 2
    ]
    return _from_defects(hyp, defects)


def _chk_r_iv(ctx, p):
    rep = ctx.report
    hyp = rep.comm_l or rep.comm_r
    shifted = relation_check(ctx.s, ctx.b)
    ok = True
    residual = 0.0
    if rep.comm_l and not shifted.comm_l:
        ok = False
        residual = max(residual, shifted.residuals["ab_in_comm_a"], shifted.residuals["ba_in_comm_b"])
    if rep.comm_r and not shifted.comm_r:
        ok = False
        residual = max(residual, shifted.residuals["ab_in_comm_b"], shifted.residuals["ba_in_comm_a"])
    return hyp, ok, residual, None


def _chk_r_v(ctx, p):
    aba = ctx.a * ctx.ba
    hyp = aba == ctx.a * ctx.ab and aba == ctx.ba * ctx.a
    defects = [
        _memb(ctx.power("a", n), ctx.power("b", m)) for n in (2, 3, 4) for m in _TRIPLE
    ]
    return _from_defects(hyp, defects)


def _newton_sum_r(ctx, n):
    d = ctx.dim
    s = ExactMatrix.zeros(d)
    for k in range(1, n + 1):
        term = ctx.power("a", n - k) * ctx.power("b", k) + ctx.power("b", n - k) * ctx.power("a", k)
        s = s + term * comb(n - 1, k - 1)
    return s


def _newton_sum_l(ctx, n):
    d = ctx.dim
    s = ExactMatrix.zeros(d)
    for k in range(1, n + 1):
        term = ctx.power("a", k) * ctx.power("b", n - k) + ctx.power("b", k) * ctx.power("a", n - k)
        s = s + term * comb(n - 1, k - 1)
    return s


def _chk_newton_r(ctx, p):
    n = p.get("n", 3)
    hyp = ctx.report.comm_r
    return _from_defects(hyp, [ctx.power("s", n) - _newton_sum_r(ctx, n)])


def _chk_newton_l(ctx, p):
    n = p.get("n", 3)
    hyp = ctx.report.comm_l
    return _from_defects(hyp, [ctx.power("s", n) - _newton_sum_l(ctx, n)])


def _chk_binom(ctx, p):
    n = p.get("n", 3)
    hyp = ctx.report.comm_w and n != 2
    d = ctx.dim
    s1 = ExactMatrix.zeros(d)
    s2 = ExactMatrix.zeros(d)
    for k in range(n + 1):
        c = comb(n, k)
        s1 = s1 + ctx.power("a", k) * ctx.power("b", n - k) * c
        s2 = s2 + ctx.power("b", k) * ctx.power("a", n - k) * c
    sn = ctx.power("s", n)
    return _from_defects(hyp, [sn - s1, sn - s2])


def _chk_telescope(ctx, p):
    n = p.get("n", 3)
    hyp = ctx.report.comm_w and n != 2
    a, b = ctx.a, ctx.b
    target = ctx.power("a", n) - ctx.power("b", n)
    s_ba, s_ab = _telescope_sums(ctx, n)
    defects = [
        target - s_ba * (a - b),
        target - (a - b) * s_ba,
        target - s_ab * (a - b),
        target - (a - b) * s_ab,
    ]
    return _from_defects(hyp, defects)


def _chk_exp_corr(ctx, p):
    hyp = (
        ctx.report.comm_w
        and ctx.nil_degree("a") is not None
        and ctx.nil_degree("b") is not None
    )
    if not hyp:
        return False, True, 0.0, None
    if ctx.nil_degree("s") is None:
        return True, False, 1.0, "a+b not nilpotent"
    ea = exp_exact_nilpotent(ctx.a)
    eb = exp_exact_nilpotent(ctx.b)
    es = exp_exact_nilpotent(ctx.s)
    commutator = ctx.ab - ctx.ba
    defects = [
        ea * eb - es - commutator * Fraction(1, 2),
        ea * eb - eb * ea - commutator,
    ]
    return _from_defects(hyp, defects)


def _chk_nil_prod(ctx, p):
    rep = ctx.report
    qa, qb = ctx.nil_degree("a"), ctx.nil_degree("b")
    via_ab = rep.ab_in_comm_a or rep.ab_in_comm_b
    via_ba = rep.ba_in_comm_a or rep.ba_in_comm_b
    hyp = (qa is not None or qb is not None) and (via_ab or via_ba)
    if not hyp:
        return False, True, 0.0, None
    q = min(d for d in (qa, qb) if d is not None)
    dab, dba = ctx.nil_degree("ab"), ctx.nil_degree("ba")
    ok = dab is not None and dba is not None
    if ok and via_ab:
        ok = dab <= q and dba <= q + 1
    if ok and via_ba:
        ok = dba <= q and dab <= q + 1
    return _bool_result(hyp, ok, f"d(ab)={dab}, d(ba)={dba}, bound q={q}")


def _chk_nil_sum(ctx, p):
    rep = ctx.report
    qa, qb = ctx.nil_degree("a"), ctx.nil_degree("b")
    hyp = qa is not None and qb is not None and (rep.comm_l or rep.comm_r)
    if not hyp:
        return False, True, 0.0, None
    ds = ctx.nil_degree("s")
    ok = ds is not None and abs(qa - qb) <= ds <= qa + qb
    return _bool_result(hyp, ok, f"d(a)={qa}, d(b)={qb}, d(a+b)={ds}")


def _detect_power_membership(ctx, x_name, base_name):
    """Smallest n <= dim with x in comm(base^n), or None."""
    x = ctx._bases[x_name]
    for n in range(1, ctx.dim + 1):
        if _memb(x, ctx.power(base_name, n)).is_zero():
            return n
    return None


def _chk_nil_tele(ctx, p):
    a, b = ctx.a, ctx.b
    rep = ctx.report
    n_given = p.get("n")
    defects = []
    applicable = False
    if rep.comm_l:
        n = n_given if n_given is not None else _detect_power_membership(ctx, "b", "a")
        if n is not None and _memb(b, ctx.power("a", n)).is_zero():
            applicable = True
            for m in (n + 1, n + 2, n + 3):
                s_ba, _ = _telescope_sums(ctx, m)
                defects.append((ctx.power("a", m) - ctx.power("b", m)) - s_ba * (a - b))
    if rep.comm_r:
        n = n_given if n_given is not None else _detect_power_membership(ctx, "a", "b")
        if n is not None and _memb(a, ctx.power("b", n)).is_zero():
            applicable = True
            for m in (n + 1, n + 2, n + 3):
                s_ba, _ = _telescope_sums(ctx, m)
                defects.append((ctx.power("a", m) - ctx.power("b", m)) - (a - b) * s_ba)
    return _from_defects(applicable, defects)


def _chk_rad_prod(ctx, p):
    rep = ctx.report
    hyp = rep.ab_in_comm_a or rep.ab_in_comm_b
    ra = spectral_radius_exact(ctx.base("a"))
    rb = spectral_radius_exact(ctx.base("b"))
    rab = spectral_radius_exact(ctx.base("ab"))
    over = rab - ra * rb
    ok = over <= RADIUS_TOL
    return hyp, ok, max(0.0, over), None


def _chk_rad_sum(ctx, p):
    rep = ctx.report
    hyp = rep.comm_l or rep.comm_r
    ra = spectral_radius_exact(ctx.base("a"))
    rb = spectral_radius_exact(ctx.base("b"))
    rs = spectral_radius_exact(ctx.base("s"))
    over = rs - (ra + rb)
    ok = over <= RADIUS_TOL
    return hyp, ok, max(0.0, over), None


def _chk_quasi_closure(ctx, p):
    rep = ctx.report
    qa, qb = ctx.nil_degree("a"), ctx.nil_degree("b")
    sum_branch = qa is not None and qb is not None and (rep.comm_l or rep.comm_r)
    prod_branch = (qa is not None or qb is not None) and (
        rep.ab_in_comm_a or rep.ab_in_comm_b or rep.ba_in_comm_a or rep.ba_in_comm_b
    )
    hyp = sum_branch or prod_branch
    if not hyp:
        return False, True, 0.0, None
    ok = True
    if sum_branch:
        ok = ok and ctx.nil_degree("s") is not None
    if prod_branch:
        ok = ok and ctx.nil_degree("ab") is not None and ctx.nil_degree("ba") is not None
    return _bool_result(hyp, ok, "nilpotency lost")


def _poly_defect(hyp, ok, lhs, rhs):
    if ok:
        return hyp, True, 0.0, None
    return hyp, False, 1.0, f"{lhs.literal()} vs {rhs.literal()}"


def _chk_spec_incl(ctx, p):
    hyp = ctx.nil_degree("b") is not None and ctx.report.ba_in_comm_a
    ra = poly_radical_nonzero(charpoly(ctx.a))
    rs = poly_radical_nonzero(charpoly(ctx.s))
    return _poly_defect(hyp, ra.divides(rs), ra, rs)


def _chk_spec_eq_n2(ctx, p):
    hyp = (ctx.b * ctx.b).is_zero() and ctx.report.ba_in_comm_a
    ra = poly_radical_nonzero(charpoly(ctx.a))
    rs = poly_radical_nonzero(charpoly(ctx.s))
    return _poly_defect(hyp, ra == rs, ra, rs)


def _chk_spec_eq_w(ctx, p):
    hyp = ctx.nil_degree("b") is not None and ctx.report.comm_w
    fa = poly_radical(charpoly(ctx.a))
    fs = poly_radical(charpoly(ctx.s))
    return _poly_defect(hyp, fa == fs, fa, fs)


def _chk_ker_incl(ctx, p):
    lam = Scalar.coerce(p.get("lam", 1))
    hyp = (
        not lam.is_zero()
        and ctx.nil_degree("b") is not None
        and ctx.report.ba_in_comm_a
    )
    if not hyp:
        return False, True, 0.0, None
    ok = kernel_inclusion_forward(ctx.a, ctx.b, lam)
    if (ctx.b * ctx.b).is_zero() or ctx.report.ab_in_comm_b:
        ok = ok and kernel_inclusion_reverse(ctx.a, ctx.b, lam)
    return _bool_result(hyp, ok, f"kernel inclusion failed at lam={lam.literal()}")


def _chk_kriterion_range(ctx, p):
    first, second = range_kernel_criterion(ctx.b, ctx.a)
    ok = first == ctx.report.ab_in_comm_a and second == ctx.report.ba_in_comm_a
    return _bool_result(True, ok, "range/kernel criterion disagrees with product flags")


_CHECKERS = {
    IdentityId.L1_I_i: _chk_l1_i_i,
    IdentityId.L1_I_ii: _chk_l1_i_ii,
    IdentityId.L1_I_iii: _chk_l1_i_iii,
    IdentityId.L1_II_i: _chk_l1_ii_i,
    IdentityId.L1_II_ii: _chk_l1_ii_ii,
    IdentityId.L1_II_iii: _chk_l1_ii_iii,
    IdentityId.L1_III_i: _chk_l1_iii_i,
    IdentityId.L1_III_ii: _chk_l1_iii_ii,
    IdentityId.L1_III_iii: _chk_l1_iii_iii,
    IdentityId.L1_IV_i: _chk_l1_iv_i,
    IdentityId.L1_IV_ii: _chk_l1_iv_ii,
    IdentityId.L1_IV_iii: _chk_l1_iv_iii,
    IdentityId.R_i: _chk_r_i,
    IdentityId.R_ii: _chk_r_ii,
    IdentityId.R_iii: _chk_r_iii,
    IdentityId.R_iv: _chk_r_iv,
    IdentityId.R_v: _chk_r_v,
    IdentityId.NEWTON_R: _chk_newton_r,
    IdentityId.NEWTON_L: _chk_newton_l,
    IdentityId.BINOM: _chk_binom,
    IdentityId.TELESCOPE: _chk_telescope,
    IdentityId.EXP_CORR: _chk_exp_corr,
    IdentityId.NIL_PROD: _chk_nil_prod,
    IdentityId.NIL_SUM: _chk_nil_sum,
    IdentityId.NIL_TELE: _chk_nil_tele,
    IdentityId.RAD_PROD: _chk_rad_prod,
    IdentityId.RAD_SUM: _chk_rad_sum,
    IdentityId.QUASI_CLOSURE: _chk_quasi_closure,
    IdentityId.SPEC_INCL: _chk_spec_incl,
    IdentityId.SPEC_EQ_N2: _chk_spec_eq_n2,
    IdentityId.SPEC_EQ_W: _chk_spec_eq_w,
    IdentityId.KER_INCL: _chk_ker_incl,
    IdentityId.KRITERION_RANGE: _chk_kriterion_range,
}


def identity_catalog():
    """All identity ids in catalog order."""
    return list(IdentityId)


def _suite_plan(identity, ctx):
    """Parameter grid for one identity inside verify_suite."""
    if identity in (IdentityId.NEWTON_R, IdentityId.NEWTON_L):
        return [{"n": n} for n in (2, 3, 4, 5, 6, 7, 8)]
    if identity in (IdentityId.BINOM, IdentityId.TELESCOPE):
        return [{"n": n} for n in (1, 2, 3, 4, 5, 6)]
    if identity in (IdentityId.R_i, IdentityId.R_ii):
        return [
            {"lam": Scalar(0), "mu": Scalar(0)},
            {"lam": Scalar(0), "mu": Scalar(1)},
            {"lam": Scalar(1), "mu": Scalar(0)},
        ]
    if identity is IdentityId.KER_INCL:
        return [{"lam": Scalar(1)}, {"lam": Scalar(-1)}, {"lam": Scalar(0, 1)}]
    return [{}]


def _run_checker(identity, ctx, params, invert=False):
    hyp, ok, residual, defect = _CHECKERS[identity](ctx, params)
    if invert and hyp:
        ok = not ok
    return IdentityResult(
        identity=identity,
        hypothesis_met=hyp,
        holds=ok,
        residual=residual,
        params=params,
        defect=defect,
    )


def check_identity(identity, a, b, n=None, lam=None, mu=None):
    """Check one catalog identity on the ordered pair (a, b)."""
    if not isinstance(identity, IdentityId):
        try:
            identity = IdentityId(identity)
        except ValueError as exc:
            raise UnknownIdentityError(str(identity)) from exc
    params = {}
    if n is not None:
        params["n"] = n
    if lam is not None:
        params["lam"] = Scalar.coerce(lam)
    if mu is not None:
        params["mu"] = Scalar.coerce(mu)
    return _run_checker(identity, PairContext(a, b), params)


# -- suite ------------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteReport:
    config: dict
    identities: dict
    totals: dict

    @property
    def failures(self):
        return self.totals["fail"]

    def to_json_dict(self):
        return {
            "schema_version": 1,
            "config": self.config,
            "identities": self.identities,
            "totals": self.totals,
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


def verify_suite(
    classes=None,
    dims=(2, 3, 4),
    samples_per_class=250,
    seed=7,
    inject_fault=None,
    progress=None,
):
    """Run the whole identity catalog over sampled pairs of each relation class.

    Sampling is deterministic in (seed, class, index). ``inject_fault`` names
    an identity whose computed verdict is inverted on every evaluation, a
    self-test that the harness records failures.
    """
    from .instances import RelationClass, derive_seed, sample_pair

    if classes is None:
        classes = list(RelationClass)
    else:
        classes = [RelationClass(c) for c in classes]
    dims = list(dims)
    if not dims or samples_per_class < 0:
        raise ValueError("dims must be nonempty and samples_per_class >= 0")
    if inject_fault is not None:
        inject_fault = IdentityId(inject_fault)

    counts = {
        ident.value: {"pass": 0, "vacuous": 0, "fail": 0, "first_failure": None}
        for ident in IdentityId
    }
    for ci, cls in enumerate(classes):
        for i in range(samples_per_class):
            dim = dims[i % len(dims)]
            pair_seed = derive_seed(seed, cls.value, i)
            strict = cls is not RelationClass.COMM and not (
                cls is RelationClass.COMM_W and dim < 3
            )
            a, b = sample_pair(cls, dim, pair_seed, require_noncommuting=strict)
            ctx = PairContext(a, b)
            for identity in IdentityId:
                for params in _suite_plan(identity, ctx):
                    res = _run_checker(
                        identity, ctx, params, invert=identity is inject_fault
                    )
                    slot = counts[identity.value]
                    slot[res.verdict] += 1
                    if res.verdict == "fail" and slot["first_failure"] is None:
                        slot["first_failure"] = {
                            "class": cls.value,
                            "dim": dim,
                            "index": i,
                            "seed": pair_seed,
                            "a": a.literal(),
                            "b": b.literal(),
                            "params": _json_params(params),
                            "residual": float(res.residual),
                            "defect": res.defect,
                        }
            if progress is not None:
                progress(cls.value, i)

    totals = {"pass": 0, "vacuous": 0, "fail": 0}
    for slot in counts.values():
        for key in totals:
            totals[key] += slot[key]
    config = {
        "classes": [c.value for c in classes],
        "dims": dims,
        "samples_per_class": samples_per_class,
        "seed": seed,
        "inject_fault": inject_fault.value if inject_fault else None,
    }
    return SuiteReport(config=config, identities=counts, totals=totals)
