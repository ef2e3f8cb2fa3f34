"""Identity catalog: targeted pairs per identity and the suite harness."""

import json
from fractions import Fraction

import pytest

from weakcomm.errors import UnknownIdentityError
from weakcomm.exact import ExactMatrix, Scalar
from weakcomm.identities import (
    IdentityId,
    check_identity,
    identity_catalog,
    verify_suite,
)
from weakcomm.instances import ExampleId, paper_example
from weakcomm.relations import relation_check

E = ExactMatrix.single_entry


def _pair(example_id):
    (a, b), _ = paper_example(example_id)
    return a, b


def test_catalog_is_complete_and_ordered():
    cat = identity_catalog()
    assert cat == list(IdentityId)
    assert len(cat) == len(set(cat)) == 33


def test_check_identity_accepts_string_ids():
    a, b = _pair(ExampleId.SEX_V_PQ)
    res = check_identity("R.iii", a, b)
    assert res.identity is IdentityId.R_iii
    assert res.verdict == "pass"


def test_unknown_identity_rejected():
    a, b = _pair(ExampleId.SEX_I_PQ)
    with pytest.raises(UnknownIdentityError):
        check_identity("NOPE", a, b)


def test_l1_one_sided_families():
    # SEX_I_PQ is strictly comm_l: the left family passes, the right
    # family is vacuous.
    a, b = _pair(ExampleId.SEX_I_PQ)
    rep = relation_check(a, b)
    assert rep.comm_l and not rep.comm_r
    for ident in (IdentityId.L1_I_i, IdentityId.L1_I_ii, IdentityId.L1_I_iii):
        assert check_identity(ident, a, b).verdict == "pass"
    for ident in (IdentityId.L1_III_i, IdentityId.L1_III_ii, IdentityId.L1_III_iii):
        assert check_identity(ident, a, b).verdict == "pass"
    for ident in (IdentityId.L1_IV_i, IdentityId.L1_IV_ii, IdentityId.L1_IV_iii):
        res = check_identity(ident, a, b)
        assert res.verdict == "vacuous"
        assert not res.hypothesis_met


def test_l1_right_family_on_transpose():
    # Transposing swaps the families.
    a, b = _pair(ExampleId.SEX_I_PQ)
    at, bt = a.transpose(), b.transpose()
    assert relation_check(at, bt).comm_r
    for ident in (
        IdentityId.L1_II_i,
        IdentityId.L1_II_ii,
        IdentityId.L1_IV_i,
        IdentityId.L1_IV_ii,
        IdentityId.L1_IV_iii,
    ):
        assert check_identity(ident, at, bt).verdict == "pass"


def test_newton_left_and_right():
    a, b = _pair(ExampleId.SEX_I_PQ)
    for n in range(2, 9):
        res = check_identity(IdentityId.NEWTON_L, a, b, n=n)
        assert res.verdict == "pass" and res.residual == 0.0
    at, bt = a.transpose(), b.transpose()
    for n in range(2, 9):
        assert check_identity(IdentityId.NEWTON_R, at, bt, n=n).verdict == "pass"
    # Newton-R on a strictly left pair is vacuous
    assert check_identity(IdentityId.NEWTON_R, a, b, n=3).verdict == "vacuous"


def test_binom_holds_except_n2():
    a, b = _pair(ExampleId.SEX_V_PQ)
    for n in (1, 3, 4, 5, 6):
        res = check_identity(IdentityId.BINOM, a, b, n=n)
        assert res.verdict == "pass" and res.residual == 0.0
    res2 = check_identity(IdentityId.BINOM, a, b, n=2)
    assert res2.verdict == "vacuous"


def test_binom_n2_defect_is_reversed_commutator():
    # (a+b)^2 - (a^2 + 2ab + b^2) == ba - ab whenever anything is true;
    # on a weakly commuting non-commuting pair it is nonzero.
    a, b = _pair(ExampleId.SEX_V_PQ)
    s = a + b
    lhs = s * s - (a * a + a * b * 2 + b * b)
    assert lhs == b * a - a * b
    assert not lhs.is_zero()


def test_telescope_all_four_orders():
    a, b = _pair(ExampleId.SEX_V_PQ)
    for n in (1, 3, 4, 5, 6):
        res = check_identity(IdentityId.TELESCOPE, a, b, n=n)
        assert res.verdict == "pass"
    assert check_identity(IdentityId.TELESCOPE, a, b, n=2).verdict == "vacuous"


def test_exp_corr_on_nilpotent_weak_pair():
    a, b = _pair(ExampleId.SEX_V_PQ)
    res = check_identity(IdentityId.EXP_CORR, a, b)
    assert res.verdict == "pass" and res.residual == 0.0


def test_exp_corr_vacuous_without_nilpotency():
    a = ExactMatrix.identity(2)
    res = check_identity(IdentityId.EXP_CORR, a, a)
    assert res.verdict == "vacuous"


def test_nil_prod_and_sum_and_closure():
    a, b = _pair(ExampleId.SEX_V_PQ)
    for ident in (IdentityId.NIL_PROD, IdentityId.NIL_SUM, IdentityId.QUASI_CLOSURE):
        res = check_identity(ident, a, b)
        assert res.verdict == "pass"


def test_nil_tele_left_direction():
    # SEX_V: b is in comm(a^2) but not comm(a); the telescoping
    # factorization must close at every order above 2.
    a, b = _pair(ExampleId.SEX_V_PQ)
    assert not (b * a - a * b).is_zero()
    a2 = a * a
    assert (b * a2 - a2 * b).is_zero()
    res = check_identity(IdentityId.NIL_TELE, a, b)
    assert res.verdict == "pass" and res.residual == 0.0
    forced = check_identity(IdentityId.NIL_TELE, a, b, n=2)
    assert forced.verdict == "pass"


def test_nil_tele_right_direction():
    a, b = _pair(ExampleId.SEX_V_PQ)
    at, bt = a.transpose(), b.transpose()
    res = check_identity(IdentityId.NIL_TELE, at, bt)
    assert res.verdict == "pass" and res.residual == 0.0


def test_nil_tele_vacuous_when_no_power_membership():
    a = ExactMatrix.parse("0,1;0,0")
    b = ExactMatrix.parse("0,0;1,0")
    res = check_identity(IdentityId.NIL_TELE, a, b)
    assert res.verdict == "vacuous"


def test_rad_prod_and_sum_commuting():
    a = ExactMatrix.parse("-1,4;-1,3")  # defective, radius exactly 1
    b = a * a
    for ident in (IdentityId.RAD_PROD, IdentityId.RAD_SUM):
        res = check_identity(ident, a, b)
        assert res.verdict == "pass"
        assert res.residual <= 1e-8


def test_rad_bounds_vacuous_on_free_pair():
    a = ExactMatrix.parse("0,1;0,0")
    b = ExactMatrix.parse("0,0;1,0")
    assert check_identity(IdentityId.RAD_PROD, a, b).verdict == "vacuous"
    assert check_identity(IdentityId.RAD_SUM, a, b).verdict == "vacuous"


def test_spec_identities_on_spectral_instance():
    from weakcomm.instances import sample_spectral_instance

    inst = sample_spectral_instance(4, 3, kind="comm_r")
    t, n = inst.t, inst.n
    assert check_identity(IdentityId.SPEC_INCL, t, n).verdict == "pass"
    if (n * n).is_zero():
        assert check_identity(IdentityId.SPEC_EQ_N2, t, n).verdict == "pass"
    res = check_identity(IdentityId.KER_INCL, t, n, lam=inst.lam)
    assert res.verdict == "pass"


def test_spec_eq_fails_without_hypothesis():
    # The classical counterexample: swapping off-diagonal units changes
    # the nonzero spectrum; the hypothesis gate must be what saves us.
    a, b = _pair(ExampleId.REMARK_TN)
    res = check_identity(IdentityId.SPEC_EQ_N2, a, b)
    assert res.verdict == "vacuous"
    assert not res.holds  # informational: the conclusion really is false


def test_spec_eq_w_on_weak_pair():
    a, b = _pair(ExampleId.SEX_V_PQ)
    res = check_identity(IdentityId.SPEC_EQ_W, a, b)
    assert res.verdict == "pass"


def test_kriterion_range_always_applicable():
    a, b = _pair(ExampleId.SEX_I_PS)
    res = check_identity(IdentityId.KRITERION_RANGE, a, b)
    assert res.hypothesis_met and res.verdict == "pass"


def test_r_shift_params():
    a, b = _pair(ExampleId.SEX_I_PQ)
    res = check_identity(IdentityId.R_i, a, b, lam=0, mu=1)
    assert res.verdict == "pass"
    assert res.params["lam"] == Scalar(0)
    # nonzero lam without full commutation gates the hypothesis off
    res2 = check_identity(IdentityId.R_i, a, b, lam=1, mu=0)
    assert res2.verdict == "vacuous"


def test_result_json_shape():
    a, b = _pair(ExampleId.SEX_V_PQ)
    d = check_identity(IdentityId.BINOM, a, b, n=3).to_json_dict()
    assert d["identity"] == "BINOM"
    assert d["verdict"] == "pass"
    assert d["params"] == {"n": 3}
    assert d["defect"] is None
    json.dumps(d)


def test_failure_reports_defect_literal():
    # Force a fail by lying about the hypothesis via fault injection in
    # a tiny suite run instead: BINOM holds on weak pairs, so flip it.
    rep = verify_suite(
        classes=["comm_w"], dims=(3,), samples_per_class=2, seed=11, inject_fault="BINOM"
    )
    slot = rep.identities["BINOM"]
    assert slot["fail"] > 0
    ff = slot["first_failure"]
    assert ff is not None
    assert set(ff) >= {"class", "dim", "index", "seed", "a", "b", "params"}


def test_suite_small_run_clean_and_deterministic():
    kw = dict(classes=["comm_l", "none"], dims=(2, 3), samples_per_class=4, seed=5)
    r1 = verify_suite(**kw)
    r2 = verify_suite(**kw)
    assert r1.to_json() == r2.to_json()
    assert r1.failures == 0
    assert r1.totals["pass"] > 0
    d = r1.to_json_dict()
    assert d["schema_version"] == 1
    assert d["config"]["seed"] == 5


def test_suite_rejects_bad_config():
    with pytest.raises(ValueError):
        verify_suite(dims=(), samples_per_class=1, seed=1)
    with pytest.raises(ValueError):
        verify_suite(classes=["nonsense"], samples_per_class=1, seed=1)
