"""Chain profiles, range/kernel criteria, inclusions, spectrum equality."""

import random
from fractions import Fraction

import pytest

from weakcomm.errors import HypothesisNotMetError, NotNilpotentError
from weakcomm.exact import ExactMatrix, Scalar, rank_kernel
from weakcomm.instances import sample_spectral_instance
from weakcomm.relations import relation_check
from weakcomm.structure import (
    chain_profile,
    dis_propagation,
    full_spectrum_equal_exact,
    invariant_restriction,
    kernel_inclusion_forward,
    kernel_inclusion_reverse,
    nonzero_spectrum_equal_exact,
    range_kernel_criterion,
)

E = ExactMatrix.single_entry


def _jordan_nilpotent(d):
    m = ExactMatrix.zeros(d)
    for i in range(d - 1):
        m = m + E(d, i, i + 1)
    return m


def _rand_matrix(rng, dim):
    rows = [
        [Scalar(Fraction(rng.randint(-2, 2))) for _ in range(dim)] for _ in range(dim)
    ]
    return ExactMatrix(rows)


def test_chain_profile_nilpotent_jordan_block():
    for d in (2, 3, 4, 5):
        p = chain_profile(_jordan_nilpotent(d))
        assert p.dim == d
        assert p.alpha_seq == tuple([1] * d + [0])
        assert p.beta_seq == p.alpha_seq
        assert p.ascent == d and p.descent == d
        assert p.stable_degree == d
        assert p.essential_degree == 0
        assert p.index == 0


def test_chain_profile_invertible():
    p = chain_profile(ExactMatrix.parse("1,1;0,1"))
    assert p.alpha_seq == (0, 0, 0)
    assert p.ascent == 0 and p.descent == 0 and p.stable_degree == 0


def test_chain_profile_mixed_block():
    # J_2(0) + unit block: the chain dies at step 2
    t = E(3, 0, 1) + E(3, 2, 2)
    p = chain_profile(t)
    assert p.alpha_seq == (1, 1, 0, 0)
    assert p.beta_seq == (1, 1, 0, 0)
    assert p.ascent == 2 and p.descent == 2 and p.stable_degree == 2


def test_chain_alpha_equals_beta_randomly():
    # two independent computation routes for the same invariant
    rng = random.Random(13)
    for _ in range(60):
        t = _rand_matrix(rng, rng.randint(2, 5))
        p = chain_profile(t)
        assert p.alpha_seq == p.beta_seq
        assert p.ascent == p.descent
        assert p.alpha_seq[-1] == 0
        assert p.index == 0


def test_stable_degree_zero_iff_kernel_in_all_ranges():
    rng = random.Random(17)
    mats = [
        _jordan_nilpotent(3),
        ExactMatrix.identity(3),
        E(3, 0, 1) + E(3, 2, 2),
    ] + [_rand_matrix(rng, rng.randint(2, 4)) for _ in range(40)]
    for t in mats:
        p = chain_profile(t)
        _, ker, _ = rank_kernel(t)
        power = ExactMatrix.identity(t.dim)
        contained = True
        for _ in range(t.dim):
            power = power * t
            _, _, img = rank_kernel(power)
            if not img.contains(ker):
                contained = False
                break
        assert (p.stable_degree == 0) == contained


def test_range_kernel_criterion_matches_product_flags():
    rng = random.Random(19)
    for _ in range(120):
        a = _rand_matrix(rng, rng.randint(2, 4))
        b = _rand_matrix(rng, a.dim)
        rep = relation_check(a, b)
        first, second = range_kernel_criterion(b, a)
        assert first == rep.ab_in_comm_a
        assert second == rep.ba_in_comm_a


def test_invariant_restriction_on_spectral_instance():
    inst = sample_spectral_instance(4, 9, kind="comm_r")
    v = invariant_restriction(inst.n, inst.t, inst.lam)
    assert v.hypothesis_met and v.invariant and v.restrictions_commute
    assert v.subspace_dim >= 1
    d = v.to_json_dict()
    assert d["invariant"] is True


def test_invariant_restriction_hypothesis_gate():
    t = ExactMatrix.parse("0,1;0,0")
    s = ExactMatrix.parse("0,0;1,0")
    v = invariant_restriction(s, t, 1)
    assert not v.hypothesis_met
    with pytest.raises(ValueError):
        invariant_restriction(s, t, 0)


def test_invariant_restriction_empty_eigenspace():
    t = ExactMatrix.parse("0,1;0,0")
    v = invariant_restriction(t * t, t, 5)  # s = 0 commutes; lam not an eigenvalue
    assert v.hypothesis_met and v.invariant and v.restrictions_commute
    assert v.subspace_dim == 0


def test_kernel_inclusions_on_spectral_instances():
    for seed in range(6):
        inst = sample_spectral_instance(4, 100 + seed, kind="comm_r")
        assert kernel_inclusion_forward(inst.t, inst.n, inst.lam, p=inst.p)
        if (inst.n * inst.n).is_zero():
            assert kernel_inclusion_reverse(inst.t, inst.n, inst.lam)


def test_kernel_inclusion_error_paths():
    t = ExactMatrix.parse("0,1;0,0")
    n = ExactMatrix.parse("0,0;1,0")
    with pytest.raises(ValueError):
        kernel_inclusion_forward(t, n, 0)
    with pytest.raises(HypothesisNotMetError):
        kernel_inclusion_forward(t, n, 1)  # t does not commute with n*t
    with pytest.raises(HypothesisNotMetError):
        kernel_inclusion_reverse(t, n, 1)
    with pytest.raises(NotNilpotentError):
        kernel_inclusion_forward(t, ExactMatrix.identity(2), 1)


def test_kernel_inclusion_forward_explicit():
    # t = diag(1, 0) with n = E12: n*t = 0 so the hypothesis is trivial;
    # ker(t - 1) = e1 and (t + n - 1)^2 kills it.
    t = E(2, 0, 0)
    n = E(2, 0, 1)
    assert (n * t).is_zero()
    assert kernel_inclusion_forward(t, n, 1, p=2)
    assert kernel_inclusion_reverse(t, n, 1)


def test_spectrum_equality_helpers():
    a = ExactMatrix.diagonal([Scalar(1), Scalar(0)])
    b = ExactMatrix.identity(2)
    assert nonzero_spectrum_equal_exact(a, b)
    assert not full_spectrum_equal_exact(a, b)
    assert full_spectrum_equal_exact(a, a)


def test_spectrum_equality_remark_counterexample():
    t = ExactMatrix.parse("0,1;0,0")
    n = ExactMatrix.parse("0,0;1,0")
    assert not nonzero_spectrum_equal_exact(t, t + n)
    assert not full_spectrum_equal_exact(t, t + n)


def test_dis_propagation_positive():
    t = ExactMatrix.parse("1,1;0,1")
    v = dis_propagation(t, t)
    assert v.hypothesis_met and v.holds
    assert v.stable_degree_ts == 0 and v.stable_degree_s == 0 and v.stable_degree_t == 0


def test_dis_propagation_gated():
    s = ExactMatrix.parse("0,0;1,0")
    t = ExactMatrix.parse("0,1;0,0")
    v = dis_propagation(s, t)
    assert not v.hypothesis_met and not v.holds
    d = v.to_json_dict()
    assert set(d) == {
        "hypothesis_met",
        "holds",
        "stable_degree_ts",
        "stable_degree_s",
        "stable_degree_t",
    }


def test_chain_profile_json_round_trip():
    import json

    p = chain_profile(_jordan_nilpotent(3))
    d = p.to_json_dict()
    json.dumps(d)
    assert d["alpha_seq"] == [1, 1, 1, 0]
    assert d["stable_degree"] == 3
