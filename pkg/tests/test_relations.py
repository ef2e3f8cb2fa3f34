"""Relation flags: truth on frozen pairs, symmetry, duality, tolerances."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakcomm.exact import ExactMatrix, Scalar
from weakcomm.numeric import CMatrix
from weakcomm.relations import FLAG_NAMES, relation_check, relation_check_tol

E = ExactMatrix.single_entry


def _rand_matrix(rng, dim):
    rows = [
        [
            Scalar(
                Fraction(rng.randint(-3, 3), rng.randint(1, 2)),
                Fraction(rng.randint(-1, 1)) if rng.random() < 0.2 else Fraction(0),
            )
            for _ in range(dim)
        ]
        for _ in range(dim)
    ]
    return ExactMatrix(rows)


def test_commuting_pair_sets_everything():
    a = ExactMatrix.parse("1,2;0,1")
    b = a * a
    r = relation_check(a, b)
    assert all(r.flags().values())
    assert all(v == 0.0 for v in r.residuals.values())


def test_one_sided_left_pair():
    # b = diag(1, 0), a = E21: ab = a (commutes with a, not with b),
    # ba = 0 (commutes with everything).
    a = E(2, 1, 0)
    b = ExactMatrix.diagonal([Scalar(1), Scalar(0)])
    r = relation_check(a, b)
    assert (r.ab_in_comm_a, r.ab_in_comm_b, r.ba_in_comm_a, r.ba_in_comm_b) == (
        True,
        False,
        True,
        True,
    )
    assert r.comm_l and not r.comm_r and not r.comm_w and not r.comm


def test_strict_weak_pair_dim3():
    # a = E21 + E32, b = E21: all four triple products balance but ab != ba.
    a = E(3, 1, 0) + E(3, 2, 1)
    b = E(3, 1, 0)
    r = relation_check(a, b)
    assert r.comm_w and r.comm_l and r.comm_r and not r.comm
    assert r.residuals["comm"] > 0


def test_no_relation_pair():
    a = ExactMatrix.parse("0,1;0,0")
    b = ExactMatrix.parse("0,0;1,0")
    r = relation_check(a, b)
    assert not any(
        (r.ab_in_comm_a, r.ab_in_comm_b, r.ba_in_comm_a, r.ba_in_comm_b)
    )
    assert not r.c1_pair and not r.c2_pair and not r.c3_pair


def test_derived_flags_are_functions_of_primitives():
    rng = random.Random(5)
    for _ in range(200):
        a = _rand_matrix(rng, rng.randint(2, 4))
        b = _rand_matrix(rng, a.dim)
        r = relation_check(a, b)
        assert r.comm_l == (r.ab_in_comm_a and r.ba_in_comm_b)
        assert r.comm_r == (r.ab_in_comm_b and r.ba_in_comm_a)
        assert r.comm_w == (r.comm_l and r.comm_r)
        assert r.c1_pair == (r.ab_in_comm_a or r.ba_in_comm_a or r.ba_in_comm_b)
        assert r.c2_pair == (r.ab_in_comm_a or r.ba_in_comm_a or r.ab_in_comm_b)
        assert r.c3_pair == (r.ab_in_comm_b or r.ba_in_comm_b)
        if r.comm:
            assert r.comm_w


def test_swap_symmetry_of_derived_relations():
    # Swapping (a, b) renames the primitive flags but fixes comm_l/r/w.
    rng = random.Random(11)
    for _ in range(200):
        a = _rand_matrix(rng, rng.randint(2, 4))
        b = _rand_matrix(rng, a.dim)
        r = relation_check(a, b)
        s = relation_check(b, a)
        assert r.comm == s.comm
        assert r.comm_l == s.comm_l
        assert r.comm_r == s.comm_r
        assert r.comm_w == s.comm_w
        # the primitive flags swap pairwise
        assert r.ab_in_comm_a == s.ba_in_comm_a
        assert r.ab_in_comm_b == s.ba_in_comm_b
        assert r.ba_in_comm_a == s.ab_in_comm_a
        assert r.ba_in_comm_b == s.ab_in_comm_b


def test_conjugate_transpose_swaps_left_and_right():
    rng = random.Random(23)
    for _ in range(200):
        a = _rand_matrix(rng, rng.randint(2, 4))
        b = _rand_matrix(rng, a.dim)
        r = relation_check(a, b)
        d = relation_check(a.conj_transpose(), b.conj_transpose())
        assert r.comm_l == d.comm_r
        assert r.comm_r == d.comm_l
        assert r.comm_w == d.comm_w
        assert r.comm == d.comm


def test_residuals_zero_iff_flag():
    rng = random.Random(31)
    for _ in range(100):
        a = _rand_matrix(rng, 3)
        b = _rand_matrix(rng, 3)
        r = relation_check(a, b)
        f = r.flags()
        for name in FLAG_NAMES:
            assert (r.residuals[name] == 0.0) == f[name]


def test_json_dict_shape():
    r = relation_check(E(2, 1, 0), E(2, 0, 1))
    d = r.to_json_dict()
    assert set(d) == {
        "comm",
        "ab_in_comm_a",
        "ab_in_comm_b",
        "ba_in_comm_a",
        "ba_in_comm_b",
        "comm_l",
        "comm_r",
        "comm_w",
        "c1_pair",
        "c2_pair",
        "c3_pair",
        "residuals",
    }
    assert set(d["residuals"]) == set(FLAG_NAMES)
    assert all(isinstance(v, float) for v in d["residuals"].values())


def test_tolerant_check_agrees_with_exact_on_clean_input():
    rng = random.Random(41)
    for _ in range(100):
        a = _rand_matrix(rng, 3)
        b = _rand_matrix(rng, 3)
        exact = relation_check(a, b)
        # exact-zero defects stay zero in floating point, so the tolerant
        # flags can only be >= the exact ones; nonzero rational defects of
        # this size sit far above the threshold
        approx = relation_check_tol(CMatrix.from_exact(a), CMatrix.from_exact(b))
        assert exact.flags() == approx.flags()


def test_tolerant_check_accepts_noise():
    # exact strictly weak pair perturbed by 1e-13: flags survive the
    # default tolerance and die under an ultra-tight one
    a = [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [1e-13, 1.0, 0.0]]
    b = [[0.0, 0.0, 1e-13], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]]
    r = relation_check_tol(a, b, tol=1e-8)
    assert r.comm_w and not r.comm
    strict = relation_check_tol(a, b, tol=1e-16)
    assert not strict.comm_w


@settings(max_examples=60, deadline=None)
@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
def test_any_pair_of_polynomials_in_one_matrix_fully_commutes(c0, c1, d0, d1):
    m = ExactMatrix.parse("0,1,0;0,0,1;1,0,0")
    one = ExactMatrix.identity(3)
    a = one * Scalar(c0) + m * Scalar(c1)
    b = one * Scalar(d0) + m * Scalar(d1)
    r = relation_check(a, b)
    assert r.comm and r.comm_w
