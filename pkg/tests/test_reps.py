import pytest
from hypothesis import given, strategies as st

from kleinmackey.reps import (ALPHA, BETA, GAMMA, RHO_C2, RHO_K, RepC2, RepK,
                              fixed_rep, parse_rep, restrict_rep,
                              restrict_rep_by_kernels)

reps = st.builds(RepK, st.integers(-6, 6), st.integers(-6, 6),
                 st.integers(-6, 6), st.integers(-6, 6))


def test_restrict_examples():
    assert restrict_rep(RHO_K, "L") == 2 * RHO_C2
    assert restrict_rep(ALPHA, "R") == RepC2(1, 0)
    assert restrict_rep(RepK(), "D") == RepC2()


def test_fixed_examples():
    for h in ("L", "D", "R"):
        assert fixed_rep(RHO_K, h) == RHO_C2
    assert fixed_rep(GAMMA, "L") == RepC2(0, 1)
    assert fixed_rep(ALPHA, "L") == RepC2()


def test_kernel_pairing_restriction():
    # the cell structures pair each character with its kernel subgroup
    assert restrict_rep_by_kernels(BETA, "L") == RepC2(1, 0)
    assert restrict_rep_by_kernels(GAMMA, "D") == RepC2(1, 0)
    assert restrict_rep_by_kernels(ALPHA, "R") == RepC2(1, 0)
    assert restrict_rep_by_kernels(ALPHA, "L") == RepC2(0, 1)
    # both conventions agree on anything symmetric in the three characters
    for h in ("L", "D", "R"):
        assert restrict_rep_by_kernels(RHO_K, h) == restrict_rep(RHO_K, h)


def test_parse_examples():
    assert parse_rep("1,1,1,1") == RHO_K
    assert parse_rep("0,2,0,-3") == RepK(0, 2, 0, -3)
    assert parse_rep("2+a-3b") == RepK(2, 1, -3, 0)
    assert parse_rep("-g") == RepK(0, 0, 0, -1)
    with pytest.raises(ValueError):
        parse_rep("x")
    with pytest.raises(ValueError):
        parse_rep("1,2,3")


@given(reps, reps, st.sampled_from(["L", "D", "R"]))
def test_additivity(v, w, h):
    assert restrict_rep(v + w, h) == restrict_rep(v, h) + restrict_rep(w, h)
    assert fixed_rep(v + w, h) == fixed_rep(v, h) + fixed_rep(w, h)


@given(reps, st.sampled_from(["L", "D", "R"]))
def test_restriction_preserves_dimension(v, h):
    assert restrict_rep(v, h).dim == v.dim
    assert restrict_rep_by_kernels(v, h).dim == v.dim
