import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ckquant.multiplier import (NAMED_SIGMAS, IndexOutOfRange, InvalidPermutation, Permutation,
                                branch_index, compensative, full_multiplier, interval,
                                minimal_multiplier, resolve_sigma, sigma_name)
from ckquant.scalars import ParamMonomial
from oracles import MINIMAL_J, PUBLISHED_J, PUBLISHED_J_CARROLL, interval_oracle


@settings(max_examples=200)
@given(st.integers(1, 9), st.integers(1, 9))
def test_interval_matches_oracle(a, b):
    assert interval(a, b).as_dict() == interval_oracle(a, b)


def test_interval_examples():
    assert str(interval(1, 5)) == "j1 j2 j3 j4"
    assert str(interval(3, 1)) == "j1 j2"
    assert interval(2, 2).is_one()
    with pytest.raises(IndexOutOfRange):
        interval(0, 3)
    with pytest.raises(IndexOutOfRange):
        interval(1, 7, N=5)


@pytest.mark.parametrize("name", sorted(PUBLISHED_J))
def test_standard_multipliers(name):
    J = full_multiplier(NAMED_SIGMAS[name]).reduce([3, 4])
    assert J.as_dict() == PUBLISHED_J[name]


@pytest.mark.parametrize("name", sorted(PUBLISHED_J_CARROLL))
def test_carroll_multipliers(name):
    J = full_multiplier(NAMED_SIGMAS[name]).reduce([2, 3])
    assert J.as_dict() == PUBLISHED_J_CARROLL[name]


@pytest.mark.parametrize("images", sorted(MINIMAL_J))
def test_minimal_multiplier(images):
    assert minimal_multiplier(Permutation(images)).as_dict() == MINIMAL_J[images]


def test_minimal_is_not_enough_for_sigma_tilde():
    s = NAMED_SIGMAS["sigma-tilde"]
    assert minimal_multiplier(s) != full_multiplier(s)
    # i_2 = 1 lies below the pair (3, 4): (1,3)^2 (3,4)
    assert compensative(s, 2).as_dict() == {1: 2, 2: 2, 3: 1}


def test_branch_index_includes_center():
    # sigma-hat: the central image 3 is the only deeper candidate for k=2
    assert branch_index(NAMED_SIGMAS["sigma-hat"], 2) == 3
    assert branch_index(NAMED_SIGMAS["sigma-hat"], 1) == 1
    with pytest.raises(IndexOutOfRange):
        branch_index(NAMED_SIGMAS["sigma-hat"], 3)


@pytest.mark.parametrize("images", list(itertools.permutations(range(1, 6))))
def test_full_contains_minimal(images):
    s = Permutation(images)
    J = full_multiplier(s)
    assert minimal_multiplier(s).divides(J)
    assert all(e in (1, 2) for _, e in J.exps)


def test_even_n_supported():
    s = Permutation((2, 1, 3, 4))
    assert minimal_multiplier(s).divides(full_multiplier(s))


def test_sigma_parsing():
    assert resolve_sigma("2,1,3,4,5") == NAMED_SIGMAS["sigma-hat"]
    assert resolve_sigma("(3, 1, 5, 2, 4)") == NAMED_SIGMAS["sigma-I"]
    assert sigma_name(Permutation((2, 3, 1, 5, 4))) == "sigma-ppp"
    for bad in ("1,2,2,4,5", "1,2,x", "0,1,2"):
        with pytest.raises(InvalidPermutation):
            resolve_sigma(bad)
