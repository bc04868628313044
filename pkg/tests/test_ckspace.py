import pytest

from ckquant.ckspace import (CARROLL_ROLES, STANDARD_ROLES, CKSpaceSpec, NoUnitCoordinate,
                             beltrami_generators, build_invariant, build_relations,
                             contract_relations, is_invariant_central, limit_unit, position_order)
from ckquant.kinematics import FAMILIES, family_sigmas, family_substitution, kinematics_spec, rule_set
from ckquant.multiplier import NAMED_SIGMAS, Permutation, minimal_multiplier
from ckquant.ncalgebra import INV, NCPoly, is_central, normal_order
from ckquant.scalars import HyperScalar, IndefiniteLimit, hyper_normalize
from oracles import invariant_oracle

CATALOG = [(f, s) for f in FAMILIES for s in family_sigmas(f)]


def test_position_order():
    assert position_order(5) == [3, 2, 4, 1, 5]
    assert position_order(4) == [2, 3, 1, 4]


@pytest.mark.parametrize("name", sorted(NAMED_SIGMAS))
def test_invariant_matches_oracle(name):
    sigma = NAMED_SIGMAS[name]
    assert build_invariant(CKSpaceSpec(sigma)).poly == invariant_oracle(sigma.images)


@pytest.mark.parametrize("name", sorted(NAMED_SIGMAS))
def test_invariant_is_central(name):
    spec = CKSpaceSpec(NAMED_SIGMAS[name])
    R = build_relations(spec)
    assert is_invariant_central(spec, R)
    # an extra central scalar prefactor changes nothing
    scaled = build_invariant(spec).poly * hyper_normalize("cosh(Jv)**3 + j1*v")
    assert is_central(scaled, R)


def test_invariant_central_for_negative_epsilon():
    spec = CKSpaceSpec(NAMED_SIGMAS["sigma-I"], epsilon_sign=-1)
    assert is_invariant_central(spec)


def test_even_n_relations_are_central():
    spec = CKSpaceSpec(Permutation((2, 1, 3, 4)))
    assert is_invariant_central(spec)


@pytest.mark.parametrize("family,name", CATALOG)
def test_full_multiplier_contracts(family, name):
    R = rule_set(kinematics_spec(family, name))
    assert R.rules
    if R.sphere is not None:
        assert is_central(R.sphere[0], R)


def test_minimal_multiplier_is_indefinite_for_sigma_tilde():
    sigma = NAMED_SIGMAS["sigma-tilde"]
    R = build_relations(CKSpaceSpec(sigma, minimal_multiplier(sigma)))
    with pytest.raises(IndefiniteLimit) as err:
        contract_relations(R, family_substitution("Galilei").as_dict())
    assert any(d < 0 for d in err.value.degree.values())


@pytest.mark.parametrize("family", FAMILIES)
def test_minimal_multiplier_fine_for_identity(family):
    sigma = NAMED_SIGMAS["identity"]
    R = build_relations(CKSpaceSpec(sigma, minimal_multiplier(sigma)))
    contract_relations(R, family_substitution(family).as_dict())


def test_minimal_multiplier_fails_for_sigma_hat_at_zero_curvature():
    sigma = NAMED_SIGMAS["sigma-hat"]
    R = build_relations(CKSpaceSpec(sigma, minimal_multiplier(sigma)))
    with pytest.raises(IndefiniteLimit):
        contract_relations(R, family_substitution("Minkowski").as_dict())


def test_unit_limit_matches_direct_contraction():
    newton = rule_set(kinematics_spec("Newton", "sigma-I"))
    galilei = rule_set(kinematics_spec("Galilei", "sigma-I"))
    assert limit_unit(newton, "T").rules == galilei.rules


def test_beltrami_generators():
    gens = beltrami_generators(NAMED_SIGMAS["sigma-hat"])
    assert gens["t"] == NCPoly.word("x2", INV)
    assert gens["th"] == NCPoly.word(INV, "x2")
    carroll = beltrami_generators(NAMED_SIGMAS["sigma-pp"], CARROLL_ROLES)
    assert carroll["t"] == NCPoly.word("x5", INV)
    assert carroll["r1"] == NCPoly.word("x2", INV)
    with pytest.raises(NoUnitCoordinate):
        beltrami_generators(NAMED_SIGMAS["sigma-hat"], {"t": 1})


def test_right_and_left_coincide_when_x1_is_central():
    R = rule_set(kinematics_spec("Galilei", "sigma-check"))
    for a in STANDARD_ROLES.values():
        x = NCPoly.word(f"x{a}", "x1") - NCPoly.word("x1", f"x{a}")
        assert normal_order(x, R).is_zero()


def test_spec_validation():
    with pytest.raises(ValueError):
        CKSpaceSpec(NAMED_SIGMAS["sigma-hat"], epsilon_sign=2)
    assert CKSpaceSpec(NAMED_SIGMAS["sigma-hat"]).N == 5
    assert HyperScalar.const(1)
