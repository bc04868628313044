"""Why the deformation multiplier has to be non-minimal.

For each named permutation we print the full multiplier J and the minimal one J0,
then contract sigma-tilde to Galilei kinematics with both. J0 leaves a negative
power of a contracted parameter in some exchange relation; J does not.
"""

from ckquant.ckspace import CKSpaceSpec, build_relations, contract_relations
from ckquant.kinematics import family_substitution
from ckquant.multiplier import NAMED_SIGMAS, full_multiplier, minimal_multiplier
from ckquant.scalars import IndefiniteLimit
from ckquant.serialize import rule_set_to_text


def main():
    print(f"{'sigma':<12} {'images':<16} {'full J':<22} minimal J0")
    for name, sigma in sorted(NAMED_SIGMAS.items()):
        print(f"{name:<12} {str(sigma.images):<16} {str(full_multiplier(sigma)):<22} "
              f"{minimal_multiplier(sigma)}")

    sigma = NAMED_SIGMAS["sigma-tilde"]
    galilei = family_substitution("Galilei").as_dict()
    print("\nContracting sigma-tilde to Galilei kinematics")

    R0 = build_relations(CKSpaceSpec(sigma, minimal_multiplier(sigma)))
    try:
        contract_relations(R0, galilei)
    except IndefiniteLimit as exc:
        print(f"  with J0: {exc}")

    R = contract_relations(build_relations(CKSpaceSpec(sigma, full_multiplier(sigma))), galilei)
    print("  with J: every relation has a finite limit")
    print("  " + rule_set_to_text(R).replace("\n", "\n  "))


if __name__ == "__main__":
    main()
