"""Noncommutative space-time tables and how they fit together.

Derives a few commutator tables, checks that the two routes to Galilei
kinematics agree, and groups each family into isomorphism classes.
"""

from ckquant.kinematics import classify, derive_table, family_sigmas, kinematics_spec, limits_commute
from ckquant.serialize import table_to_text


def show(family, sigma):
    print()
    print(table_to_text(derive_table(kinematics_spec(family, sigma))))


def main():
    for family, sigma in [("deSitter", "sigma-I"), ("Newton", "sigma-I"),
                          ("Minkowski", "sigma-III"), ("Galilei", "sigma-hat"),
                          ("Carroll", "sigma-hat")]:
        show(family, sigma)

    print("\nT -> oo then c -> oo versus c -> oo then T -> oo:")
    for sigma in family_sigmas("Minkowski"):
        print(f"  {sigma:<12} {'same' if limits_commute(sigma) else 'DIFFERENT'}")

    print("\nIsomorphism classes (spatial relabelings, time fixed):")
    for family in ("deSitter", "Minkowski", "Newton", "Galilei", "Carroll", "Carroll0"):
        c = classify(family)
        groups = "  ".join("{" + ", ".join(cls) + "}" for cls in c.classes)
        print(f"  {family:<10} {c.count}: {groups}")


if __name__ == "__main__":
    main()
