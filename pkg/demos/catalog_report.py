"""Check every published commutator table against the derived relations.

Prints the per-entry verdicts that disagree, the documented emendations and a
summary. Pass ``--latex out.tex`` to also write a standalone LaTeX report.
"""

import argparse

from ckquant.catalog import verify
from ckquant.serialize import report_to_latex, report_to_text, standalone


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", default="all")
    ap.add_argument("--latex", help="write a standalone LaTeX report here")
    args = ap.parse_args()

    report = verify(args.family)
    for r in report.results:
        if r.status != "pass":
            print(f"{r.status:<12} {r.family:<9} {r.sigma:<10} {r.text}")
            if r.note:
                print(f"{'':<12} note: {r.note}")
            if r.residual:
                print(f"{'':<12} residual: {r.residual}")
    print(report_to_text(report).splitlines()[-1])

    if args.latex:
        with open(args.latex, "w", encoding="utf-8") as fh:
            fh.write(standalone(report_to_latex(report)))
        print(f"wrote {args.latex}")


if __name__ == "__main__":
    main()
