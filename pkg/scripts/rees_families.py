#!/usr/bin/env python3
"""Print the generator families and kernel bidegree histograms for line arrangements."""

import argparse

from linprod import catalog
from linprod.rees import (ReesContext, bidegree_histogram, families, fiber_ideal, mu_check,
                          rees_ideal)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=["generic4", "near_pencil4", "generic5"])
    ap.add_argument("--show", action="store_true", help="list every family element")
    args = ap.parse_args()
    for name in args.names:
        ctx = ReesContext(catalog.get(name))
        fams = families(ctx)
        mu = mu_check(ctx.arr)
        print(f"== {name}: s={ctx.s}, mu observed {mu['observed']} / formula {mu['formula']}")
        print("   family sizes:", {t: len(f) for t, f in fams.items()})
        rees = rees_ideal(ctx).minimal_gens()
        fib = [ctx.from_fiber_ring(g) for g in fiber_ideal(ctx).minimal_gens()]
        print("   presentation ideal bidegrees:", bidegree_histogram(rees))
        print("   fiber ideal bidegrees:      ", bidegree_histogram(fib))
        if args.show:
            for tag, fam in fams.items():
                for e in fam.elements:
                    print(f"   ({tag}) {e.name}: {e.poly}")


if __name__ == "__main__":
    main()
