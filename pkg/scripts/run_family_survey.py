#!/usr/bin/env python3
"""Survey the deformation-family suite and print one table per analysis.

Usage: python3 scripts/run_family_survey.py [--samples a/b,c/d]
"""

import argparse
import sys
import time
from fractions import Fraction

from icis.families import (
    DeformationFamily,
    critical_locus_report,
    zero_fiber_forces_origin_check,
    greuel_conditions,
    splitting_check,
    radical_implies_axis_check,
)
from icis.poly import Polynomial

RING = ("t", "x", "y")
t, x, y = (Polynomial.variable(RING, n) for n in RING)

GRID = [(2, 3), (2, 5), (3, 4), (3, 5)]

SPACE_FAMILIES = [
    ("quintic mu-constant", (x**5 + y**5 + t * x**3 * y**2,)),
    ("tacnode splitting", (y**2 - (x**2 - t**2) ** 2,)),
    ("cusp smoothing", (x**3 - y**2 + t * x,)),
    ("trivial cusp", (x**2 - y**3,)),
]


def print_table(header, rows):
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    fmt = "  ".join("{:<%d}" % w for w in widths)
    print(fmt.format(*header))
    print(fmt.format(*("-" * w for w in widths)))
    for r in rows:
        print(fmt.format(*map(str, r)))
    print()


def grid_survey(samples):
    rows = []
    for p, q in GRID:
        fam = DeformationFamily.function_deformation(
            RING, "t", [x**p - y**q], x + t * y
        )
        rep = critical_locus_report(fam, samples[0])
        g = greuel_conditions(fam, samples=samples)
        rows.append(
            (
                f"({p},{q})",
                g.mu_origin_base,
                rep.local_mu_origin,
                rep.total_colength,
                rep.off_origin_budget,
                rep.distinct_points,
                g.cond1_mu_constant,
                radical_implies_axis_check(fam)[0],
                zero_fiber_forces_origin_check(fam, samples=samples)[0],
            )
        )
    print_table(
        (
            "(p,q)",
            "mu(f)",
            "mu(f_t,0)",
            "total",
            "off-origin",
            "points",
            "mu-const",
            "radical=>axis",
            "zero-fiber",
        ),
        rows,
    )


def splitting_survey(samples):
    rows = []
    for name, Phi in SPACE_FAMILIES:
        fam = DeformationFamily.space_deformation(RING, "t", list(Phi))
        rep = splitting_check(fam, samples=samples)
        per_sample = "; ".join(
            f"t={s.t0}: count={s.singular_count} total={s.total_fiber_mu}"
            for s in rep.samples
        )
        rows.append((name, rep.base_fiber_mu, per_sample, rep.verdict))
    print_table(("family", "mu(X,0)", "samples", "verdict"), rows)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", default="1,1/2", help="comma-separated rational t values")
    args = parser.parse_args(argv)
    samples = tuple(Fraction(s) for s in args.samples.split(","))

    start = time.monotonic()
    print("== coordinate function x + t*y on the curve x^p = y^q ==\n")
    grid_survey(samples)
    print("== one-equation space deformations ==\n")
    splitting_survey(samples)
    print(f"elapsed: {time.monotonic() - start:.2f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
