#!/usr/bin/env python3
"""Scan directions against the discriminant of a plane-curve projection
and report which lines are generic.

Usage: python3 scripts/run_discriminant_lines.py [--count N] [--seed N]
"""

import argparse
import random
from fractions import Fraction

from icis.germs import (
    LineDirection,
    discriminant,
    is_generic_line,
    line_intersection_number,
    multiplicity,
)
from icis.poly import Polynomial, format_poly

R = ("x", "y")
x = Polynomial.variable(R, "x")
y = Polynomial.variable(R, "y")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=12)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    delta = discriminant([x, y**3 + x * y])
    m = multiplicity(delta)
    print(f"discriminant: {format_poly(delta)}")
    print(f"multiplicity: {m}")
    print()

    rng = random.Random(args.seed)
    directions = [(Fraction(0), Fraction(1)), (Fraction(1), Fraction(0))]
    while len(directions) < args.count:
        v = (Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9)))
        if any(c != 0 for c in v) and v not in directions:
            directions.append(v)

    for v in directions:
        d = LineDirection(v)
        i = line_intersection_number(delta, d)
        tag = "generic" if is_generic_line(delta, d) else "tangent-cone"
        print(f"direction ({v[0]}, {v[1]}): intersection number {i} ({tag})")


if __name__ == "__main__":
    main()
