"""Torsion of the cat-map mapping torus around the unit circle, both routes.

    python scripts/torsion_scan.py [--points 16]
"""

import argparse
import cmath
import math

from floerzeta import GradedHomologyAction, UnitHolonomy, torsion_direct, torsion_via_zeta


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=16)
    ap.add_argument("--matrix", default="2,1,1,1", help="row-major 2x2 torus matrix")
    args = ap.parse_args()
    a, b, c, d = (int(x) for x in args.matrix.split(","))
    action = GradedHomologyAction.torus(((a, b), (c, d)))

    worst = 0.0
    print(f"{'theta/2pi':>10} {'direct':>20} {'via zeta':>20} {'rel gap':>10}")
    for k in range(args.points):
        frac = (k + 0.5) / args.points
        z = cmath.exp(2j * math.pi * frac)
        lam = UnitHolonomy(z.real, z.imag)
        t1, t2 = torsion_direct(action, lam), torsion_via_zeta(action, lam)
        gap = abs(t1 - t2) / t2
        worst = max(worst, gap)
        print(f"{frac:10.4f} {t1:20.15f} {t2:20.15f} {gap:10.1e}")
    print(f"max relative gap: {worst:.2e}")


if __name__ == "__main__":
    main()
