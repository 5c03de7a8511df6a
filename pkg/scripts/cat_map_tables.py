"""Nielsen numbers, zeta functions and growth for a few hyperbolic torus maps.

    python scripts/cat_map_tables.py [--order 12] [--horizon 60]
"""

import argparse
import math

from floerzeta import TorusMap, expand_rational, nielsen_number, sign_data, torus_entropy, torus_zeta
from floerzeta.asymptotics import asymptotic_invariant
from floerzeta.exact_algebra import format_rational

MAPS = {
    "cat": ((2, 1), (1, 1)),
    "-cat": ((-2, -1), (-1, -1)),
    "trace4": ((3, 1), (2, 1)),
    "trace6": ((5, 2), (2, 1)),
    "trace-3": ((-3, 1), (-1, 0)),
}


def fmt_poly(p):
    return "[" + ", ".join(format_rational(c) for c in p.coefficients) + "]"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=12)
    ap.add_argument("--horizon", type=int, default=60)
    args = ap.parse_args()

    for name, m in MAPS.items():
        t = TorusMap(m)
        sd = sign_data(t)
        z = torus_zeta(t)
        N = [nielsen_number(t, n) for n in range(1, args.order + 1)]
        f_inf = asymptotic_invariant(t, args.horizon).value
        h = torus_entropy(t)
        print(f"{name:8s} trace={t.trace:3d} r={sd.r} p={sd.p} sigma={sd.sigma:+d}")
        print(f"  N(phi^n)      {N}")
        print(f"  F(z)          {fmt_poly(z.numerator)} / {fmt_poly(z.denominator)}")
        print(f"  series        {[format_rational(c) for c in expand_rational(z, args.order).coefficients]}")
        print(f"  F_inf={f_inf:.10f}  exp(h)={math.exp(h):.10f}  gap={abs(math.log(f_inf) - h):.2e}")


if __name__ == "__main__":
    main()
