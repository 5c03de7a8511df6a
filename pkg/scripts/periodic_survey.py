"""Radical-of-rational zeta functions for random periodic Nielsen data.

    python scripts/periodic_survey.py [--period 12] [--samples 5] [--seed 0]
"""

import argparse
import random

from floerzeta import NielsenData, expand_counts, expand_cyclotomic, p_coefficients, periodic_zeta
from floerzeta.exact_algebra import format_rational, zeta_series_from_counts
from floerzeta.periodic import divisors


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--period", type=int, default=12)
    ap.add_argument("--samples", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--order", type=int, default=24)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    for _ in range(args.samples):
        data = NielsenData(args.period, {d: rng.randint(0, 20) for d in divisors(args.period)})
        prod = periodic_zeta(data)
        ok = expand_cyclotomic(prod, args.order) == zeta_series_from_counts(expand_counts(data, args.order))
        factors = " ".join(f"(1-z^{d})^({format_rational(e)})" for d, e in prod.factors) or "1"
        print(f"N={dict(data.counts)}")
        print(f"  P={p_coefficients(data)}")
        print(f"  F(z) = {factors}   series identity to order {args.order}: {'ok' if ok else 'FAILED'}")


if __name__ == "__main__":
    main()
