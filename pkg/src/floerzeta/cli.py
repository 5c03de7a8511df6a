"""Batch front end: JSON problem in, JSON report out.

Exit status is 0 when every verification passes, 2 when some verification
fails (the report is still written) and 1 on input or domain errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Any

import jsonschema

from . import __version__
from .asymptotics import GrowthEstimate, asymptotic_invariant, spectral_radius, torus_entropy
from .exact_algebra import (
    DEFAULT_ORDER,
    FormalPowerSeries,
    RationalFunction,
    expand_rational,
    format_rational,
    identity,
    reversed_char_poly,
    trace,
    zeta_series_from_counts,
)
from .homology import GradedHomologyAction, euler_symplectic_zeta, lefschetz_numbers, lefschetz_zeta
from .periodic import (
    CyclotomicProduct,
    NielsenData,
    divisors,
    expand_counts,
    expand_cyclotomic,
    is_prime,
    p_coefficients_moebius,
    p_coefficients_recursive,
    periodic_zeta,
    prime_period_form,
)
from .subshift import (
    ENUMERATION_MAX_ALPHABET,
    SignedSubshiftFamily,
    brute_force_count,
    subshift_zeta,
    trace_count,
    trace_formula_sequence,
)
from .torsion import UnitHolonomy, torsion_direct, torsion_via_zeta
from .torus import TorusMap, eigenvalues_float, lattice_fixed_point_count, nielsen_number, sign_data, torus_zeta

DEFAULT_HORIZON = 60
SIGN_RULE_MAX_N = 20
LATTICE_ORACLE_MAX_N = 6
ENUMERATION_CHECK_MAX_N = 10
TORSION_RTOL = 1e-12
IVANOV_TOL = 1e-3

CONJECTURE_NOTE = (
    "F_g(z) = prod det(1 - A_i z)^(-eps_i) as the Floer zeta function of a pseudo-Anosov "
    "class is conjectural; only the trace/zeta identity is verified"
)


class ProblemError(ValueError):
    pass


def load_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath("problem.schema.json").read_text())


@dataclass(frozen=True)
class ProblemInput:
    kind: str
    payload: dict = field(hash=False)
    order: int = DEFAULT_ORDER
    horizon: int = DEFAULT_HORIZON
    lambdas: tuple[UnitHolonomy, ...] = ()

    def echo(self) -> dict:
        out: dict[str, Any] = {"kind": self.kind, "order": self.order, "horizon": self.horizon}
        out.update(self.payload)
        if self.lambdas:
            out["lambda"] = [{"re": lam.re, "im": lam.im} for lam in self.lambdas]
        return out


def parse_problem(doc: Any, order: int | None = None, horizon: int | None = None) -> ProblemInput:
    """Validate a decoded JSON document; ``order``/``horizon`` override the file."""
    try:
        jsonschema.validate(doc, load_schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ProblemError(f"schema violation at {where}: {exc.message}") from None
    kind = doc["kind"]
    if kind == "homology":
        payload = {"matrices": doc["matrices"], "surface": bool(doc.get("surface", False))}
    elif kind == "torus":
        payload = {"matrix": doc["matrix"]}
    elif kind == "periodic":
        counts = {str(int(k)): v for k, v in doc["counts"].items()}
        payload = {"period": doc["period"], "counts": dict(sorted(counts.items(), key=lambda kv: int(kv[0])))}
    else:
        payload = {"pieces": [{"matrix": p["matrix"], "sign": p["sign"]} for p in doc["pieces"]]}
    order = doc.get("order", DEFAULT_ORDER) if order is None else order
    horizon = doc.get("horizon", DEFAULT_HORIZON) if horizon is None else horizon
    if not 1 <= order <= 512:
        raise ProblemError(f"order must lie in [1, 512], got {order}")
    if not 4 <= horizon <= 10000:
        raise ProblemError(f"horizon must lie in [4, 10000], got {horizon}")
    lambdas = tuple(UnitHolonomy(float(x["re"]), float(x["im"])) for x in doc.get("lambda", ()))
    return ProblemInput(kind, payload, order, horizon, lambdas)


# -- serialization helpers ---------------------------------------------------


def _q(x: Fraction) -> str:
    return format_rational(x)


def _poly(p) -> list[str]:
    return [_q(c) for c in p.coefficients]


def _rational_function(r: RationalFunction) -> dict:
    return {"numerator": _poly(r.numerator), "denominator": _poly(r.denominator)}


def _series(s: FormalPowerSeries) -> list[str]:
    return [_q(c) for c in s.coefficients]


def _cyclotomic(c: CyclotomicProduct) -> list[dict]:
    return [{"d": d, "exponent": _q(e)} for d, e in c.factors]


def _growth(g: GrowthEstimate) -> dict:
    lo, hi = g.window
    return {"value": g.value, "horizon": g.horizon, "window": [lo, hi], "exact": g.exact}


def _series_deviation(a: FormalPowerSeries, b: FormalPowerSeries) -> Fraction:
    return max((abs(x - y) for x, y in zip(a.coefficients, b.coefficients)), default=Fraction(0))


def _exact_check(name: str, a: FormalPowerSeries, b: FormalPowerSeries) -> dict:
    dev = _series_deviation(a, b)
    return _verdict(name, dev == 0, _q(dev))


def _verdict(name: str, passed: bool, deviation: Any = "0", detail: str | None = None) -> dict:
    out = {"identity": name, "verdict": "pass" if passed else "fail", "max_deviation": deviation}
    if detail:
        out["detail"] = detail
    return out


def _skipped(name: str, detail: str) -> dict:
    return {"identity": name, "verdict": "skipped", "max_deviation": None, "detail": detail}


# -- per-kind runners ---------------------------------------------------------


def _char_poly_checks(action: GradedHomologyAction) -> dict:
    ok = True
    for m in action.matrices:
        p = reversed_char_poly(m)
        ok &= p[0] == 1 and p[1] == -trace(m) and p.degree <= len(m)
    return _verdict("reversed_char_poly_constant_and_trace", ok, "0" if ok else "nonzero")


def _homology_block(action: GradedHomologyAction, order: int, lambdas) -> tuple[dict, list[dict]]:
    L = lefschetz_numbers(action, order)
    zeta = lefschetz_zeta(action)
    expansion = expand_rational(zeta, order)
    results = {
        "lefschetz_numbers": L,
        "lefschetz_zeta": _rational_function(zeta),
        "lefschetz_zeta_series": _series(expansion),
    }
    checks = [
        _char_poly_checks(action),
        _exact_check("lefschetz_zeta_equals_exp_lefschetz_series", expansion, zeta_series_from_counts(L)),
        _verdict("euler_zeta_equals_lefschetz_zeta", euler_symplectic_zeta(action) == zeta),
    ]
    if all(m == identity(len(m)) for m in action.matrices):
        euler = sum((-1) ** k * len(m) for k, m in enumerate(action.matrices))
        checks.append(_verdict("identity_lefschetz_equals_euler_characteristic", L[0] == euler, str(abs(L[0] - euler))))
    if lambdas:
        rows = []
        worst = 0.0
        sym = 0.0
        positive = True
        for lam in lambdas:
            direct = torsion_direct(action, lam)
            via = torsion_via_zeta(action, lam)
            conj = torsion_direct(action, lam.conjugate())
            rows.append({"lambda": {"re": lam.re, "im": lam.im}, "direct": direct, "via_zeta": via})
            worst = max(worst, abs(direct - via) / abs(via))
            sym = max(sym, abs(direct - conj) / abs(direct))
            positive &= direct > 0 and via > 0
        results["torsion"] = rows
        checks += [
            _verdict("torsion_direct_equals_inverse_zeta_modulus", worst <= TORSION_RTOL, worst),
            _verdict("torsion_conjugation_symmetry", sym <= TORSION_RTOL, sym),
            _verdict("torsion_positive", positive, 0.0),
        ]
    return results, checks


def _run_homology(p: ProblemInput) -> tuple[dict, list[dict], list[str]]:
    action = GradedHomologyAction(p.payload["matrices"], surface=p.payload["surface"])
    results, checks = _homology_block(action, p.order, p.lambdas)
    return results, checks, []


def _run_torus(p: ProblemInput) -> tuple[dict, list[dict], list[str]]:
    t = TorusMap(p.payload["matrix"])
    t.require_hyperbolic()
    K = p.order
    sd = sign_data(t)
    N = [nielsen_number(t, n) for n in range(1, K + 1)]
    zeta = torus_zeta(t)
    expansion = expand_rational(zeta, K)
    homology_results, checks = _homology_block(t.homology_action(), K, p.lambdas)
    L = homology_results["lefschetz_numbers"]
    growth = asymptotic_invariant(t, p.horizon)
    h = torus_entropy(t)
    ev = eigenvalues_float(t)

    checks.append(_exact_check("nielsen_zeta_equals_exp_nielsen_series", expansion, zeta_series_from_counts(N)))
    n_sign = min(K, SIGN_RULE_MAX_N)
    bad = [n for n in range(1, n_sign + 1) if N[n - 1] != (-1) ** (sd.r + sd.p * n) * L[n - 1]]
    checks.append(
        _verdict("nielsen_equals_signed_lefschetz", not bad, str(len(bad)), f"n = 1..{n_sign}")
    )
    checks.append(_verdict("nielsen_positive", all(x > 0 for x in N), str(sum(x <= 0 for x in N))))
    oracle_ns, skipped = [], []
    mismatch = 0
    for n in range(1, min(K, LATTICE_ORACLE_MAX_N) + 1):
        try:
            c = lattice_fixed_point_count(t, n)
        except OverflowError:
            skipped.append(n)
            continue
        oracle_ns.append(n)
        mismatch = max(mismatch, abs(c - N[n - 1]))
    detail = f"checked n = {oracle_ns}" + (f"; box too large for n = {skipped}" if skipped else "")
    checks.append(_verdict("nielsen_equals_lattice_fixed_point_count", mismatch == 0, str(mismatch), detail))
    log_f = math.log(growth.value)
    checks.append(_verdict("ivanov_entropy_bounds_log_growth", h >= log_f - IVANOV_TOL, max(0.0, log_f - h)))
    checks.append(_verdict("entropy_equals_log_growth", abs(h - log_f) < IVANOV_TOL, abs(h - log_f)))

    results = {
        "trace": t.trace,
        "hyperbolic": t.hyperbolic,
        "eigenvalues": list(ev),
        "sign_data": {"r": sd.r, "p": sd.p, "sigma": sd.sigma},
        "nielsen_numbers": N,
        "floer_dimensions": N,
        "nielsen_zeta": _rational_function(zeta),
        "nielsen_zeta_series": _series(expansion),
        "asymptotic_invariant": _growth(growth),
        "entropy": h,
        **homology_results,
    }
    return results, checks, []


def _run_periodic(p: ProblemInput) -> tuple[dict, list[dict], list[str]]:
    data = NielsenData(p.payload["period"], {int(k): v for k, v in p.payload["counts"].items()})
    K = p.order
    P_rec = p_coefficients_recursive(data)
    P_mob = p_coefficients_moebius(data)
    prod = periodic_zeta(data)
    seq = expand_counts(data, K)
    expansion = expand_cyclotomic(prod, K)
    growth = asymptotic_invariant(data, p.horizon)
    counts = data.as_dict()

    checks = [
        _verdict(
            "moebius_recursion_equals_explicit_sum",
            P_rec == P_mob,
            str(max(abs(P_rec[d] - P_mob[d]) for d in P_rec)),
        ),
        _verdict(
            "divisor_sum_of_P_recovers_counts",
            all(sum(P_rec[e] for e in divisors(d)) == counts[d] for d in counts),
            str(max(abs(sum(P_rec[e] for e in divisors(d)) - counts[d]) for d in counts)),
        ),
        _exact_check("cyclotomic_product_equals_exp_count_series", expansion, zeta_series_from_counts(seq)),
        _verdict("periodic_growth_is_one", growth.value == 1.0, abs(growth.value - 1.0)),
    ]
    if is_prime(data.period):
        checks.append(_verdict("prime_period_corollary_form", prime_period_form(data) == prod))

    results = {
        "P": {str(d): v for d, v in P_rec.items()},
        "factors": _cyclotomic(prod),
        "counts_sequence": seq,
        "zeta_series": _series(expansion),
        "asymptotic_invariant": _growth(growth),
        "tail_estimate": max(1.0, math.exp(max(growth.per_n_logs))),
    }
    return results, checks, []


def _run_subshift(p: ProblemInput) -> tuple[dict, list[dict], list[str]]:
    fam = SignedSubshiftFamily((piece["matrix"], piece["sign"]) for piece in p.payload["pieces"])
    K = p.order
    seq = trace_formula_sequence(fam, K)
    zeta = subshift_zeta(fam)
    expansion = expand_rational(zeta, K)
    growth = asymptotic_invariant(fam, p.horizon)

    checks = []
    mismatch, checked, skipped = 0, 0, 0
    n_max = min(K, ENUMERATION_CHECK_MAX_N)
    for s, _ in fam.pieces:
        if s.alphabet_size > ENUMERATION_MAX_ALPHABET:
            skipped += 1
            continue
        checked += 1
        for n in range(1, n_max + 1):
            mismatch = max(mismatch, abs(trace_count(s, n) - brute_force_count(s, n)))
    name = "trace_equals_enumerated_periodic_points"
    if checked:
        detail = f"n = 1..{n_max}, {checked} piece(s)" + (f", {skipped} over alphabet cap" if skipped else "")
        checks.append(_verdict(name, mismatch == 0, str(mismatch), detail))
    else:
        checks.append(_skipped(name, f"every alphabet exceeds {ENUMERATION_MAX_ALPHABET}"))
    checks.append(_exact_check("subshift_zeta_equals_exp_trace_series", expansion, zeta_series_from_counts(seq)))

    results = {
        "trace_formula": seq,
        "zeta": _rational_function(zeta),
        "zeta_series": _series(expansion),
        "asymptotic_invariant": _growth(growth),
        "spectral_radii": [spectral_radius(s.transition) for s, _ in fam.pieces],
    }
    return results, checks, [CONJECTURE_NOTE]


_RUNNERS = {
    "homology": _run_homology,
    "torus": _run_torus,
    "periodic": _run_periodic,
    "subshift": _run_subshift,
}


def run(problem: ProblemInput) -> dict:
    results, checks, conjectures = _RUNNERS[problem.kind](problem)
    return {
        "version": __version__,
        "input": problem.echo(),
        "results": results,
        "verification": checks,
        "all_passed": all(c["verdict"] != "fail" for c in checks),
        "conjectural": conjectures,
    }


def render(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="zeta", description=__doc__.splitlines()[0])
    parser.add_argument("--input", help="problem JSON file (default: stdin)")
    parser.add_argument("--output", help="report JSON file (default: stdout)")
    parser.add_argument("--order", type=int, help="series truncation order (default 32)")
    parser.add_argument("--horizon", type=int, help="growth-rate horizon (default 60)")
    args = parser.parse_args(argv)

    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                doc = json.load(fh)
        else:
            doc = json.load(sys.stdin)
        problem = parse_problem(doc, order=args.order, horizon=args.horizon)
        report = run(problem)
    except (OSError, json.JSONDecodeError, ValueError, ArithmeticError) as exc:
        print(f"zeta: error: {exc}", file=sys.stderr)
        return 1

    text = render(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["all_passed"] else 2


if __name__ == "__main__":
    sys.exit(main())
