"""Command-line front end.

    shiftsg analyze --gens 40,42,43,45
    shiftsg family --shifts 2,3,7 --n 63 --lambda 0..5 --report residue --csv
    shiftsg verify --shifts 2,6,7 --n 88 --lambda 1 --show-wrong-bijection
    shiftsg verify --random 7 20 --rk-max 10

Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings

from . import core, family, oracle
from .errors import SemigroupError, ThresholdWarning

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
REPORTS = ("pf", "frobenius", "ng", "residue", "rtype", "bounds")


class UsageError(Exception):
    pass


def int_list(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def lambda_range(text: str) -> tuple[int, int]:
    """``A..B`` or a single ``B`` (meaning 0..B)."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo, hi = 0, int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad lambda range {text!r}")
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad lambda range {text!r}")
    return lo, hi


def report_list(text: str) -> list[str]:
    sel = [s.strip() for s in text.split(",") if s.strip()]
    bad = [s for s in sel if s not in REPORTS]
    if bad or not sel:
        raise argparse.ArgumentTypeError(f"unknown report(s) {bad}; choose from {REPORTS}")
    return sel


def envelope(command, inputs, results, notes):
    return {"command": command, "inputs": inputs, "results": results,
            "warnings": sorted(set(notes))}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_analyze(args):
    H = core.build_semigroup(args.gens)
    cert = core.ng_certificate(H)
    tr = core.trace(H)
    results = {
        "generators": list(H.generators),
        "minimal_generators": list(H.minimal_generators),
        "embedding_dimension": H.embedding_dimension,
        "multiplicity": H.multiplicity,
        "frobenius": H.frobenius,
        "pf": list(H.pf),
        "type": H.type,
        "symmetric": core.is_symmetric(H),
        "residue": tr.residue,
        "trace_holes": list(tr.holes),
        "nearly_gorenstein": cert.nearly_gorenstein,
        "ng_vector": list(cert.vector) if cert.vector else None,
        "ng_candidates": [list(c) for c in cert.per_generator_candidates],
        "almost_symmetric": core.is_almost_symmetric(H),
        "canonical_reduction": core.has_canonical_reduction(H),
        "reduced_type": core.reduced_type(H),
    }
    return envelope("analyze", {"gens": args.gens}, results, []), EXIT_OK


def _family_results(spec, n, lams, reports, observed, notes):
    rk = spec.rk
    out = {}
    if "bounds" in reports:
        b = family.bound_N(spec, n)
        out["bounds"] = {"d": spec.d, "FS": spec.FS, "N0": spec.N0, "N1": b.N1, "N2": b.N2,
                         "N3": b.N3, "N": b.N, "n_star": b.n_star, "rk4": spec.rk4}
    if "pf" in reports:
        forms = None
        if n > spec.N0:
            forms = family.closed_forms(spec, n)
            prof = family.p_profile(spec, n)
        elif not observed:
            raise family.BelowThreshold(f"pf transport needs n > N0 = {spec.N0}")
        else:
            notes.append(f"n = {n} <= N0 = {spec.N0}: pf shown without transport")
        rows = []
        for lam in lams:
            nl = n + lam * rk
            row = {"lambda": lam, "n": nl, "pf": list(family.member_semigroup(spec, nl).pf)}
            if forms is not None:
                row["predicted"] = sorted(c(lam) for c in forms)
                row["P"] = sorted(family.psi(spec, n, i, lam) for i in prof.P)
            rows.append(row)
        out["pf"] = rows
    if "frobenius" in reports:
        rows = []
        for lam in lams:
            nl = n + lam * rk
            rows.append({"lambda": lam, "n": nl,
                         "direct": family.member_semigroup(spec, nl).frobenius,
                         "closed_form": family.frobenius_closed_form(spec, n, lam,
                                                                     observed=observed)})
        out["frobenius"] = rows
    if "ng" in reports:
        base = core.ng_certificate(family.member_semigroup(spec, n))
        rows = []
        for lam in lams:
            nl = n + lam * rk
            cert = core.ng_certificate(family.member_semigroup(spec, nl))
            row = {"lambda": lam, "n": nl, "nearly_gorenstein": cert.nearly_gorenstein,
                   "vector": list(cert.vector) if cert.vector else None}
            if base.nearly_gorenstein:
                vec = family.ng_transport(spec, n, lam, observed=observed)
                row["transported"] = list(vec) if vec else None
            rows.append(row)
        out["ng"] = rows
    if "residue" in reports:
        scan = family.residue_scan(spec, n, lams)
        out["residue"] = {
            "rows": [{"lambda": a, "n": b, "residue": c} for a, b, c in scan.rows],
            "empirical_linear_fit": None if scan.fit is None else {
                "slope": scan.fit.slope, "intercept": scan.fit.intercept,
                "max_deviation": scan.fit.max_deviation},
        }
    if "rtype" in reports:
        rows = []
        for lam in lams:
            nl = n + lam * rk
            rows.append({"lambda": lam, "n": nl,
                         "direct": core.reduced_type(family.member_semigroup(spec, nl)),
                         "formula": family.reduced_type_formula(spec, nl, observed=observed)})
        out["rtype"] = rows
    return out


def cmd_family(args):
    spec = family.make_spec(args.shifts)
    lo, hi = args.lam
    lams = list(range(lo, hi + 1))
    if args.csv and args.report != ["residue"]:
        raise UsageError("--csv is only available for --report residue")
    notes: list[str] = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ThresholdWarning)
        results = _family_results(spec, args.n, lams, args.report, args.observed, notes)
    notes += [str(w.message) for w in caught if issubclass(w.category, ThresholdWarning)]
    inputs = {"shifts": list(spec.r), "n": args.n, "lambda": [lo, hi],
              "report": args.report, "observed": args.observed}
    return envelope("family", inputs, results, notes), EXIT_OK


def _wrong_table(spec, n):
    prof = family.p_profile(spec, n)
    rows = []
    for i in prof.P:
        rows.append({"i": i, "correct": family.psi(spec, n, i),
                     "wrong": family.psi_wrong(spec, n, i)})
    for r in rows:
        r["differs"] = r["correct"] != r["wrong"]
    return {"n": n, "target_n": n + spec.rk,
            "P_correct": sorted(r["correct"] for r in rows),
            "P_wrong": sorted(r["wrong"] for r in rows),
            "rows": rows}


def cmd_verify(args):
    lo, hi = args.lam
    if args.random is not None or args.seed is not None:
        rnd = args.random or []
        if len(rnd) > 2:
            raise UsageError("--random takes SEED [COUNT]")
        seed = args.seed if args.seed is not None else rnd[0]
        count = rnd[1] if len(rnd) > 1 else 10
        specs = oracle.random_specs(seed, count, r_k_max=args.rk_max)
        instances = [(s, args.n or oracle.valid_ns(s, s.N0, 1)[0]) for s in specs]
        inputs = {"random": [seed, count], "rk_max": args.rk_max}
    elif args.shifts is not None:
        spec = family.make_spec(args.shifts)
        n = args.n or oracle.valid_ns(spec, spec.N0, 1)[0]
        instances = [(spec, n)]
        inputs = {"shifts": list(spec.r), "n": n}
    else:
        raise UsageError("verify needs --shifts or --random")
    inputs.update({"lambda": hi, "cap": args.cap})

    results = {"instances": [], "checks": 0, "mismatches": 0}
    for spec, n in instances:
        reports = oracle.brute_shift_check(spec, n, hi, cap=args.cap)
        bad = [r.to_dict() for r in reports if not r.match]
        results["instances"].append({"shifts": list(spec.r), "n": n, "checks": len(reports),
                                     "mismatches": bad})
        results["checks"] += len(reports)
        results["mismatches"] += len(bad)
        if args.show_wrong_bijection:
            results["instances"][-1]["wrong_bijection"] = _wrong_table(spec, n)
    code = EXIT_OK if results["mismatches"] == 0 else EXIT_MISMATCH
    return envelope("verify", inputs, results, []), code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shiftsg", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="invariants of one numerical semigroup")
    a.add_argument("--gens", type=int_list, required=True)
    a.add_argument("--json", action="store_true", help="JSON output (default)")
    a.set_defaults(func=cmd_analyze, csv=False)

    f = sub.add_parser("family", help="report on a shifted family")
    f.add_argument("--shifts", type=int_list, required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--lambda", dest="lam", type=lambda_range, default=(0, 0))
    f.add_argument("--report", type=report_list, default=["pf"])
    f.add_argument("--observed", action="store_true",
                   help="evaluate below proven bounds, with warnings")
    fmt = f.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    f.set_defaults(func=cmd_family)

    v = sub.add_parser("verify", help="closed forms against brute force")
    v.add_argument("--shifts", type=int_list)
    v.add_argument("--random", type=int, nargs="+", metavar="SEED [COUNT]")
    v.add_argument("--seed", type=int)
    v.add_argument("--rk-max", type=int, default=10)
    v.add_argument("--n", type=int)
    v.add_argument("--lambda", dest="lam", type=lambda_range, default=(0, 1))
    v.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    v.add_argument("--show-wrong-bijection", action="store_true")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify, csv=False)
    return p


def residue_csv(env) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lambda", "n", "residue"])
    for row in env["results"]["residue"]["rows"]:
        w.writerow([row["lambda"], row["n"], row["residue"]])
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    try:
        env, code = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"shiftsg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SemigroupError as exc:
        print(f"shiftsg: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    for note in env["warnings"]:
        print(f"warning: {note}", file=sys.stderr)
    sys.stdout.write(residue_csv(env) if args.csv else dumps(env))
    return code


if __name__ == "__main__":
    sys.exit(main())
