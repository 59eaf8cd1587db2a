"""Command-line batch verification surface.

Subcommands construct the ideals from the toolkit (``gen ideal``) or
run check suites (``check ...``, ``resolve``) and emit one CheckReport
JSON line per check on stdout.  Exit status: 0 when everything passes,
1 when some check is falsified (the line carries a witness), 2 for
usage errors.
"""

import argparse
import json
import os
import sys
import time

from .domains import GF, QQ
from .groebner import ideal_equal
from .paramcheck import verify_q2_conjecture
from .resolution import (
    associated_graded_ideal,
    betti_crosscheck,
    betti_table_text,
    homogenized_minors_gb_check,
    verify_resolution,
)
from .transfer import (
    TransferFamily,
    build_A,
    check_stability,
    gap_membership_report,
    ideal_L,
    maximal_minors,
    sum_of_minors_generators,
    transfer_image_sanity,
    verify_antidiagonal_lead,
)


def _field_for(args, default):
    choice = getattr(args, "field", None)
    if choice is None or choice == "default":
        choice = default
    if choice == "Q":
        return QQ
    return GF(args.p)


def _threads():
    """Concurrency cap from TIL_THREADS; checks run one at a time."""
    raw = os.environ.get("TIL_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


class Reporter:
    def __init__(self, out_dir=None):
        self.failed = False
        self.lines = []
        self.out_dir = out_dir

    def emit(self, check, params, passed, witness=None, detail=None, dt=None):
        report = {
            "check": check,
            "params": params,
            "verdict": "pass" if passed else "fail",
        }
        if not passed:
            report["witness"] = witness if witness is not None else detail
            self.failed = True
        if detail is not None:
            report["detail"] = detail
        line = json.dumps(report, sort_keys=True)
        if dt is not None:
            # wall time rides outside the deterministic JSON payload
            line += f"\t# {dt * 1000:.0f}ms"
        print(line)
        self.lines.append(line)

    def write_out(self, name):
        if self.out_dir:
            os.makedirs(self.out_dir, exist_ok=True)
            with open(os.path.join(self.out_dir, name), "w") as fh:
                fh.write("\n".join(self.lines) + "\n")


def _timed(fn, *args, **kwargs):
    t0 = time.monotonic()
    result = fn(*args, **kwargs)
    return result, time.monotonic() - t0


# ----------------------------------------------------------------------
# subcommand handlers


def cmd_gen(args, rep):
    p, q, r = args.p, args.q, args.r
    field = _field_for(args, "Q")
    which = args.which
    if which == "transfer":
        fam = TransferFamily(p, q, r, field)
        gens = [str(f) for f in fam.polys]
    elif which == "minors":
        gens = [str(g) for g in maximal_minors(build_A(p, q, field)).gens]
    elif which == "sum-minors":
        gens = [
            f"{list(alpha)}: {g}"
            for alpha, g in sum_of_minors_generators(p, q, field).items()
        ]
    elif which == "L":
        gens = [str(g) for g in ideal_L(p, q, field).gens]
    elif which == "Iprime":
        gens = [str(g) for g in associated_graded_ideal(p, field).gens]
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(which)
    obj = {
        "object": "ideal",
        "which": which,
        "p": p,
        "q": q,
        "r": r,
        "field": field.name,
        "generators": gens,
    }
    print(json.dumps(obj, sort_keys=True))
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, f"{which}_p{p}_q{q}.json")
        with open(path, "w") as fh:
            json.dump(obj, fh, sort_keys=True, indent=2)
    return 0


def check_conjecture(args, rep):
    field = _field_for(args, "Q")
    p, q = args.p, args.q

    def run():
        fam = TransferFamily(p, q, 0, field)
        I = fam.elimination_ideal()
        J = maximal_minors(build_A(p, q, field))
        equal = ideal_equal(I, J)
        return equal, {
            "elimination_gb_size": len(I.gens),
            "minor_count": len(J.gens),
        }

    (equal, detail), dt = _timed(run)
    rep.emit(
        "conjecture",
        {"p": p, "q": q, "field": field.name},
        equal,
        witness=None if equal else "elimination ideal differs from minor ideal",
        detail=detail,
        dt=dt,
    )


def check_stability_cmd(args, rep):
    field = _field_for(args, "Fp")
    p, q = args.p, args.q
    rs = [args.r] if args.r is not None else list(range(p))
    for r in rs:
        res, dt = _timed(
            check_stability, p, q, r, degree_bound=args.bound, field=field
        )
        witness = None
        if not res["pass"]:
            witness = {
                "ideal_equal": res["ideal_equal"],
                "hilbert_extension": res["hilbert_extension"],
                "hilbert_elimination": res["hilbert_elimination"],
            }
        rep.emit(
            "stability",
            {"p": p, "q": q, "r": r, "bound": args.bound, "field": field.name},
            res["pass"],
            witness=witness,
            dt=dt,
        )


def check_initial(args, rep):
    field = _field_for(args, "Q")
    p, q = args.p, args.q
    res, dt = _timed(verify_antidiagonal_lead, p, q, field)
    rep.emit(
        "initial-antidiagonal",
        {"p": p, "q": q, "field": field.name},
        res["pass"],
        witness=res["violations"][:3] or None,
        detail={"minors_checked": res["minors_checked"]},
        dt=dt,
    )
    res, dt = _timed(gap_membership_report, p, q, args.bound, field)
    rep.emit(
        "initial-gap-membership",
        {"p": p, "q": q, "bound": args.bound, "field": field.name},
        res["pass"],
        witness=res["mismatches"][:3] or None,
        detail={"monomials_checked": res["monomials_checked"]},
        dt=dt,
    )


def check_q2(args, rep):
    field = _field_for(args, "Q")
    res, dt = _timed(verify_q2_conjecture, args.p, args.bound, field)
    witness = None
    if not res["pass"]:
        witness = [
            d
            for d in res["per_degree"]
            if not (
                d["dim_SL"] == d["dim_SI"] == d["dim_inA"] and d["psi_phi_ok"]
            )
        ][:3]
    rep.emit(
        "q2-pipeline",
        {"p": args.p, "bound": args.bound, "field": field.name},
        res["pass"],
        witness=witness,
        detail={
            "kernel_matches_elimination": res["kernel_matches_elimination"],
            "ideal_equal": res["ideal_equal"],
            "degrees_checked": len(res["per_degree"]),
        },
        dt=dt,
    )


def check_gb5(args, rep):
    field = _field_for(args, "Q")
    res, dt = _timed(homogenized_minors_gb_check, args.p, field)
    rep.emit(
        "homogenized-minors-gb",
        {"p": args.p, "field": field.name},
        res["pass"],
        witness=None if res["pass"] else res,
        detail={"generators": res["generators"]},
        dt=dt,
    )


def check_sanity(args, rep):
    res, dt = _timed(transfer_image_sanity, args.p)
    rep.emit(
        "transfer-sanity",
        {"p": args.p, "field": f"GF({args.p})"},
        res["pass"],
        witness=res["failures"][:3] or None,
        detail={
            "samples": res["samples"],
            "elimination_matches": res["elimination_matches"],
        },
        dt=dt,
    )


def cmd_resolve(args, rep):
    field = _field_for(args, "Q")
    res, dt = _timed(verify_resolution, args.p, args.bound, field)
    witness = None
    if not res["pass"]:
        witness = {
            k: res[k]
            for k in (
                "chain_map",
                "minimal",
                "linear",
                "exactness_failures",
                "h0_matches_quotient",
                "betti",
            )
        }
    rep.emit(
        "resolution",
        {"p": args.p, "bound": args.bound, "field": field.name},
        res["pass"],
        witness=witness,
        detail={
            "betti": res["betti"],
            "pdim": res["pdim"],
        },
        dt=dt,
    )
    print(betti_table_text(res["betti"], args.p))
    if args.crosscheck:
        res, dt = _timed(betti_crosscheck, args.p, field=field)
        rep.emit(
            "betti-crosscheck",
            {"p": args.p, "field": field.name},
            res["pass"],
            witness=None if res["pass"] else res,
            detail={"betti": res["betti"]},
            dt=dt,
        )


# ----------------------------------------------------------------------
# argument parsing


def build_parser():
    parser = argparse.ArgumentParser(
        prog="transferideals",
        description="Exact verification toolkit for transfer ideals.",
    )
    parser.add_argument(
        "--field",
        choices=["Fp", "Q", "default"],
        default="default",
        help="coefficient field (default depends on the check)",
    )
    parser.add_argument("--out", help="directory for file outputs")
    sub = parser.add_subparsers(dest="command")

    gen = sub.add_parser("gen", help="construct and print objects")
    gen_sub = gen.add_subparsers(dest="gen_what")
    ideal = gen_sub.add_parser("ideal", help="print ideal generators")
    ideal.add_argument("--p", type=int, required=True)
    ideal.add_argument("--q", type=int, default=2)
    ideal.add_argument("--r", type=int, default=0)
    ideal.add_argument(
        "--which",
        required=True,
        choices=["transfer", "minors", "sum-minors", "L", "Iprime"],
    )

    check = sub.add_parser("check", help="run a check suite")
    check_sub = check.add_subparsers(dest="check_what")

    c = check_sub.add_parser("conjecture")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--q", type=int, default=2)

    c = check_sub.add_parser("stability")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--q", type=int, default=2)
    c.add_argument("--r", type=int, default=None)
    c.add_argument("--bound", type=int, default=8)

    c = check_sub.add_parser("initial")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--q", type=int, default=2)
    c.add_argument("--bound", type=int, default=4)

    c = check_sub.add_parser("q2")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--bound", type=int, default=6)

    c = check_sub.add_parser("gb5")
    c.add_argument("--p", type=int, default=5)

    c = check_sub.add_parser("transfer-sanity")
    c.add_argument("--p", type=int, required=True)

    res = sub.add_parser("resolve", help="build and verify the resolution")
    res.add_argument("--p", type=int, required=True)
    res.add_argument("--bound", type=int, default=8)
    res.add_argument("--crosscheck", action="store_true")
    return parser


CHECKS = {
    "conjecture": check_conjecture,
    "stability": check_stability_cmd,
    "initial": check_initial,
    "q2": check_q2,
    "gb5": check_gb5,
    "transfer-sanity": check_sanity,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0,) else 0
    _threads()  # validate the env var even though execution is sequential
    rep = Reporter(getattr(args, "out", None))
    if args.command == "gen":
        if args.gen_what != "ideal":
            parser.error("gen requires the 'ideal' subcommand")
        return cmd_gen(args, rep)
    if args.command == "check":
        handler = CHECKS.get(args.check_what)
        if handler is None:
            print(parser.format_usage(), file=sys.stderr)
            return 2
        handler(args, rep)
    elif args.command == "resolve":
        cmd_resolve(args, rep)
    else:
        print(parser.format_usage(), file=sys.stderr)
        return 2
    rep.write_out("reports.jsonl")
    return 1 if rep.failed else 0


if __name__ == "__main__":
    sys.exit(main())
