"""Command line interface: ``pgroupcoh compute|verify|oracle-compare|classify-extensions``.

Exit status is 0 when every selected assertion passes, 1 when one fails and
2 for invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cohomology import CoeffRing, cohomology_invariants
from .families import standard_resolution
from .groups import make_P, parse_group_spec

__all__ = ["main", "run_cli", "build_parser"]


def _smallest_prime(m: int) -> int | None:
    for q in range(2, m + 1):
        if m % q == 0:
            return q
    return None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pgroupcoh", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, seed=False):
        sp.add_argument("--p", type=int, default=3, help="odd prime (default 3)")
        sp.add_argument("--n", type=int, default=3, help="P(n) has order p^n (default 3)")
        sp.add_argument("--json", metavar="PATH", help="write the JSON report here")
        sp.add_argument("--timings", action="store_true", help="include wall-clock timings in the JSON")
        if seed:
            sp.add_argument("--seed", type=int, default=0, help="seed for randomized property checks")

    c = sub.add_parser("compute", help="additive cohomology of a group")
    common(c)
    c.add_argument("--group", help="P:p=3,n=3 | M:p=3,n=4 | C:9 | E:p=3,rank=2 (default P(p,n))")
    c.add_argument("--max-degree", type=int, default=6)
    c.add_argument("--coeff", default="Z", help="Z, Fp, or Zm:<m>")

    v = sub.add_parser("verify", help="run verification suites")
    common(v, seed=True)
    v.add_argument("--suite", default="all",
                   choices=["theorem3", "lemma4", "cor5", "extensions", "properties", "oracle", "all"])
    v.add_argument("--cutoff", type=int, default=None, help="resolution cutoff for the ring suite")

    o = sub.add_parser("oracle-compare", help="structured resolutions against the bar resolution")
    common(o)
    o.add_argument("--no-validate", action="store_true", help="skip exhaustive validation of the resolutions")

    e = sub.add_parser("classify-extensions", help="GL_2(F_p)-orbits of central extensions")
    common(e)
    return ap


def _emit(args, payload: dict):
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _reports_payload(args, reports) -> dict:
    ok = all(r.ok for r in reports)
    G = make_P(args.p, args.n) if args.p and args.n else None
    return {"status": "pass" if ok else "fail",
            "presentation": G.presentation_text() if G else "",
            "reports": [r.to_json(timings=args.timings) for r in reports]}


def _cmd_compute(args) -> int:
    try:
        G = parse_group_spec(args.group) if args.group else make_P(args.p, args.n)
        p = _smallest_prime(G.order) or args.p
        coeff = CoeffRing.parse(args.coeff, p)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.max_degree < 0:
        print("error: --max-degree must be non-negative", file=sys.stderr)
        return 2
    R = standard_resolution(G, args.max_degree + 1)
    rows = []
    print(G.presentation_text())
    for d in range(args.max_degree + 1):
        inv = cohomology_invariants(R, coeff, d)
        rows.append({"degree": d, "invariants": str(inv), **inv.to_json()})
        print(f"H^{d}({G.name}; {coeff}) = {inv}")
    _emit(args, {"group": G.name, "presentation": G.presentation_text(), "coeff": str(coeff),
                 "resolution": R.name, "ranks": list(R.ranks), "cohomology": rows})
    return 0


def _print_reports(reports):
    for r in reports:
        for line in r.summary_lines():
            print(line)
        for note in r.notes:
            print(f"  note: {note}")


def _cmd_reports(args, reports) -> int:
    _print_reports(reports)
    _emit(args, _reports_payload(args, reports))
    return 0 if all(r.ok for r in reports) else 1


def run_cli(argv=None) -> int:
    from .verify import classify_extensions, oracle_compare, run_suite

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    if args.command == "compute":
        return _cmd_compute(args)
    try:
        make_P(args.p, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.command == "verify":
        reports = run_suite(args.suite, args.p, args.n, args.cutoff, args.seed)
    elif args.command == "oracle-compare":
        reports = [oracle_compare(validate=not args.no_validate)]
    else:
        reports = [classify_extensions(args.p, args.n)]
    return _cmd_reports(args, reports)


def main(argv=None):
    sys.exit(run_cli(argv))


if __name__ == "__main__":
    main()
