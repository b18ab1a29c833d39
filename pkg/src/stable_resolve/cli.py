"""Command line front end.

Exit status: 0 on success, 1 on usage or input errors (including a
non-stable ideal handed to a command that needs stability), 2 when a
verification finds a problem.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import monomial as mono
from .cw import build_cw, export
from .errors import ParseError, ResolveError
from .ideal import ideal_to_json, load_ideal, require_stable, stable_corpus
from .oracle import compare_betti, koszul_betti
from .poset import AdmissiblePoset, symbol_label
from .resolution import betti_table, build_resolution, graded_count
from .verify import DEPTHS, run_all, stability_report

OK, USAGE, FAILED = 0, 1, 2


def _dump(data, out):
    out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")


def _load_stable(path):
    N = load_ideal(path)
    require_stable(N)
    return N


def cmd_check(args, out):
    N = load_ideal(args.input)
    report = stability_report(N)
    if args.json:
        _dump({"format": 1, "ideal": ideal_to_json(N), **report.to_dict(),
               "stable": report.passed}, out)
    elif report:
        out.write("stable\n")
    else:
        out.write("not stable: " + report.violations[0] + "\n")
    return OK if report else FAILED


def cmd_resolve(args, out):
    F = build_resolution(_load_stable(args.input), args.prime)
    if args.json:
        out.write(F.dumps() + "\n")
        return OK
    names = F.names
    out.write("ranks: " + " ".join(map(str, F.ranks)) + "\n")
    for i in range(1, len(F.basis)):
        if not F.basis[i]:
            continue
        out.write(f"d{i}:\n")
        for (src, tgt), (coeff, m) in sorted(F.entries(i).items(), key=repr):
            sign = "+" if coeff == 1 else "-"
            out.write(f"  {_sym(src, names)} -> {sign}{mono.format_monomial(m, names)} * {_sym(tgt, names)}\n")
    return OK


def _sym(s, names):
    return "1" if s.is_bottom else "f(" + symbol_label(s, names) + ")"


def cmd_betti(args, out):
    table = betti_table(build_resolution(_load_stable(args.input), args.prime))
    if args.json:
        _dump(table.to_json(), out)
    else:
        out.write(table.diagram())
    return OK


def cmd_hasse(args, out):
    P = AdmissiblePoset(_load_stable(args.input))
    if args.json or args.format == "json":
        out.write(P.dumps() + "\n")
    else:
        out.write(P.to_dot())
    return OK


def cmd_cw(args, out):
    X = build_cw(AdmissiblePoset(_load_stable(args.input)))
    out.write(export(X, "json" if args.json else args.format))
    return OK


def _emit_reports(reports, args, out, extra=None):
    passed = all(reports)
    if args.json:
        data = {"format": 1, "passed": passed, "reports": [r.to_dict() for r in reports]}
        data.update(extra or {})
        _dump(data, out)
    else:
        for r in reports:
            out.write(r.line() + "\n")
        out.write("all checks passed\n" if passed else "verification FAILED\n")
    return OK if passed else FAILED


def cmd_verify(args, out):
    N = load_ideal(args.input)
    return _emit_reports(run_all(N, args.prime, args.depth, args.seed), args, out,
                         {"ideal": ideal_to_json(N), "depth": args.depth})


def cmd_oracle(args, out):
    N = _load_stable(args.input)
    F = build_resolution(N, args.prime)
    if args.degree:
        try:
            a = tuple(int(x) for x in args.degree.split(","))
        except ValueError:
            raise ParseError(f"bad degree {args.degree!r}") from None
        if len(a) != N.d or min(a) < 0:
            raise ParseError(f"degree must be {N.d} non-negative integers")
        koszul = koszul_betti(N, a, args.prime)
        counts = [graded_count(F, i, a) for i in range(N.d + 1)]
        if args.json:
            _dump({"format": 1, "degree": list(a), "koszul": koszul,
                   "resolution": counts, "agree": koszul == counts}, out)
        else:
            out.write(f"degree {a}: koszul {koszul} resolution {counts}\n")
        return OK if koszul == counts else FAILED
    return _emit_reports([compare_betti(N, F, args.depth, args.seed)], args, out)


def cmd_corpus(args, out):
    corpus = stable_corpus(args.seed, args.count, args.d, args.max_degree, args.max_gens)
    entries = []
    passed = True
    for k, N in enumerate(corpus):
        reports = run_all(N, args.prime, args.depth, args.seed)
        ok = all(reports)
        passed &= ok
        entries.append({"ideal": ideal_to_json(N), "passed": ok,
                        "reports": [r.to_dict() for r in reports]})
        if not args.json:
            failed = [r.name for r in reports if not r]
            status = "ok" if ok else "FAILED " + ",".join(failed)
            out.write(f"{k:3d} d={N.d} gens={len(N.gens):2d} {N}: {status}\n")
    if args.json:
        _dump({"format": 1, "seed": args.seed, "depth": args.depth,
               "passed": passed, "ideals": entries}, out)
    else:
        out.write(f"{sum(e['passed'] for e in entries)}/{len(entries)} ideals passed\n")
    return OK if passed else FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stable-resolve",
        description="Minimal cellular resolutions of stable monomial ideals.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", "-p", type=int, default=None,
                        help=f"field characteristic (default ${mono.PRIME_ENV_VAR} or {mono.DEFAULT_PRIME})")
    common.add_argument("--json", action="store_true", help="emit JSON")
    depth = argparse.ArgumentParser(add_help=False)
    depth.add_argument("--depth", choices=DEPTHS, default="full")
    depth.add_argument("--seed", type=int, default=0)

    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, helptext, parents=(common,), with_input=True):
        sp = sub.add_parser(name, parents=list(parents), help=helptext)
        if with_input:
            sp.add_argument("input", help="ideal file (text or JSON)")
        sp.set_defaults(func=fn)
        return sp

    add("check", cmd_check, "test stability")
    add("resolve", cmd_resolve, "print the resolution and its differentials")
    add("betti", cmd_betti, "print the Betti table")
    add("hasse", cmd_hasse, "Hasse diagram of the admissible symbols").add_argument(
        "--format", choices=("dot", "json"), default="dot")
    add("cw", cmd_cw, "export the CW complex").add_argument(
        "--format", choices=("dot", "json"), default="json")
    add("verify", cmd_verify, "run every verification", (common, depth))
    add("oracle", cmd_oracle, "compare against Koszul homology", (common, depth)).add_argument(
        "--degree", help="single multidegree, e.g. 1,1,1")
    sp = add("corpus", cmd_corpus, "verify random stable ideals", (common, depth), with_input=False)
    sp.add_argument("--count", type=int, default=50)
    sp.add_argument("-d", type=int, default=4, help="maximal number of variables")
    sp.add_argument("--max-degree", type=int, default=5)
    sp.add_argument("--max-gens", type=int, default=20)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else USAGE
    try:
        args.prime = mono.check_prime(args.prime) if args.prime is not None else mono.default_prime()
        return args.func(args, out)
    except (ResolveError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
