"""Command-line surface: field | verify | catalog | construct | sweep.

All numeric I/O uses the integer element encodings of the field module; all
output is reproducible byte-for-byte under a fixed seed (timing fields print
as 0 unless --timings is given).  Exit codes: 0 verdict true / suite clean,
1 verdict false / mismatch found, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .backend import backend_name
from .errors import CapError, FieldError, SpecParseError
from .field import FieldCtx, parse_field_spec
from .opoly import (FAMILY_SCHEMAS, FAMILY_TAGS, instantiate,
                    parse_family_id)
from .poly import TermPoly, interpolate, parse_poly_spec
from .sweeps import SUITES, SweepConfig, run_suite
from .verify import (HYPEROVAL_CAP, OPOLY_CAP, PP_CAP, hyperoval_check,
                     is_opolynomial, is_permutation)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


def _print_json(d, out):
    out.write(json.dumps(d, indent=2))
    out.write("\n")


def _open_out(args):
    if getattr(args, "out", None):
        return open(args.out, "w", newline="")
    return sys.stdout


# ---------------------------------------------------------------------------
# field
# ---------------------------------------------------------------------------

def cmd_field(args) -> int:
    ctx = parse_field_spec(args.field)
    out = _open_out(args)
    d = ctx.describe()
    if args.format == "text":
        out.write(f"field {d['spec']}: order {d['order']} = {ctx.p}^{ctx.n}\n")
        if "modulus_poly" in d:
            out.write(f"  modulus: {d['modulus_poly']} (encoding {d['modulus']})\n")
        else:
            out.write(f"  defining over base: {d['defining_poly']} "
                      f"(coefficients {d['defining']})\n")
            out.write(f"  adjoined root encoding: {d['root']}\n")
        out.write(f"  generator: {d['generator']}\n")
    else:
        _print_json(d, out)
    if out is not sys.stdout:
        out.close()
    return EXIT_TRUE


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    ctx = parse_field_spec(args.field)
    f = parse_poly_spec(ctx, args.poly)
    if args.kind == "pp":
        rep = is_permutation(f, cap=args.cap_pp)
    elif args.kind == "opoly":
        rep = is_opolynomial(f, cap=args.cap_opoly)
    else:
        rep = hyperoval_check(f, cap=args.cap_hyper)
    out = _open_out(args)
    _print_json(rep.to_dict(timings=args.timings), out)
    if out is not sys.stdout:
        out.close()
    return EXIT_TRUE if rep.verdict else EXIT_FALSE


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def cmd_catalog(args) -> int:
    out = _open_out(args)
    try:
        if args.action == "list":
            if args.format == "text":
                for tag in FAMILY_TAGS:
                    schema = FAMILY_SCHEMAS[tag]
                    params = ", ".join(f"{k}: {v}" for k, v in schema.items())
                    out.write(f"{tag}" + (f"  ({params})" if params else "") + "\n")
            else:
                _print_json({t: FAMILY_SCHEMAS[t] for t in FAMILY_TAGS}, out)
            return EXIT_TRUE
        if args.action == "gen":
            if not args.family:
                raise SpecParseError("gen needs --family")
            spec = parse_family_id(args.family, args.m)
            f = instantiate(spec)
            if not isinstance(f, TermPoly):
                f = interpolate(f)
            out.write(f.text() + "\n")
            return EXIT_TRUE
        # check-all
        cfg = SweepConfig(seed=args.seed, jobs=args.jobs,
                          cap_opoly=args.cap_opoly, cap_hyper=args.cap_hyper)
        failures = 0
        rows = []
        for m in args.m_list or [args.m]:
            result = run_suite(f"opoly-all-m{m}", cfg)
            per_family: dict[str, list] = {}
            for case in result.sorted_cases():
                fam = case.case_id.split(":")[0]
                per_family.setdefault(fam, []).append(case)
            for fam in sorted(per_family):
                cs = per_family[fam]
                bad = [c for c in cs if not c.verified]
                failures += len(bad)
                rows.append({"family": fam, "m": m, "parameters": len(cs),
                             "failed": len(bad)})
        if args.format == "json":
            _print_json({"rows": rows, "failures": failures}, out)
        else:
            out.write(f"{'family':<12} {'m':>2} {'params':>7} {'failed':>7}\n")
            for r in rows:
                out.write(f"{r['family']:<12} {r['m']:>2} "
                          f"{r['parameters']:>7} {r['failed']:>7}\n")
        return EXIT_TRUE if failures == 0 else EXIT_FALSE
    finally:
        if out is not sys.stdout:
            out.close()


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def _split_construct_params(body: str) -> dict:
    """key=value pairs; a comma that starts no new key continues the previous
    value (polynomial specs contain commas)."""
    parts: list[tuple[str, str]] = []
    for piece in body.split(","):
        if "=" in piece:
            k, _, v = piece.partition("=")
            parts.append((k.strip(), v))
        elif parts:
            parts[-1] = (parts[-1][0], parts[-1][1] + "," + piece)
        else:
            raise SpecParseError(f"expected key=value, got {piece!r}")
    return dict(parts)


def _resolve_base_fn(ctx: FieldCtx, text: str):
    """A base map given either as a catalog family id or as polynomial text."""
    head = text.split(":", 1)[0]
    from .opoly import _ALIASES
    if head in FAMILY_TAGS or head in _ALIASES:
        spec = parse_family_id(text, ctx.n)
        return instantiate(spec, ctx)
    return parse_poly_spec(ctx, text)


def cmd_construct(args) -> int:
    from .constructions import (construct_F, construct_F1, construct_F2,
                                construct_F3, construct_G, cubic_frame,
                                cubic_t73, cubic_t74, further_t71,
                                further_t72, quad_frame, tower_iterate,
                                verify_lift)
    ext = parse_field_spec(args.field)
    kind, _, body = args.spec.partition(":")
    kind = kind.upper()
    params = _split_construct_params(body) if body else {}
    if args.depth and kind not in ("F1", "F3", "G"):
        raise SpecParseError(f"--depth only applies to F1/F3/G, not {kind}")
    predicted = None
    if kind in ("F", "G", "F1", "F2", "F3"):
        if ext.base is None or ext.step != 2:
            raise SpecParseError(
                f"{kind} needs a quadratic tower field, got {args.field!r}")
        beta = params.pop("beta", "root")
        frame = quad_frame(ext=ext, beta=beta)
        base = frame.base
        if kind in ("F", "G"):
            f = _resolve_base_fn(base, params.pop("f", "1:1"))
            if args.depth:
                fn = tower_iterate(f, args.depth, "G")[-1]
            else:
                builder = construct_F if kind == "F" else construct_G
                fn = builder(frame, f)
                if kind == "F":
                    predicted = is_opolynomial(f, cap=args.cap_opoly).verdict
                else:
                    predicted = is_permutation(f, cap=args.cap_pp).verdict
        else:
            f1 = _resolve_base_fn(base, params.pop("f1", "1:1"))
            f2 = _resolve_base_fn(base, params.pop("f2", "1:1"))
            if args.depth and kind in ("F1", "F3"):
                fn = tower_iterate(f1, args.depth, kind)[-1]
            else:
                builder = {"F1": construct_F1, "F2": construct_F2,
                           "F3": construct_F3}[kind]
                fn = builder(frame, f1, f2)
                predicted = (is_permutation(f1, cap=args.cap_pp).verdict
                             and is_permutation(f2, cap=args.cap_pp).verdict)
    elif kind in ("T71", "T72"):
        if ext.base is None or ext.step != 2:
            raise SpecParseError(f"{kind} needs a quadratic tower field")
        frame = quad_frame(ext=ext)
        a, b = int(params.pop("a", 0)), int(params.pop("b", 0))
        u, t = int(params.pop("u", 0)), int(params.pop("t", 1))
        build = further_t71 if kind == "T71" else further_t72
        fn, predicted = build(frame, a, b, u, t)
    elif kind in ("T73", "T74"):
        if ext.base is None or ext.step != 3:
            raise SpecParseError(f"{kind} needs a cubic tower field")
        frame = cubic_frame(ext=ext)
        a, b = int(params.pop("a", 0)), int(params.pop("b", 0))
        c = int(params.pop("c", 0))
        u, t = int(params.pop("u", 0)), int(params.pop("t", 1))
        build = cubic_t73 if kind == "T73" else cubic_t74
        fn, predicted = build(frame, a, b, c, u, t)
    else:
        raise SpecParseError(f"unknown construction kind {kind!r}")
    if params:
        raise SpecParseError(f"unknown parameters {sorted(params)} in {args.spec!r}")

    report = {"predicted": predicted}
    exit_code = EXIT_TRUE
    if args.verify:
        rep = verify_lift(fn, cap=args.cap_pp)
        if rep is None:
            report.update({"verdict": None, "counterexample": None,
                           "domain_size": fn.ctx.q, "elapsed_ms": 0,
                           "note": "unverified: domain above --cap-pp"})
        else:
            report.update(rep.to_dict(timings=args.timings))
            mismatch = predicted is not None and predicted != rep.verdict
            # a sufficiency-only prediction cannot mismatch through falseness
            if kind in ("F", "G") and predicted is False:
                mismatch = False
            report["mismatch"] = mismatch
            if mismatch or not rep.verdict:
                exit_code = EXIT_FALSE
    else:
        report.update({"verdict": None, "counterexample": None,
                       "domain_size": fn.ctx.q, "elapsed_ms": 0})
    out = _open_out(args)
    _print_json(report, out)
    if out is not sys.stdout:
        out.close()
    return exit_code


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

CSV_COLUMNS = ["suite", "case_id", "field", "params", "predicted", "verified",
               "mismatch", "elapsed_ms"]


def _bool_cell(v) -> str:
    return "" if v is None else ("true" if v else "false")


def cmd_sweep(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        sys.stderr.write(f"unknown suite {unknown[0]!r}; available:\n")
        for n in sorted(SUITES):
            sys.stderr.write(f"  {n}\n")
        return EXIT_ERROR
    cfg = SweepConfig(seed=args.seed, jobs=args.jobs,
                      cap_opoly=args.cap_opoly, cap_hyper=args.cap_hyper)
    results = [run_suite(n, cfg) for n in names]
    out = _open_out(args)
    total_mismatch = 0
    if args.format == "json":
        doc = []
        for r in results:
            doc.append({
                "suite": r.name,
                "mismatches": r.mismatches,
                "findings": r.findings,
                "elapsed_ms": r.elapsed_ms if args.timings else 0,
                "cases": [{
                    "case_id": c.case_id, "field": c.field, "params": c.params,
                    "predicted": c.predicted, "verified": c.verified,
                    "mismatch": c.mismatch,
                    "elapsed_ms": c.elapsed_ms if args.timings else 0,
                } for c in r.sorted_cases()],
            })
            total_mismatch += r.mismatches
        _print_json(doc, out)
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in results:
            total_mismatch += r.mismatches
            for c in r.sorted_cases():
                w.writerow([c.suite, c.case_id, c.field, c.params,
                            _bool_cell(c.predicted), _bool_cell(c.verified),
                            _bool_cell(c.mismatch),
                            c.elapsed_ms if args.timings else 0])
    if out is not sys.stdout:
        out.close()
    for r in results:
        sys.stderr.write(f"suite {r.name}: {len(r.cases)} cases, "
                         f"{r.mismatches} mismatches\n")
        for finding in r.findings:
            sys.stderr.write(f"  finding: {finding}\n")
    return EXIT_FALSE if total_mismatch else EXIT_TRUE


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(sp, with_field=True, default_format="json"):
    if with_field:
        sp.add_argument("--field", required=True,
                        help="field spec, e.g. 2^5, 3^2/mod=10, 2^5:2, 7:3")
    sp.add_argument("--format", choices=["json", "csv", "text"],
                    default=default_format)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--cap-pp", dest="cap_pp", type=int, default=PP_CAP)
    sp.add_argument("--cap-opoly", dest="cap_opoly", type=int, default=OPOLY_CAP)
    sp.add_argument("--cap-hyper", dest="cap_hyper", type=int, default=HYPEROVAL_CAP)
    sp.add_argument("--cap-interp", dest="cap_interp", type=int, default=4096)
    sp.add_argument("--out", help="write output to FILE instead of stdout")
    sp.add_argument("--timings", action="store_true",
                    help="include real elapsed_ms (non-reproducible) in output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gfperm",
        description="Finite-field permutation polynomial constructions and "
                    "exhaustive verification oracles "
                    f"(kernel backend: {backend_name()})")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("field", help="describe a field (order, modulus, generator)")
    _add_common(sp)
    sp.set_defaults(fn=cmd_field)

    sp = sub.add_parser("verify", help="run a brute-force oracle on a polynomial")
    sp.add_argument("kind", choices=["pp", "opoly", "hyperoval"])
    sp.add_argument("--poly", required=True,
                    help="polynomial text, e.g. '2:1' or '5/6:1,3/6:1,1/6:1'")
    _add_common(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("catalog", help="list / generate / check the o-polynomial catalog")
    sp.add_argument("action", choices=["list", "gen", "check-all"])
    sp.add_argument("--family", help="family id, e.g. segre:a=1")
    sp.add_argument("--m", type=int, default=5, help="extension degree over GF(2)")
    sp.add_argument("--m-list", dest="m_list", type=int, nargs="*",
                    help="degrees for check-all (default: --m)")
    _add_common(sp, with_field=False)
    sp.set_defaults(fn=cmd_catalog)

    sp = sub.add_parser("construct", help="build a lifted map and optionally verify it")
    sp.add_argument("--spec", required=True,
                    help="e.g. F:f=segre:a=1 | F1:f1=1:1,f2=2:1 | T71:a=2,b=1,u=0,t=3")
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--depth", type=int, default=0,
                    help="tower-iterate depth for F1/F3/G")
    _add_common(sp)
    sp.set_defaults(fn=cmd_construct)

    sp = sub.add_parser("sweep", help="run a named verification suite")
    sp.add_argument("suite", help="suite name or 'all'")
    _add_common(sp, with_field=False, default_format="csv")
    sp.set_defaults(fn=cmd_sweep)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (SpecParseError, FieldError, CapError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
