"""Command line: ``uqplus verify|eval|shuffle|list|self-test``."""

import argparse
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import checks, damiani, pbw
from .free import FreeElement, parse_free
from .model import zvee_element
from .report import to_json, to_markdown, write_report
from .scalar import parse_scalar


def _selected(names):
    out = []
    for item in names or ["all"]:
        for name in item.split(","):
            name = name.strip()
            if name == "all":
                out += [n for n in checks.CHECK_ORDER if n not in out]
            elif name not in checks.REGISTRY:
                raise SystemExit(f"unknown check {name!r}; try 'uqplus list'")
            elif name not in out:
                out.append(name)
    return out


def _params(args):
    params = {}
    if args.max_degree is not None:
        params["N"] = args.max_degree
        params["n_bound"] = args.max_degree
        params["grade_bound"] = args.max_degree
    if args.index_bound is not None:
        params["index_bound"] = args.index_bound
    if args.order is not None:
        params["order"] = args.order
    return params


def _run_one(job):
    name, params = job
    return checks.run_check(name, **params)


def cmd_verify(args):
    names = _selected(args.check)
    params = _params(args)
    jobs = [(n, params) for n in names]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            specs = list(pool.map(_run_one, jobs))
    else:
        specs = []
        for job in jobs:
            spec = _run_one(job)
            specs.append(spec)
            if not args.quiet:
                print(f"{spec.name:18s} {spec.status:5s} {spec.millis:10.0f} ms  "
                      f"max_terms={spec.max_terms}", file=sys.stderr)
    if args.out:
        fig = write_report(specs, args.out, args.report, figure=not args.no_figure)
        if not args.quiet:
            print(f"report written to {args.out}" + (f", figure {fig}" if fig else ""),
                  file=sys.stderr)
    else:
        print(to_markdown(specs) if args.report == "md" else to_json(specs))
    for s in specs:
        if s.counterexample and not args.quiet:
            print(f"{s.name}: {s.counterexample}", file=sys.stderr)
    return 0 if all(s.passed() for s in specs) else 1


_CALL = re.compile(r"^\s*(\w+)\s*\((.*)\)\s*$", re.S)


def evaluate(text, order=pbw.PbwOrder.MAIN):
    """Evaluate a named element, a generator monomial or a scalar.

    ``Em(n)``, ``Ep(n)``, ``Ed(n)`` are the root vectors in the shuffle
    algebra, ``Z(n)`` is Z^vee_n in the model, ``image(<monomial>)`` the
    model image of a generator monomial, ``nf(<monomial>)`` or a bare
    monomial such as ``W[1] W[0]`` its normal form, ``scalar(<expr>)`` a
    scalar in canonical form and ``word(<expr>)`` an element of V.
    """
    m = _CALL.match(text)
    if m:
        fn, arg = m.group(1), m.group(2)
        if fn in ("Em", "Ep", "Ed"):
            n = int(arg)
            cache = damiani.default_cache()
            return {"Em": cache.minus, "Ep": cache.plus, "Ed": cache.delta}[fn](n)
        if fn == "Z":
            return zvee_element(int(arg))
        if fn == "image":
            return pbw.monomial_image(tuple(pbw.parse_monomial(arg)))
        if fn == "nf":
            return pbw.normal_form(pbw.parse_monomial(arg), order)
        if fn == "scalar":
            return parse_scalar(arg)
        if fn == "word":
            return parse_free(arg)
        raise ValueError(f"unknown function {fn!r}")
    return pbw.normal_form(pbw.parse_monomial(text), order)


def cmd_eval(args):
    try:
        print(evaluate(args.expression, pbw.PbwOrder(args.order)))
    except (ValueError, pbw.RewriteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def shuffle_expression(text):
    """``xy * yx * x``: the q-shuffle product of the words; ``e`` is empty."""
    result = FreeElement.one()
    for part in text.split("*"):
        word = part.strip()
        if not word or not re.fullmatch(r"[xy]+|e", word):
            raise ValueError(f"not a word over x, y: {part.strip()!r}")
        result = result * FreeElement.word("" if word == "e" else word)
    return result


def cmd_shuffle(args):
    try:
        print(shuffle_expression(args.expression))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_list(args):
    for name in checks.CHECK_ORDER:
        cdef = checks.REGISTRY[name]
        defaults = ", ".join(f"{k}={v}" for k, v in cdef.defaults.items())
        print(f"{name:18s} {cdef.anchor}")
        if defaults:
            print(f"{'':18s} defaults: {defaults}")
    return 0


def cmd_self_test(args):
    results = checks.self_test()
    bad = 0
    for r in results:
        mark = "detected by " + r.detected_by if r.detected_by else "NOT DETECTED"
        print(f"{r.mutation}: {mark}")
        bad += r.detected_by is None
    print(f"{len(results) - bad} of {len(results)} mutations detected")
    return 0 if bad == 0 else 1


def build_parser():
    p = argparse.ArgumentParser(prog="uqplus", description=__doc__)
    p.add_argument("--list", action="store_true", help="list the registered checks")
    p.add_argument("--self-test", action="store_true", help="run the mutation self-test")
    sub = p.add_subparsers(dest="command")

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--check", action="append", help="check name, comma list or 'all'")
    v.add_argument("--max-degree", type=int, help="series truncation degree N")
    v.add_argument("--index-bound", type=int, help="largest generator index")
    v.add_argument("--order", choices=["main", "appendix", "both"])
    v.add_argument("--report", choices=["json", "md"], default="json")
    v.add_argument("--out", help="report path; a PNG figure is written next to it")
    v.add_argument("--no-figure", action="store_true")
    v.add_argument("--jobs", type=int, default=1, help="run checks in parallel processes")
    v.add_argument("--quiet", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="print a named element or normal form")
    e.add_argument("expression")
    e.add_argument("--order", choices=["main", "appendix"], default="main")
    e.set_defaults(func=cmd_eval)

    s = sub.add_parser("shuffle", help="q-shuffle calculator, e.g. 'xy * yx'")
    s.add_argument("expression")
    s.set_defaults(func=cmd_shuffle)

    sub.add_parser("list", help="list the registered checks").set_defaults(func=cmd_list)
    sub.add_parser("self-test", help="mutation self-test").set_defaults(func=cmd_self_test)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list:
        return cmd_list(args)
    if args.self_test:
        return cmd_self_test(args)
    if not args.command:
        parser.print_help()
        return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
