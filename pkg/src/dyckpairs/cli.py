"""Command line entry point: ``dyckpairs <command> ...``.

Exit status is 0 on success, 1 for malformed input and 2 when the input is
well formed but rejected (an inadmissible pair, mismatched semilengths, a
failed verification).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijection as bij
from .corpus import SizeCapError, count_avoiding, gen_avoiding, gen_dyck, gen_permutations, max_n
from .dyckpath import InvalidCode, InvalidPath, DyckPath, parse_path, render_ascii, to_code
from .involution import kreweras, lprime
from .permutation import InvalidPermutation, Permutation, canonical_representative, ltr_minima, rtl_maxima
from .poset import hasse_dot, leq, upper_covers
from .verify import SUITES, as_dicts, verify


class UsageError(Exception):
    pass


class Rejected(Exception):
    """Well-formed input that the domain rejects; ``output`` still goes to stdout."""

    def __init__(self, message: str, output=None):
        super().__init__(message)
        self.output = output


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _path_json(path: DyckPath) -> dict:
    return {"path": path.steps, "code": to_code(path).literal()}


def _perm_record(perm: Permutation, pair: bij.PathPair) -> dict:
    mins, maxs = ltr_minima(perm), rtl_maxima(perm)
    return {
        "perm": str(perm),
        "pathP": pair.first.steps,
        "pathQ": pair.second.steps,
        "codes": {"P": to_code(pair.first).literal(), "Q": to_code(pair.second).literal()},
        "profiles": {
            "vmin": list(mins.values),
            "pmin": list(mins.positions),
            "vmax": list(maxs.values),
            "pmax": list(maxs.positions),
        },
    }


def _show_path(path: DyckPath, args) -> str:
    return to_code(path).literal() if args.code else path.steps


def _same_length(p: DyckPath, q: DyckPath) -> None:
    if p.semilength != q.semilength:
        raise Rejected(f"semilengths differ: {p.semilength} vs {q.semilength}")


def cmd_map(args):
    perm = Permutation.parse(args.perm)
    pair = bij.nu(perm)
    if args.json:
        return _perm_record(perm, pair)
    return f"{_show_path(pair.first, args)}\n{_show_path(pair.second, args)}"


def cmd_unmap(args):
    p, q = parse_path(args.pathP), parse_path(args.pathQ)
    _same_length(p, q)
    try:
        alpha = bij.nu_inv(p, q)
    except bij.NotAdmissible:
        raise Rejected("not admissible") from None
    if args.json:
        record = _perm_record(alpha, bij.PathPair(p, q))
        record["sigma"] = str(bij.lambda_inv_123(p))
        record["tau"] = str(bij.mu_inv_123(q))
        return record
    return str(alpha)


def cmd_admissible(args):
    p, q = parse_path(args.pathP), parse_path(args.pathQ)
    _same_length(p, q)
    ok = bij.is_admissible(p, q)
    if args.json:
        return {"pathP": p.steps, "pathQ": q.steps, "admissible": ok}
    return "yes" if ok else "no"


def cmd_canon(args):
    perm = Permutation.parse(args.perm)
    canon = canonical_representative(perm)
    if args.json:
        return _perm_record(canon, bij.nu(canon)) | {"input": str(perm)}
    return str(canon)


def _unary_path(func):
    def run(args):
        out = func(parse_path(args.path))
        return _path_json(out) if args.json else _show_path(out, args)

    return run


def cmd_leq(args):
    p, q = parse_path(args.pathP), parse_path(args.pathQ)
    _same_length(p, q)
    ok = leq(p, q)
    if args.json:
        return {"pathP": p.steps, "pathQ": q.steps, "leq": ok}
    return "yes" if ok else "no"


def cmd_covers(args):
    if args.dot:
        if args.n is None:
            raise UsageError("--dot needs --n")
        return hasse_dot(gen_dyck(args.n, cap=args.max_n), name=f"dyck{args.n}")
    if args.path is None:
        raise UsageError("give a path, or --dot --n N")
    ups = upper_covers(parse_path(args.path))
    if args.json:
        return [_path_json(u) for u in ups]
    return "\n".join(_show_path(u, args) for u in ups)


def cmd_enumerate(args):
    if args.paths:
        items = gen_dyck(args.n, cap=args.max_n)
        if args.json:
            return [_path_json(p) for p in items]
        return "\n".join(_show_path(p, args) for p in items)
    if args.avoid:
        items = gen_avoiding(args.n, args.avoid, cap=args.max_n)
    else:
        items = gen_permutations(args.n, cap=args.max_n)
    if args.json:
        return [_perm_record(s, bij.nu(s)) for s in items]
    return "\n".join(str(s) for s in items)


def cmd_count(args):
    if args.paths:
        total = sum(1 for _ in gen_dyck(args.n, cap=args.max_n))
    elif args.avoid:
        total = count_avoiding(args.n, args.avoid, cap=args.max_n)
    else:
        total = sum(1 for _ in gen_permutations(args.n, cap=args.max_n))
    if args.json:
        return {"n": args.n, "avoid": args.avoid, "paths": args.paths, "count": total}
    return str(total)


def cmd_render(args):
    path = parse_path(args.path)
    if args.json:
        return {"path": path.steps, "ascii": render_ascii(path)}
    return render_ascii(path)


def cmd_verify(args):
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    results = verify(args.n, args.suite, jobs=args.jobs, seed=args.seed, samples=args.samples, cap=args.max_n)
    failed = [r for r in results if not r.passed]
    out = {"passed": not failed, "results": as_dicts(results)} if args.json else "\n".join(r.line() for r in results)
    if failed:
        raise Rejected(f"{len(failed)} check(s) failed", out)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dyckpairs", description="1234-avoiding permutations and pairs of Dyck paths")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--code", action="store_true", help="print paths as code literals")
    sizes = argparse.ArgumentParser(add_help=False)
    sizes.add_argument("--max-n", type=int, default=None, help=f"size cap (default {max_n()})")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("map", parents=[common], help="permutation -> (lambda, mu) paths")
    p.add_argument("perm")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("unmap", parents=[common], help="admissible pair -> 1234-avoiding permutation")
    p.add_argument("pathP")
    p.add_argument("pathQ")
    p.set_defaults(func=cmd_unmap)

    p = sub.add_parser("admissible", parents=[common], help="is the pair in the image of nu?")
    p.add_argument("pathP")
    p.add_argument("pathQ")
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("canon", parents=[common], help="1234-avoiding member of the profile class")
    p.add_argument("perm")
    p.set_defaults(func=cmd_canon)

    for name, func, helptext in (
        ("lprime", lprime, "apply L'"),
        ("kreweras", kreweras, "apply the Kreweras involution L"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("path")
        p.set_defaults(func=_unary_path(func))

    p = sub.add_parser("leq", parents=[common], help="is pathP <= pathQ?")
    p.add_argument("pathP")
    p.add_argument("pathQ")
    p.set_defaults(func=cmd_leq)

    p = sub.add_parser("covers", parents=[common, sizes], help="upper covers of a path, or a DOT Hasse diagram")
    p.add_argument("path", nargs="?")
    p.add_argument("--list", action="store_true", help="list upper covers (default)")
    p.add_argument("--dot", action="store_true", help="Hasse diagram of all paths of semilength --n")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_covers)

    for name, func in (("enumerate", cmd_enumerate), ("count", cmd_count)):
        p = sub.add_parser(name, parents=[common, sizes])
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--avoid", choices=["123", "1234"])
        p.add_argument("--paths", action="store_true", help="Dyck paths instead of permutations")
        p.set_defaults(func=func)

    p = sub.add_parser("render", parents=[common], help="ASCII drawing of a path")
    p.add_argument("path")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", parents=[common, sizes], help="run the property suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--suite", default="all", help=f"one of: all, {', '.join(SUITES)}")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20000, help="pairs per sampled check above the exhaustive limit")
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(result, as_json: bool, stream) -> None:
    if result is None:
        return
    if as_json:
        print(json.dumps(result, ensure_ascii=False, sort_keys=True), file=stream)
    elif result != "":
        print(result, file=stream)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    try:
        _emit(args.func(args), as_json, sys.stdout)
    except Rejected as exc:
        _emit(exc.output, as_json, sys.stdout)
        print(exc, file=sys.stderr)
        return 2
    except (InvalidPermutation, InvalidPath, InvalidCode, SizeCapError, UsageError) as exc:
        print(f"dyckpairs: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
