"""Command-line front end.

Exit status: 0 on success (for ``verify``, only when the identity holds),
1 when ``verify`` finds the identity false, 2 on argument or domain
errors, 3 when a sieve or enumeration limit is exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import classify, counting, identities, oracle
from .arith import build_mobius_table, table_for
from .errors import DomainError, LimitError
from .intset import parse_set, read_set_file

EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p):
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.add_argument("--sieve-limit", type=int, metavar="N",
                   help="sieve mu once up to N and fail if more is needed")


def _set_args(p, required=True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--set", dest="set_text", metavar="S", help='e.g. "2,3,4"')
    g.add_argument("--set-file", metavar="PATH", help="one integer per line")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="coprime-counts",
        description="Exact counts of relatively prime subsets of finite integer sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("mobius", "mertens"):
        p = sub.add_parser(name, help=f"{name} function at N")
        p.add_argument("N", type=int)
        _common(p)

    p = sub.add_parser("phi", help="subsets relatively prime to n")
    _set_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int)
    _common(p)

    p = sub.add_parser("f", help="relatively prime subsets")
    _set_args(p)
    p.add_argument("--alpha", type=int)
    p.add_argument("--incremental", action="store_true",
                   help="use the insertion-order formula")
    p.add_argument("--perm-seed", type=int,
                   help="shuffle the insertion order with this seed")
    _common(p)

    p = sub.add_parser("interval", help="f or phi of the interval [l, m]")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=int)
    _common(p)

    p = sub.add_parser("coprime-count", help="elements coprime to n")
    _set_args(p)
    p.add_argument("--n", type=int, required=True)
    _common(p)

    p = sub.add_parser("classify", help="All/None/Mixed for alpha-subsets")
    _set_args(p)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--n", type=int)
    _common(p)

    p = sub.add_parser("pairwise", help="pairwise coprime (or coprime-free) test")
    _set_args(p)
    p.add_argument("--free", action="store_true")
    p.add_argument("--method", choices=classify.METHODS, default="sqrt")
    p.add_argument("--perm-seed", type=int)
    _common(p)

    p = sub.add_parser("pairwise-count", help="count pairwise coprime subsets")
    _set_args(p)
    p.add_argument("--free", action="store_true")
    _common(p)

    p = sub.add_parser("verify", help="evaluate a Mertens identity")
    p.add_argument("--identity", choices=("pair", "triple", "bound", "scaled"), required=True)
    _set_args(p, required=False)
    for flag in ("--l", "--m", "--n", "--a", "--b"):
        p.add_argument(flag, type=int)
    _common(p)

    p = sub.add_parser("oracle", help="brute-force subset count")
    _set_args(p)
    p.add_argument("--pred", choices=[k.value for k in oracle.Kind], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=int)
    _common(p)

    return parser


def _load_set(args):
    if getattr(args, "set_file", None):
        return read_set_file(args.set_file)
    if getattr(args, "set_text", None) is None:
        raise DomainError(f"--set or --set-file is required for {args.command}")
    return parse_set(args.set_text)


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise DomainError(f"missing {', '.join(missing)}")


def _perm(seed, size):
    if seed is None:
        return None
    perm = list(range(size))
    random.Random(seed).shuffle(perm)
    return perm


def _dispatch(args, table) -> dict:
    """Run one subcommand; returns the JSON payload (``value`` is the plain output)."""
    cmd = args.command
    kw = {"table": table}

    if cmd in ("mobius", "mertens"):
        if args.N < 1:
            raise DomainError(f"N must be >= 1, got {args.N}")
        t = table_for(args.N, table)
        value = t.mobius(args.N) if cmd == "mobius" else t.mertens(args.N)
        return {"value": value}

    if cmd == "interval":
        if args.n is None:
            value = counting.f_interval(args.l, args.m, args.alpha, **kw)
        else:
            value = counting.phi_interval(args.l, args.m, args.n, args.alpha, **kw)
        return {"value": value}

    if cmd == "verify":
        if args.identity == "pair":
            _require(args, "m", "n")
            report = identities.mertens_pair(args.m, args.n, **kw)
        elif args.identity == "triple":
            _require(args, "l", "m", "n")
            report = identities.mertens_triple(args.l, args.m, args.n, **kw)
        elif args.identity == "bound":
            report = identities.mertens_bound(_load_set(args), **kw)
        else:
            _require(args, "a", "b")
            report = identities.scaled_mertens(_load_set(args), args.a, args.b, **kw)
        return {**report.as_dict(), "value": report.holds}

    A = _load_set(args)

    if cmd == "phi":
        if args.alpha is None:
            return {"value": counting.phi_set(A, args.n, **kw)}
        return {"value": counting.phi_alpha(A, args.n, args.alpha, **kw)}

    if cmd == "f":
        if args.incremental or args.perm_seed is not None:
            terms = counting.f_incremental_terms(A, _perm(args.perm_seed, len(A)), args.alpha, **kw)
            return {"value": sum(terms), "terms": [str(t) for t in terms]}
        if args.alpha is None:
            return {"value": counting.f_set(A, **kw)}
        return {"value": counting.f_alpha(A, args.alpha, **kw)}

    if cmd == "coprime-count":
        return {"value": counting.coprime_element_count(A, args.n, **kw)}

    if cmd == "classify":
        if args.n is None:
            status = classify.alpha_status(A, args.alpha, **kw)
        else:
            status = classify.alpha_status_to_n(A, args.alpha, args.n, **kw)
        return {"value": str(status)}

    if cmd == "pairwise":
        test = classify.is_coprime_free if args.free else classify.is_pairwise_coprime
        return {"value": test(A, args.method, _perm(args.perm_seed, len(A)), **kw)}

    if cmd == "pairwise-count":
        count = (classify.count_coprime_free_subsets if args.free
                 else classify.count_pairwise_coprime_subsets)
        return {"value": count(A, **kw)}

    if cmd == "oracle":
        pred = oracle.SubsetPredicate(args.pred, args.n, args.alpha)
        return {"value": oracle.brute_count(A, pred)}

    raise DomainError(f"unknown command {cmd!r}")  # pragma: no cover


def _plain(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _jsonable(payload: dict) -> dict:
    out = {}
    for k, v in payload.items():
        # integers travel as decimal strings; they routinely exceed 64 bits
        out[k] = str(v) if isinstance(v, int) and not isinstance(v, bool) else v
    return out


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        table = None
        if args.sieve_limit is not None:
            table = build_mobius_table(args.sieve_limit)
        payload = _dispatch(args, table)
    except LimitError as exc:
        print(f"coprime-counts: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (DomainError, OSError) as exc:
        print(f"coprime-counts: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.json:
        print(json.dumps({"command": args.command, **_jsonable(payload)}))
    else:
        print(_plain(payload["value"]))
    if args.command == "verify" and not payload["value"]:
        return EXIT_FALSE
    return 0


if __name__ == "__main__":
    sys.exit(main())
