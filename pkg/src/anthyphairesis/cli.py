"""Command-line front end.

Exit codes: 0 success, 1 usage error (or a failed sweep), 2 domain error,
3 step budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .analysis import palindrome_sweep, theodorus_batch
from .approx import convergents, pell_residue
from .arith import DomainError, SurdContext, SurdElement, format_combination
from .engine import BudgetExceeded, Expansion, anth_integers, anth_surd_logos

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def remainder_name(k: int) -> str:
    if k == -1:
        return "a"
    if k == 0:
        return "b"
    return f"e{k}"


def remainder_run(ctx: SurdContext, quotients: Sequence[int]) -> list[SurdElement]:
    """[e_1, e_2, ...] from e_{k+1} = e_{k-1} - I_k e_k."""
    prev, cur = ctx.a, ctx.b
    out = []
    for q in quotients:
        prev, cur = cur, prev - cur * q
        out.append(cur)
    return out


def _times(q: int, name: str) -> str:
    return name if q == 1 else f"{q}{name}"


def render_table(exp: Expansion, ctx: SurdContext, steps: int) -> str:
    qs = exp.quotients(steps)
    es = remainder_run(ctx, qs)
    lines = [f"a^2 = {ctx.N}b^2"]
    for k, (q, e) in enumerate(zip(qs, es)):
        big, small, rem = (remainder_name(k - 1), remainder_name(k),
                           remainder_name(k + 1))
        lines.append(f"{big} = {_times(q, small)} + {rem}, "
                     f"{rem} < {small}, {rem} = {format_combination(e.m, e.n)}")
    w = exp.witness
    lines.append(f"logos: {remainder_name(w.n)}/{remainder_name(w.n + 1)} = "
                 f"{remainder_name(w.m)}/{remainder_name(w.m + 1)}")
    left, right = w.crossproducts
    lines.append(
        f"check: {remainder_name(w.n)}*{remainder_name(w.m + 1)} = "
        f"{remainder_name(w.m)}*{remainder_name(w.n + 1)} = "
        f"{format_combination(left.m, left.n)}")
    lines.append(f"anth(a, b) = {exp}")
    return "\n".join(lines)


def output_record(exp: Expansion, ctx: SurdContext, steps: int) -> dict:
    qs = exp.quotients(steps)
    es = remainder_run(ctx, qs)
    cs = convergents(qs, steps)
    return {
        "n": str(ctx.N),
        "initial": [str(q) for q in exp.initial],
        "period": [str(q) for q in exp.period],
        "preperiod_length": str(exp.preperiod_length),
        "logos_witness": [str(exp.witness.n), str(exp.witness.m)],
        "remainders": [[str(e.m), str(e.n)] for e in es],
        "convergents": [[str(c.p), str(c.q)] for c in cs],
    }


def dump_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cmd_expand(n: int, steps: int | None = None, fmt: str = "table",
               max_steps: int | None = None) -> str:
    ctx = SurdContext(n)
    exp = anth_surd_logos(ctx, max_steps)
    if steps is None:
        steps = exp.witness.m + 1
    if steps < 1:
        raise UsageError("--steps must be >= 1")
    if fmt == "json":
        return dump_json(output_record(exp, ctx, steps))
    return render_table(exp, ctx, steps)


def cmd_convergents(n: int, count: int, fmt: str = "table",
                    max_steps: int | None = None) -> str:
    if count < 1:
        raise UsageError("--count must be >= 1")
    exp = anth_surd_logos(SurdContext(n), max_steps)
    cs = convergents(exp, count)
    if fmt == "json":
        return dump_json([{"p": str(c.p), "q": str(c.q),
                           "residue": str(pell_residue(n, c))} for c in cs])
    return "\n".join(f"{k}: {c.p}/{c.q} residue {pell_residue(n, c)}"
                     for k, c in enumerate(cs))


def cmd_palindrome(max_n: int, workers: int | None = None) -> tuple[str, bool]:
    if max_n < 2:
        raise UsageError("--max-n must be >= 2")
    reports = palindrome_sweep(max_n, workers)
    lines = [f"{r.N}: [{r.initial_quotient}; ({','.join(map(str, r.period))})]"
             " fails" for r in reports if not r.holds]
    failed = len(lines)
    if failed:
        lines.append(f"checked {len(reports)} non-squares, {failed} fail")
    else:
        lines.append(f"checked {len(reports)} non-squares, all hold")
    return "\n".join(lines), failed == 0


def cmd_theodorus() -> str:
    return "\n".join(f"{N}: {exp} witness ({exp.witness.n},{exp.witness.m})"
                     for N, exp in theodorus_batch().items())


def cmd_gcd(a: int, b: int) -> str:
    if a < b:
        a, b = b, a
    exp, g = anth_integers(a, b)
    return f"anth({a}, {b}) = {exp}\ngcd = {g}"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="anth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("expand", help="anthyphairesis of sqrt(N) with logos")
    p.add_argument("n", type=int)
    p.add_argument("--steps", type=int)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--max-steps", type=int)

    p = sub.add_parser("convergents", help="convergents of sqrt(N)")
    p.add_argument("n", type=int)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--max-steps", type=int)

    p = sub.add_parser("palindrome", help="palindromic period sweep")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--workers", type=int)

    sub.add_parser("theodorus", help="sqrt(N) for non-square N in 2..17")

    p = sub.add_parser("gcd", help="anthyphairesis of two integers")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    status = EXIT_OK
    try:
        if args.command == "expand":
            out = cmd_expand(args.n, args.steps, args.format, args.max_steps)
        elif args.command == "convergents":
            out = cmd_convergents(args.n, args.count, args.format,
                                  args.max_steps)
        elif args.command == "palindrome":
            out, ok = cmd_palindrome(args.max_n, args.workers)
            status = EXIT_OK if ok else 1
        elif args.command == "theodorus":
            out = cmd_theodorus()
        else:
            out = cmd_gcd(args.a, args.b)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"anth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"anth: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(f"anth: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(out)
    return status
