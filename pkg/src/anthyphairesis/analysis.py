"""Batch checks over many expansions: palindromes, scaling, species."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .arith import DomainError, SurdContext, is_square
from .engine import Expansion, anth_integers, anth_surd_logos

THEODORUS_RANGE = range(2, 18)


@dataclass(frozen=True)
class PalindromeReport:
    N: int
    initial_quotient: int
    period: tuple[int, ...]
    inner_palindrome: bool
    last_is_double: bool

    @property
    def holds(self) -> bool:
        return self.inner_palindrome and self.last_is_double


def verify_palindrome(N: int, max_steps: int | None = None) -> PalindromeReport:
    """Check sqrt(N) = [I_0; (c_1, ..., c_{L-1}, 2 I_0)] with a palindromic core."""
    exp = anth_surd_logos(SurdContext(N), max_steps)
    period = exp.period
    inner = period[:-1]
    return PalindromeReport(
        N=N,
        initial_quotient=exp.initial[0],
        period=period,
        inner_palindrome=inner == inner[::-1],
        last_is_double=period[-1] == 2 * exp.initial[0],
    )


def non_squares(lo: int, hi: int) -> list[int]:
    """Non-square integers in [lo, hi]."""
    return [N for N in range(max(lo, 2), hi + 1) if not is_square(N)]


def palindrome_sweep(max_n: int, workers: int | None = None) -> list[PalindromeReport]:
    """Reports for every non-square 2 <= N <= max_n, in ascending N.

    ``workers`` > 1 spreads the work over a process pool.
    """
    ns = non_squares(2, max_n)
    if workers and workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(verify_palindrome, ns, chunksize=64))
    return [verify_palindrome(N) for N in ns]


def theodorus_batch() -> dict[int, Expansion]:
    """Logos-engine expansions of sqrt(N) for non-square N in 2..17."""
    return {N: anth_surd_logos(SurdContext(N)) for N in THEODORUS_RANGE
            if not is_square(N)}


def topica_check(a: int, b: int, scale: int) -> bool:
    """Anth(scale*a, scale*b) == Anth(a, b) for an integer pair."""
    if scale < 1:
        raise DomainError(f"scale must be >= 1, got {scale}")
    base, _ = anth_integers(a, b)
    scaled, _ = anth_integers(scale * a, scale * b)
    return base.initial == scaled.initial


def surd_scaling_check(N: int, t: int) -> bool:
    """Starting the surd engine from (t a, t b) gives the same quotients."""
    if t < 1:
        raise DomainError(f"t must be >= 1, got {t}")
    ctx = SurdContext(N)
    base = anth_surd_logos(ctx)
    scaled = anth_surd_logos(ctx, seed=(ctx.a * t, ctx.b * t))
    raw = [s.quotient for s in base.steps]
    raw_scaled = [s.quotient for s in scaled.steps]
    return (raw == raw_scaled and base.canonical() == scaled.canonical()
            and base.witness.indices == scaled.witness.indices)


def species_count(expansion: Expansion) -> int:
    """Number of logoi in one period, plus one."""
    if expansion.period is None:
        raise DomainError("species count needs a periodic expansion")
    return len(expansion.period) + 1
