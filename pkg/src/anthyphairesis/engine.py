"""Anthyphairesis (reciprocal subtraction) and period detection.

Two detectors are provided for sqrt(N):

* :func:`anth_surd_logos` runs the remainder sequence e_{-1} = a, e_0 = b,
  e_{k+1} = e_{k-1} - I_k e_k in Z[sqrt(N)] and stops at the first pair of
  indices n < m with e_n/e_{n+1} = e_m/e_{m+1} (the Logos Criterion).
* :func:`anth_surd_state` is the textbook (P, Q) recurrence for
  (P + sqrt(D))/Q and stops at the first repeated state.  It shares no code
  with the remainder engine and serves as its oracle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence, Union

from .arith import (DomainError, SurdContext, SurdElement, is_square, isqrt,
                    ratio_key)

Magnitude = Union[int, SurdElement]


class BudgetExceeded(RuntimeError):
    """No period was found within the step budget."""

    def __init__(self, message: str, quotients: Sequence[int] = ()):
        super().__init__(message)
        self.quotients = list(quotients)


@dataclass(frozen=True)
class Step:
    index: int
    quotient: int
    remainder: Magnitude


@dataclass(frozen=True)
class LogosWitness:
    """Certificate that e_n/e_{n+1} == e_m/e_{m+1}.

    ``crossproducts`` holds (e_n * e_{m+1}, e_m * e_{n+1}); they are equal
    componentwise.
    """
    n: int
    m: int
    crossproducts: tuple[SurdElement, SurdElement]

    def __post_init__(self):
        if not self.n < self.m:
            raise DomainError(f"witness needs n < m, got ({self.n}, {self.m})")
        left, right = self.crossproducts
        if left != right:
            raise DomainError("logos witness cross-products differ")

    @property
    def indices(self) -> tuple[int, int]:
        return self.n, self.m


@dataclass(frozen=True)
class Expansion:
    """Quotient sequence [I_0, I_1, ...], finite or eventually periodic.

    ``steps`` keeps the raw run (remainders included) when the engine that
    produced the expansion tracks them; it does not take part in equality.
    """
    initial: tuple[int, ...]
    period: tuple[int, ...] | None = None
    terminated: bool = False
    witness: LogosWitness | None = field(default=None, compare=False)
    steps: tuple[Step, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.terminated and self.period is not None:
            raise DomainError("a terminated expansion has no period")
        if self.period is not None and len(self.period) == 0:
            raise DomainError("period must be non-empty")

    @property
    def periodic(self) -> bool:
        return self.period is not None

    @property
    def preperiod_length(self) -> int:
        return len(self.initial)

    def canonical(self) -> tuple[tuple[int, ...], tuple[int, ...] | None]:
        return self.initial, self.period

    def stream(self) -> Iterator[int]:
        """All quotients in order; infinite for a periodic expansion."""
        yield from self.initial
        if self.period is not None:
            yield from itertools.cycle(self.period)

    def quotients(self, count: int) -> list[int]:
        out = list(itertools.islice(self.stream(), count))
        if len(out) < count:
            raise IndexError(
                f"expansion has only {len(out)} quotients, asked for {count}")
        return out

    def __str__(self):
        head = ", ".join(map(str, self.initial))
        if self.period is None:
            return f"[{head}]"
        first, rest = self.initial[0], self.initial[1:]
        pre = "".join(f"{q}, " for q in rest)
        return f"[{first}; {pre}({','.join(map(str, self.period))})]"


def default_budget(N: int) -> int:
    return max(64, 10 * isqrt(N) * len(str(N)))


def anth_step(larger: Magnitude, smaller: Magnitude) -> tuple[int, Magnitude]:
    """One division step: ``larger = I * smaller + remainder``."""
    if not smaller > 0:
        raise DomainError(f"divisor must be positive, got {smaller}")
    if not larger > smaller:
        raise DomainError(f"need larger > smaller, got {larger} and {smaller}")
    q = larger // smaller
    r = larger - smaller * q
    return q, r


def anth_integers(a: int, b: int) -> tuple[Expansion, int]:
    """Euclid's algorithm as anthyphairesis; returns (expansion, gcd)."""
    if not (isinstance(a, int) and isinstance(b, int)):
        raise DomainError("anth_integers expects integers")
    if not a > b >= 1:
        raise DomainError(f"need a > b >= 1, got a={a}, b={b}")
    quotients = []
    steps = []
    larger, smaller = a, b
    k = 0
    while True:
        q, r = divmod(larger, smaller)
        quotients.append(q)
        steps.append(Step(k, q, r))
        if r == 0:
            break
        larger, smaller = smaller, r
        k += 1
    return Expansion(tuple(quotients), terminated=True, steps=tuple(steps)), smaller


def logos_equal(e_n: SurdElement, e_n1: SurdElement,
                e_m: SurdElement, e_m1: SurdElement) -> bool:
    """Decide e_n/e_{n+1} == e_m/e_{m+1} by cross-multiplication."""
    return e_n * e_m1 == e_m * e_n1


def canonicalize(initial: Sequence[int], period: Sequence[int]
                 ) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Shortest pre-period (keeping I_0 in it) and primitive cycle."""
    initial = list(initial)
    period = list(period)
    L = len(period)
    for d in range(1, L + 1):
        if L % d == 0 and period == period[:d] * (L // d):
            period = period[:d]
            break
    if not initial:
        initial = [period[0]]
        period = period[1:] + period[:1]
    while len(initial) > 1 and initial[-1] == period[-1]:
        initial.pop()
        period = period[-1:] + period[:-1]
    return tuple(initial), tuple(period)


def anth_surd_logos(ctx: SurdContext, max_steps: int | None = None, *,
                    seed: tuple[SurdElement, SurdElement] | None = None,
                    exhaustive: bool = False) -> Expansion:
    """Expand a/b (a**2 = N b**2) until the Logos Criterion fires.

    After step k the ratio e_k/e_{k+1} is compared against every earlier
    e_n/e_{n+1}.  By default the earlier ratios are indexed by their
    canonical value in Q(sqrt(N)) and a hit is then confirmed by
    cross-multiplication; ``exhaustive=True`` instead tries every n < k in
    turn.  Both find the same (smallest) n for the first k that fires.

    ``seed`` replaces the starting pair (a, b); the pair must satisfy
    seed[0] > seed[1] > 0.
    """
    if max_steps is None:
        max_steps = default_budget(ctx.N)
    if max_steps < 1:
        raise DomainError(f"max_steps must be >= 1, got {max_steps}")
    if seed is None:
        prev, cur = ctx.a, ctx.b
    else:
        prev, cur = seed
    remainders = [cur]            # remainders[i] == e_i
    quotients: list[int] = []
    steps: list[Step] = []
    seen: dict[tuple[int, int, int], int] = {}
    for k in range(max_steps):
        q, nxt = anth_step(prev, cur)
        quotients.append(q)
        steps.append(Step(k, q, nxt))
        if nxt.sign() == 0:
            return Expansion(tuple(quotients), terminated=True,
                             steps=tuple(steps))
        remainders.append(nxt)
        n = _find_logos(remainders, k, seen, exhaustive)
        if n is not None:
            witness = LogosWitness(n, k, (remainders[n] * remainders[k + 1],
                                          remainders[k] * remainders[n + 1]))
            initial, period = canonicalize(quotients[:n + 1],
                                           quotients[n + 1:k + 1])
            return Expansion(initial, period, witness=witness,
                             steps=tuple(steps))
        prev, cur = cur, nxt
    raise BudgetExceeded(
        f"no logos found for N={ctx.N} within {max_steps} steps", quotients)


def _find_logos(es: list[SurdElement], k: int,
                seen: dict, exhaustive: bool) -> int | None:
    e_k, e_k1 = es[k], es[k + 1]
    if exhaustive:
        for n in range(k):
            if logos_equal(es[n], es[n + 1], e_k, e_k1):
                return n
        return None
    key = ratio_key(e_k, e_k1)
    n = seen.get(key)
    if n is None:
        seen[key] = k
        return None
    if not logos_equal(es[n], es[n + 1], e_k, e_k1):
        raise AssertionError(f"ratio index collision at n={n}, k={k}")
    return n


def anth_surd_state(P: int, Q: int, D: int,
                    max_steps: int | None = None) -> Expansion:
    """Continued fraction of (P + sqrt(D))/Q by the (P, Q) state recurrence.

    I = floor((P + sqrt(D))/Q), P' = I Q - P, Q' = (D - P'^2)/Q.  The
    period is declared at the first repeated state.
    """
    if D < 1 or is_square(D):
        raise DomainError(f"D={D} must be a positive non-square")
    if Q == 0:
        raise DomainError("Q must be nonzero")
    if (D - P * P) % Q:
        # (P + sqrt(D))/Q == (P|Q| + sqrt(D Q^2)) / (Q|Q|)
        P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
    if max_steps is None:
        max_steps = default_budget(D)
    r = math.isqrt(D)
    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    for k in range(max_steps + 1):
        state = (P, Q)
        if state in seen:
            i = seen[state]
            initial, period = canonicalize(quotients[:i], quotients[i:])
            return Expansion(initial, period)
        if k == max_steps:
            break
        seen[state] = k
        if Q > 0:
            I = (P + r) // Q
        else:
            I = (-P - r - 1) // -Q
        quotients.append(I)
        P = I * Q - P
        Q = (D - P * P) // Q
    raise BudgetExceeded(
        f"no repeated state for (P, Q, D)=({P}, {Q}, {D}) within "
        f"{max_steps} steps", quotients)


@dataclass(frozen=True)
class Commensurable:
    gcd: int
    expansion: Expansion


@dataclass(frozen=True)
class Incommensurable:
    witness: LogosWitness
    expansion: Expansion


def commensurability(kind: tuple[int, int] | SurdContext,
                     max_steps: int | None = None
                     ) -> Commensurable | Incommensurable:
    """Classify a pair: finite anthyphairesis or a logos-certified period."""
    if isinstance(kind, SurdContext):
        exp = anth_surd_logos(kind, max_steps)
        return Incommensurable(exp.witness, exp)
    a, b = kind
    exp, g = anth_integers(a, b)
    return Commensurable(g, exp)
