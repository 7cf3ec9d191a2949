"""Convergents, Pell residues and finite approximations of an expansion."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .arith import DomainError, RangeError, SurdContext
from .engine import Expansion


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int

    def __post_init__(self):
        if self.q <= 0:
            raise DomainError(f"denominator must be positive, got {self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise DomainError(f"{self.p}/{self.q} is not in lowest terms")

    def __str__(self):
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class SideDiameterPair:
    s: int
    d: int
    k: int

    @property
    def residue(self) -> int:
        return self.d * self.d - 2 * self.s * self.s


@dataclass(frozen=True)
class TrueJudgement:
    level: int
    prefix: tuple[int, ...]
    approx: Convergent


def convergents(quotients: Sequence[int] | Expansion, count: int) -> list[Convergent]:
    """First ``count`` convergents p_k/q_k of [I_0; I_1, ...].

    Uses p_k = I_k p_{k-1} + p_{k-2}, q_k = I_k q_{k-1} + q_{k-2} from
    p_{-1}/q_{-1} = 1/0 and p_{-2}/q_{-2} = 0/1.
    """
    if isinstance(quotients, Expansion):
        try:
            quotients = quotients.quotients(count)
        except IndexError as exc:
            raise RangeError(str(exc)) from None
    if count < 1:
        raise RangeError(f"count must be >= 1, got {count}")
    if not quotients:
        raise DomainError("no quotients given")
    if count > len(quotients):
        raise RangeError(
            f"only {len(quotients)} quotients available, asked for {count}")
    if quotients[0] < 1 or any(x < 1 for x in quotients[1:count]):
        raise DomainError("quotients must all be >= 1")
    out = []
    p0, q0, p1, q1 = 0, 1, 1, 0
    for I in quotients[:count]:
        p0, q0, p1, q1 = p1, q1, I * p1 + p0, I * q1 + q0
        # convergents come out coprime; a nontrivial gcd means a bug upstream
        assert math.gcd(p1, q1) == 1, (p1, q1)
        out.append(Convergent(p1, q1))
    return out


def pell_residue(N: int, c: Convergent) -> int:
    """p**2 - N q**2."""
    SurdContext(N)
    return c.p * c.p - N * c.q * c.q


def side_diameter(k: int) -> SideDiameterPair:
    """k-th side and diameter numbers: s' = s + d, d' = 2s + d from (1, 1)."""
    if k < 1:
        raise RangeError(f"k must be >= 1, got {k}")
    s, d = 1, 1
    for _ in range(k - 1):
        s, d = s + d, 2 * s + d
    return SideDiameterPair(s, d, k)


def true_judgement(expansion: Expansion, level: int) -> TrueJudgement:
    """Truncate the quotient stream at ``level`` terms with its convergent."""
    if level < 1:
        raise RangeError(f"level must be >= 1, got {level}")
    try:
        prefix = expansion.quotients(level)
    except IndexError as exc:
        raise RangeError(str(exc)) from None
    return TrueJudgement(level, tuple(prefix), convergents(prefix, level)[-1])


def period_end_index(expansion: Expansion) -> int:
    """0-based index of the convergent built from every quotient of the
    first period except its last one.

    For sqrt(N) = [I_0; (c_1 ... c_L)] this is L - 1, and that convergent
    solves p**2 - N q**2 = +-1.
    """
    if expansion.period is None:
        raise DomainError("expansion is not periodic")
    return expansion.preperiod_length + len(expansion.period) - 2
