"""Exact arithmetic in Z[sqrt(N)].

An element ``SurdElement(ctx, m, n)`` stands for ``m*a + n*b`` where the two
magnitudes satisfy ``a**2 == N * b**2``; measured in units of ``b`` that is
the real number ``m*sqrt(N) + n``.  Python ints are already arbitrary
precision, so no limb arithmetic is needed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class DomainError(ValueError):
    """An operand lies outside the domain an operation is defined on."""


class RangeError(IndexError):
    """A requested index or count is beyond what is available."""


def isqrt(n: int) -> int:
    """Largest ``r`` with ``r*r <= n``."""
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


@dataclass(frozen=True)
class SurdContext:
    N: int

    def __post_init__(self):
        if not isinstance(self.N, int) or isinstance(self.N, bool):
            raise DomainError(f"N must be an int, got {self.N!r}")
        if self.N < 2:
            raise DomainError(f"N must be >= 2, got {self.N}")
        if is_square(self.N):
            raise DomainError(f"N={self.N} is a perfect square")

    @property
    def a(self) -> SurdElement:
        """The magnitude with a**2 = N b**2, i.e. sqrt(N)."""
        return SurdElement(self, 1, 0)

    @property
    def b(self) -> SurdElement:
        return SurdElement(self, 0, 1)

    def element(self, m: int, n: int) -> SurdElement:
        return SurdElement(self, m, n)


def _sign_of(m: int, n: int, N: int) -> int:
    # sign of m*sqrt(N) + n, exact
    if m == 0:
        return (n > 0) - (n < 0)
    if n == 0 or (m > 0) == (n > 0):
        return 1 if m > 0 else -1
    # opposite signs: the larger of |m|sqrt(N) and |n| wins; never tied
    # because sqrt(N) is irrational
    if m * m * N > n * n:
        return 1 if m > 0 else -1
    return 1 if n > 0 else -1


def _floor_surd_quotient(A: int, B: int, d: int, N: int) -> int:
    """floor((A*sqrt(N) + B) / d) for d != 0 and N non-square."""
    if d < 0:
        A, B, d = -A, -B, -d
    # floor(A*sqrt(N)) = floor(sqrt(A^2 N)) for A >= 0, and
    # -floor(sqrt(A^2 N)) - 1 for A < 0 (A^2 N is never a square unless A == 0)
    r = math.isqrt(A * A * N)
    if A < 0:
        r = -r - 1
    # floor((x + B)/d) == floor((floor(x) + B)/d) for integer B, positive d
    return (r + B) // d


@dataclass(frozen=True)
class SurdElement:
    ctx: SurdContext
    m: int
    n: int

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> SurdElement | None:
        if isinstance(other, SurdElement):
            if other.ctx != self.ctx:
                raise DomainError(
                    f"mismatched contexts N={self.ctx.N} and N={other.ctx.N}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return SurdElement(self.ctx, 0, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SurdElement(self.ctx, self.m + o.m, self.n + o.n)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return SurdElement(self.ctx, self.m - o.m, self.n - o.n)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return SurdElement(self.ctx, -self.m, -self.n)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return SurdElement(self.ctx, self.m * other, self.n * other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        N = self.ctx.N
        return SurdElement(self.ctx,
                           self.m * o.n + o.m * self.n,
                           self.m * o.m * N + self.n * o.n)

    __rmul__ = __mul__

    def __floordiv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return surd_floor_div(self, o)

    # -- order ------------------------------------------------------------

    def sign(self) -> int:
        return _sign_of(self.m, self.n, self.ctx.N)

    def _cmp(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __float__(self):
        return self.m * math.sqrt(self.ctx.N) + self.n

    def coefficients(self) -> tuple[int, int]:
        return self.m, self.n

    def __repr__(self):
        return f"SurdElement(N={self.ctx.N}, m={self.m}, n={self.n})"

    def __str__(self):
        return format_combination(self.m, self.n)


def format_combination(m: int, n: int, first: str = "a", second: str = "b") -> str:
    """Render ``m*a + n*b`` the way the remainders are written by hand.

    Positive terms come first, so ``(-2, 9)`` reads ``9b - 2a``.
    """
    terms = [(m, first), (n, second)]
    terms = [t for t in terms if t[0] != 0]
    if not terms:
        return "0"
    terms.sort(key=lambda t: t[0] < 0)
    out = []
    for i, (c, sym) in enumerate(terms):
        mag = abs(c)
        body = sym if mag == 1 else f"{mag}{sym}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def surd_sign(x: SurdElement) -> int:
    return x.sign()


def surd_add(x: SurdElement, y: SurdElement) -> SurdElement:
    return x + y


def surd_sub(x: SurdElement, y: SurdElement) -> SurdElement:
    return x - y


def surd_scale(x: SurdElement, k: int) -> SurdElement:
    return x * k


def surd_mul(x: SurdElement, y: SurdElement) -> SurdElement:
    if not isinstance(y, SurdElement):
        raise DomainError("surd_mul expects two surd elements")
    return x * y


def surd_floor_div(x: SurdElement, y: SurdElement) -> int:
    """Return the I >= 0 with ``0 <= x - I*y < y``.

    Both operands must be strictly positive.  The quotient is obtained by
    multiplying through by the conjugate of ``y``,

        x / y = (A sqrt(N) + B) / d,

    and taking an exact floor with one integer square root, so the cost does
    not depend on the size of the quotient.
    """
    if x.ctx != y.ctx:
        raise DomainError(f"mismatched contexts N={x.ctx.N} and N={y.ctx.N}")
    if x.sign() <= 0 or y.sign() <= 0:
        raise DomainError("surd_floor_div needs strictly positive operands")
    N = x.ctx.N
    m1, n1, m2, n2 = x.m, x.n, y.m, y.n
    A = m1 * n2 - n1 * m2
    B = n1 * n2 - m1 * m2 * N
    d = n2 * n2 - m2 * m2 * N
    return _floor_surd_quotient(A, B, d, N)


def surd_floor_div_search(x: SurdElement, y: SurdElement) -> int:
    """Same quotient by doubling search on repeated subtraction.

    Slower cross-check for :func:`surd_floor_div`.
    """
    if x.sign() <= 0 or y.sign() <= 0:
        raise DomainError("surd_floor_div needs strictly positive operands")
    hi = 1
    while (x - y * hi).sign() >= 0:
        hi *= 2
    lo = 0  # invariant: x - lo*y >= 0 > x - hi*y
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if (x - y * mid).sign() >= 0:
            lo = mid
        else:
            hi = mid
    return lo


def ratio_key(x: SurdElement, y: SurdElement) -> tuple[int, int, int]:
    """Canonical (A, B, d) with x/y = (A sqrt(N) + B)/d, d > 0, gcd 1.

    Two ratios over the same context are equal iff their keys are equal.
    """
    N = x.ctx.N
    A = x.m * y.n - x.n * y.m
    B = x.n * y.n - x.m * y.m * N
    d = y.n * y.n - y.m * y.m * N
    if d == 0:
        raise DomainError("division by zero surd element")
    if d < 0:
        A, B, d = -A, -B, -d
    g = math.gcd(A, B, d)
    return A // g, B // g, d // g
