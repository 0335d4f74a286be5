"""Spread polynomials and their cyclotomic-style factors.

S_0 = 0, S_1 = s and S_n = 2(1 - 2s) S_{n-1} - S_{n-2} + 2s. The triple
(S_{n-1}(s), s, S_n(s)) always satisfies the triple spread formula.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Tuple

from .errors import InexactDivision


class IntPolynomial:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of s**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _lift(other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, s):
        """Horner evaluation at ``s`` (any scalar type)."""
        acc = s - s
        for c in reversed(self.coeffs):
            acc = acc * s + c
        return acc

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        """self(inner(s))."""
        acc = IntPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def divmod(self, divisor: "IntPolynomial"):
        """Long division over Q; returns (quotient, remainder) as Fraction lists."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(x) for x in self.coeffs]
        d = divisor.coeffs
        q = [Fraction(0)] * max(len(rem) - len(d) + 1, 0)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + len(d) - 1] / d[-1]
            q[k] = c
            if c:
                for j, y in enumerate(d):
                    rem[k + j] -= c * y
        return q, rem[: len(d) - 1]

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod(divisor)
        if any(r):
            raise InexactDivision(f"{self} is not divisible by {divisor}")
        if any(c.denominator != 1 for c in q):
            raise InexactDivision(f"{self} / {divisor} has non-integer coefficients")
        return IntPolynomial(int(c) for c in q)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


def format_poly(p: IntPolynomial, var: str = "s") -> str:
    """Ascending-power text, e.g. ``9*s - 24*s^2 + 16*s^3``."""
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


_S = IntPolynomial([0, 1])
_TWO_S = IntPolynomial([0, 2])
_STEP = IntPolynomial([2, -4])  # 2(1 - 2s)


@lru_cache(maxsize=None)
def spread_poly(n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError("spread polynomials are indexed by n >= 0")
    if n == 0:
        return IntPolynomial()
    prev, cur = IntPolynomial(), _S
    for _ in range(n - 1):
        prev, cur = cur, _STEP * cur - prev + _TWO_S
    return cur


def spread_poly_eval(n: int, s):
    return spread_poly(n)(s)


def compose(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p.compose(q)


def composition_check(n: int, m: int) -> bool:
    """S_n o S_m == S_nm, coefficient by coefficient."""
    if n < 1 or m < 1:
        raise ValueError("composition identity is stated for n, m >= 1")
    return compose(spread_poly(n), spread_poly(m)) == spread_poly(n * m)


def _divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def spread_cyclotomic(k: int) -> IntPolynomial:
    """phi_k, defined by S_n = product of phi_d over the divisors d of n."""
    if k < 1:
        raise ValueError("k must be positive")
    below = IntPolynomial([1])
    for d in _divisors(k)[:-1]:
        below = below * spread_cyclotomic(d)
    return spread_poly(k).exact_div(below)


@lru_cache(maxsize=None)
def chebyshev_t(n: int) -> IntPolynomial:
    """Chebyshev polynomial of the first kind in x, by its own recursion."""
    if n == 0:
        return IntPolynomial([1])
    prev, cur = IntPolynomial([1]), IntPolynomial([0, 1])
    x2 = IntPolynomial([0, 2])
    for _ in range(n - 1):
        prev, cur = cur, x2 * cur - prev
    return cur


def chebyshev_relation_check(n: int) -> bool:
    """S_n(s) == (1 - T_n(1 - 2s)) / 2 as polynomials."""
    if n < 0:
        raise ValueError("n must be >= 0")
    shifted = chebyshev_t(n).compose(IntPolynomial([1, -2]))
    twice = IntPolynomial([1]) - shifted
    if any(c % 2 for c in twice.coeffs):
        return False
    return IntPolynomial(c // 2 for c in twice.coeffs) == spread_poly(n)
