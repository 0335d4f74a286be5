"""Scalar fields: exact rationals, prime fields F_p (p odd) and float64.

Geometry code never inspects scalars directly; it relies on ordinary
operators, so ``Fraction``, :class:`Residue` and ``float`` values flow
through the same formulas. A :class:`Field` supplies conversion,
parsing, printing and square roots for its carrier.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

from sympy import isprime

from .errors import (
    CharacteristicTwo,
    DivisionByZero,
    InexactField,
    NonPrimeModulus,
    NotInField,
    ParseError,
    UnsupportedField,
)

_INT_RE = re.compile(r"^\s*([+-]?\d+)\s*$")
_FRAC_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")
_DESC_RE = re.compile(r"^\s*(?:F_?|GF\(?|p=?)(\d+)\)?\s*$", re.IGNORECASE)

# below this modulus square roots are found by direct search
_SQRT_SEARCH_LIMIT = 1 << 16


class Residue:
    """An element of the prime field F_p, stored as a residue in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise TypeError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.v * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "Residue":
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Residue(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o, self.p) * self.inverse()

    def __neg__(self):
        return Residue(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Residue(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Residue({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


Scalar = Union[Fraction, Residue, float]


@dataclass(frozen=True)
class FieldDescriptor:
    """Which field to build: ``rational``, ``prime`` (with ``p``) or ``float``."""

    kind: str
    p: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> "FieldDescriptor":
        t = text.strip()
        low = t.lower()
        if low in ("q", "rational", "rationals", "qq"):
            return cls("rational")
        if low in ("float", "float64", "r", "real"):
            return cls("float")
        m = _DESC_RE.match(t)
        if m:
            return cls("prime", int(m.group(1)))
        raise ParseError(f"unknown field descriptor {text!r}")

    def __str__(self):
        if self.kind == "prime":
            return f"F{self.p}"
        return "Q" if self.kind == "rational" else "float"


class Field:
    """Common interface; see the concrete subclasses."""

    exact = True
    characteristic = 0

    def __call__(self, value) -> Scalar:  # pragma: no cover - abstract
        raise NotImplementedError

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError

    def format(self, x: Scalar) -> str:
        raise NotImplementedError

    def sqrt(self, x: Scalar) -> Optional[Tuple[Scalar, Scalar]]:
        raise UnsupportedField(f"square roots are not supported in {self}")

    def is_square(self, x: Scalar) -> bool:
        return self.sqrt(x) is not None

    def sort_key(self, x: Scalar):
        return x

    def contains(self, x) -> bool:
        raise NotImplementedError


class RationalField(Field):
    """The rational numbers, backed by :class:`fractions.Fraction`."""

    descriptor = FieldDescriptor("rational")

    def __call__(self, value) -> Fraction:
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (Residue, float)):
            raise NotInField(f"{value!r} is not a rational scalar")
        return Fraction(value)

    def parse(self, text: str) -> Fraction:
        m = _INT_RE.match(text)
        if m:
            return Fraction(int(m.group(1)))
        m = _FRAC_RE.match(text)
        if not m:
            raise ParseError(f"not a rational number: {text!r}")
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise DivisionByZero(f"zero denominator in {text!r}")
        return Fraction(num, den)

    def format(self, x) -> str:
        return str(Fraction(x))

    def sqrt(self, x):
        x = Fraction(x)
        if x < 0:
            return None
        a, b = x.numerator, x.denominator
        ra, rb = math.isqrt(a), math.isqrt(b)
        if ra * ra != a or rb * rb != b:
            return None
        r = Fraction(ra, rb)
        return (r, -r)

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    """F_p for an odd prime p."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2:
            raise NonPrimeModulus(f"modulus must be a prime, got {p!r}")
        if p == 2:
            raise CharacteristicTwo("characteristic two is excluded")
        if not isprime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.descriptor = FieldDescriptor("prime", p)

    def __call__(self, value) -> Residue:
        if isinstance(value, Residue):
            if value.p != self.p:
                raise NotInField(f"{value!r} is not in F_{self.p}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            return Residue(int(value), self.p)
        if isinstance(value, int):
            return Residue(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"{value} has no image in F_{self.p}")
            return Residue(value.numerator * pow(value.denominator, -1, self.p), self.p)
        raise NotInField(f"{value!r} cannot be mapped into F_{self.p}")

    def parse(self, text: str) -> Residue:
        m = _INT_RE.match(text)
        if m:
            return Residue(int(m.group(1)), self.p)
        m = _FRAC_RE.match(text)
        if not m:
            raise ParseError(f"not an element of F_{self.p}: {text!r}")
        num, den = int(m.group(1)), int(m.group(2))
        if den % self.p == 0:
            raise DivisionByZero(f"denominator of {text!r} vanishes mod {self.p}")
        return Residue(num * pow(den, -1, self.p), self.p)

    def format(self, x) -> str:
        return str(self(x).v)

    def sqrt(self, x):
        v = self(x).v
        p = self.p
        if v == 0:
            return (Residue(0, p), Residue(0, p))
        if p < _SQRT_SEARCH_LIMIT:
            r = next((t for t in range(1, (p - 1) // 2 + 1) if t * t % p == v), None)
        else:
            r = tonelli_shanks(v, p)
        if r is None:
            return None
        lo, hi = sorted((r, p - r))
        return (Residue(lo, p), Residue(hi, p))

    def sort_key(self, x):
        return self(x).v

    def contains(self, x) -> bool:
        return isinstance(x, Residue) and x.p == self.p

    def elements(self):
        return (Residue(v, self.p) for v in range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"F{self.p}"


class FloatField(Field):
    """float64; only the hyperbolic bridge computes here."""

    exact = False
    descriptor = FieldDescriptor("float")
    tolerance = 1e-9

    def __call__(self, value) -> float:
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Residue):
            raise NotInField(f"{value!r} is not a real number")
        return float(value)

    def parse(self, text: str) -> float:
        try:
            if "/" in text:
                return float(RationalField().parse(text))
            return float(text)
        except ValueError as exc:
            raise ParseError(f"not a decimal number: {text!r}") from exc

    def format(self, x) -> str:
        return repr(float(x))

    def close(self, x, y) -> bool:
        return abs(x - y) <= self.tolerance

    def contains(self, x) -> bool:
        return isinstance(x, float)

    def __eq__(self, other):
        return isinstance(other, FloatField)

    def __hash__(self):
        return hash("float")

    def __repr__(self):
        return "float"


def tonelli_shanks(a: int, p: int) -> Optional[int]:
    """Return some r with r*r = a (mod p), or None if a is a non-residue."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


QQ = RationalField()
REALS = FloatField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def make_field(desc: Union[FieldDescriptor, str]) -> Field:
    """Build the field named by ``desc`` (a descriptor or text like ``"F11"``)."""
    if isinstance(desc, str):
        desc = FieldDescriptor.parse(desc)
    if desc.kind == "rational":
        return QQ
    if desc.kind == "float":
        return REALS
    if desc.kind == "prime":
        if desc.p is None:
            raise NonPrimeModulus("prime field needs a modulus")
        return GF(desc.p)
    raise ParseError(f"unknown field kind {desc.kind!r}")


def field_of(x) -> Field:
    """Infer the field carrying ``x``."""
    if isinstance(x, Residue):
        return GF(x.p)
    if isinstance(x, float):
        return REALS
    return QQ


def require_exact(field: Field, what: str = "this operation") -> None:
    if not field.exact:
        raise InexactField(f"{what} needs an exact field, got {field!r}")
