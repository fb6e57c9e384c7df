"""Exact scalar arithmetic over the rationals and over prime fields F_p.

Scalars stay plain Python values so that equality, hashing and tuple
comparison behave canonically:

* rationals are ``fractions.Fraction`` (always gcd-reduced, denominator
  positive),
* F_p residues are ints in ``[0, p)``.

All arithmetic goes through a field object (``QQ`` or ``GF(p)``).  No
floating point is accepted anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldError

_SCALAR_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    """Serializable identity of a field: kind 'rational' or 'prime' (with p)."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise FieldError("rational field takes no modulus")
        elif self.kind == "prime":
            if self.p is None or not is_prime(self.p):
                raise FieldError("prime field needs a prime modulus, got %r" % (self.p,))
        else:
            raise FieldError("unknown field kind %r" % (self.kind,))


def _split_scalar(text: str):
    m = _SCALAR_RE.match(text.strip())
    if m is None:
        raise FieldError("invalid scalar %r" % (text,))
    num = int(m.group(1))
    den = None if m.group(2) is None else int(m.group(2))
    if den == 0:
        raise FieldError("zero denominator in %r" % (text,))
    return num, den


@dataclass(frozen=True)
class Rationals:
    """The field of arbitrary-precision rationals; scalars are Fraction."""

    kind = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    @property
    def descriptor(self) -> FieldDescriptor:
        return FieldDescriptor("rational")

    def coerce(self, value) -> Fraction:
        if isinstance(value, bool):
            return Fraction(int(value))
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise FieldError("cannot use %r as a rational scalar (floats are banned)" % (value,))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return a * self.inv(b)

    def is_zero(self, a) -> bool:
        return a == 0

    def parse(self, text: str) -> Fraction:
        num, den = _split_scalar(text)
        return Fraction(num) if den is None else Fraction(num, den)

    def format(self, a) -> str:
        return str(a)


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for a small prime p; scalars are ints in [0, p)."""

    p: int

    kind = "prime"
    zero = 0

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError("%r is not prime" % (self.p,))

    @property
    def one(self):
        return 1 % self.p

    @property
    def descriptor(self) -> FieldDescriptor:
        return FieldDescriptor("prime", self.p)

    def coerce(self, value) -> int:
        if isinstance(value, bool):
            return int(value) % self.p
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError("denominator of %s vanishes mod %d" % (value, self.p))
            return self.mul(value.numerator % self.p, self.inv(value.denominator % self.p))
        if isinstance(value, str):
            return self.parse(value)
        raise FieldError("cannot use %r as an F_%d scalar" % (value, self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def parse(self, text: str) -> int:
        num, den = _split_scalar(text)
        value = num % self.p
        if den is not None:
            if den % self.p == 0:
                raise FieldError("denominator of %r vanishes mod %d" % (text, self.p))
            value = self.mul(value, self.inv(den % self.p))
        return value

    def format(self, a) -> str:
        return str(a % self.p)


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_descriptor(descriptor: FieldDescriptor):
    if descriptor.kind == "rational":
        return QQ
    return PrimeField(descriptor.p)
