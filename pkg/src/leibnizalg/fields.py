"""Exact scalar arithmetic: the rational field and prime fields F_p.

Scalars are plain Python values: `fractions.Fraction` over the rationals and
`int` residues in ``[0, p)`` over a prime field.  A `Field` object owns the
arithmetic, parsing and rendering; containers (vectors, matrices, subspaces)
carry the field and refuse to mix scalars from different fields.  Both value
representations are canonical by construction -- `Fraction` keeps
gcd(num, den) = 1 with den > 0, residues are reduced mod p -- so equality of
raw values is equality of scalars.  No floating point anywhere.

The accepted text form of a scalar is ``[-]digits[/digits]``, e.g. ``"3"``,
``"-1"``, ``"5/6"``.  Over F_p a fractional literal ``a/b`` means
``a * b^(-1) mod p`` and is rejected when p divides b.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import (
    DenominatorDivisibleByP,
    DivisionByZero,
    FieldMismatch,
    InvalidParams,
    ParseError,
)

_SCALAR_RE = re.compile(r"^-?\d+(/\d+)?$")


def _is_prime(n: int) -> bool:
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


class Field:
    """Abstract scalar field.  Instances compare equal by kind (and p)."""

    kind: str
    characteristic: int

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def coerce(self, value):
        """Return the canonical in-field value for an int/str/native scalar."""
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def render(self, value) -> str:
        raise NotImplementedError


class Rationals(Field):
    """The field of rational numbers with arbitrary-precision values."""

    kind = "Q"
    characteristic = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise ParseError(f"cannot interpret {value!r} as a rational scalar")

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
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by 0 in Q")
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def parse(self, text: str):
        if not isinstance(text, str) or not _SCALAR_RE.match(text):
            raise ParseError(f"bad scalar literal {text!r}")
        if "/" in text and int(text.split("/")[1]) == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(text)

    def render(self, value) -> str:
        return str(value)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """The prime field F_p; values are int residues in [0, p)."""

    kind = "Fp"

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise InvalidParams(f"F_p needs a prime p, got {p!r}")
        self.p = p
        self.characteristic = p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.p

    def coerce(self, value):
        if isinstance(value, bool):
            raise ParseError(f"cannot interpret {value!r} as an F_{self.p} scalar")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DenominatorDivisibleByP(
                    f"{value} has denominator divisible by {self.p}"
                )
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        if isinstance(value, str):
            return self.parse(value)
        raise ParseError(f"cannot interpret {value!r} as an F_{self.p} scalar")

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
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def parse(self, text: str):
        if not isinstance(text, str) or not _SCALAR_RE.match(text):
            raise ParseError(f"bad scalar literal {text!r}")
        if "/" in text:
            num_s, den_s = text.split("/")
            den = int(den_s)
            if den == 0:
                raise ParseError(f"zero denominator in {text!r}")
            if den % self.p == 0:
                raise DenominatorDivisibleByP(
                    f"{text!r} has denominator divisible by {self.p}"
                )
            return (int(num_s) * pow(den, -1, self.p)) % self.p
        return int(text) % self.p

    def render(self, value) -> str:
        return str(value % self.p)

    def elements(self):
        """All field elements, in the fixed order 0, 1, ..., p-1."""
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def ensure_same_field(f: Field, g: Field) -> None:
    if f != g:
        raise FieldMismatch(f"mixed fields {f!r} and {g!r}")
