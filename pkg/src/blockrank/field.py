"""Exact coefficient fields: the rationals and prime fields GF(p).

Scalars are plain Python values: ``fractions.Fraction`` for the rationals
(always in lowest terms with positive denominator) and canonical residues
``0..p-1`` (``int``) for GF(p).  Every operation is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, NonPrimeModulus


class FieldKind(Enum):
    RATIONALS = "rational"
    PRIME = "prime"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Handle for an exact field; all scalar arithmetic goes through it."""

    kind: FieldKind
    modulus: int | None = None

    def characteristic(self) -> int:
        return 0 if self.kind is FieldKind.RATIONALS else self.modulus

    @property
    def is_prime_field(self) -> bool:
        return self.kind is FieldKind.PRIME

    # -- element construction ------------------------------------------

    def zero(self):
        return Fraction(0) if self.kind is FieldKind.RATIONALS else 0

    def one(self):
        return Fraction(1) if self.kind is FieldKind.RATIONALS else 1

    def from_int(self, n: int):
        if self.kind is FieldKind.RATIONALS:
            return Fraction(n)
        return n % self.modulus

    def check(self, a) -> None:
        """Raise FieldMismatch unless ``a`` is a canonical element."""
        if self.kind is FieldKind.RATIONALS:
            if not isinstance(a, Fraction):
                raise FieldMismatch(f"{a!r} is not a rational scalar")
        else:
            if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.modulus:
                raise FieldMismatch(f"{a!r} is not a canonical residue mod {self.modulus}")

    # -- arithmetic ----------------------------------------------------

    def add(self, a, b):
        if self.kind is FieldKind.RATIONALS:
            return a + b
        return (a + b) % self.modulus

    def sub(self, a, b):
        if self.kind is FieldKind.RATIONALS:
            return a - b
        return (a - b) % self.modulus

    def mul(self, a, b):
        if self.kind is FieldKind.RATIONALS:
            return a * b
        return (a * b) % self.modulus

    def neg(self, a):
        if self.kind is FieldKind.RATIONALS:
            return -a
        return (-a) % self.modulus

    def inv(self, a):
        if a == self.zero():
            raise DivisionByZero("inverse of zero")
        if self.kind is FieldKind.RATIONALS:
            return 1 / a
        return pow(a, -1, self.modulus)

    def div(self, a, b):
        if b == self.zero():
            raise DivisionByZero("division by zero")
        if self.kind is FieldKind.RATIONALS:
            return a / b
        return (a * pow(b, -1, self.modulus)) % self.modulus

    # -- text syntax ----------------------------------------------------

    def parse(self, text: str):
        """Parse a scalar: ``-3`` or ``a/b`` (b > 0) for Q, ``0..p-1`` for GF(p)."""
        text = text.strip()
        if self.kind is FieldKind.RATIONALS:
            if "/" in text:
                num, _, den = text.partition("/")
                try:
                    n, d = int(num), int(den)
                except ValueError:
                    raise ValueError(f"bad rational scalar {text!r}") from None
                if d <= 0:
                    raise ValueError(f"denominator must be positive in {text!r}")
                return Fraction(n, d)
            try:
                return Fraction(int(text))
            except ValueError:
                raise ValueError(f"bad rational scalar {text!r}") from None
        if not text.isdigit():
            raise ValueError(f"bad residue {text!r}, expected 0..{self.modulus - 1}")
        value = int(text)
        if value >= self.modulus:
            raise ValueError(f"residue {value} out of range 0..{self.modulus - 1}")
        return value

    def format(self, a) -> str:
        return str(a)


def rationals() -> Field:
    return Field(FieldKind.RATIONALS)


def prime_field(p: int) -> Field:
    if not _is_prime(p):
        raise NonPrimeModulus(p)
    return Field(FieldKind.PRIME, p)


def make_field(kind: str, modulus: int | None = None) -> Field:
    """Build a field from its textual name (``rational`` or ``prime``)."""
    if kind == FieldKind.RATIONALS.value:
        return rationals()
    if kind == FieldKind.PRIME.value:
        if modulus is None:
            raise ValueError("prime field needs a modulus")
        return prime_field(modulus)
    raise ValueError(f"unknown field kind {kind!r}")


def scalar_arith(field: Field, a, b, op: str):
    """Exact binary arithmetic dispatch; ``op`` is one of add/sub/mul/div."""
    field.check(a)
    field.check(b)
    try:
        fn = {"add": field.add, "sub": field.sub, "mul": field.mul, "div": field.div}[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None
    return fn(a, b)
