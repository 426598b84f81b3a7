"""Exact coefficient fields: the rationals and prime fields F_p.

Coefficients are stored as plain Python values so the hot kernels can work
on them without wrapper-object overhead:

* characteristic 0: `fractions.Fraction` (always in lowest terms,
  positive denominator);
* characteristic p: `int` residues in ``{0, ..., p-1}``.

A :class:`FieldSpec` carries the characteristic and mediates every
arithmetic operation, so modules never hard-code one representation.
No floating point appears anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


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


class FieldSpec:
    """The exact coefficient field k: Q (characteristic 0) or F_p."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0 and not _is_prime(characteristic):
            raise DomainError(
                f"characteristic must be 0 or a prime, got {characteristic}"
            )
        self.characteristic = characteristic

    @property
    def is_modular(self) -> bool:
        return self.characteristic != 0

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.characteristic == other.characteristic
        )

    def __hash__(self):
        return hash(("FieldSpec", self.characteristic))

    def __repr__(self):
        if self.characteristic == 0:
            return "FieldSpec(QQ)"
        return f"FieldSpec(GF({self.characteristic}))"

    # -- element construction ------------------------------------------

    def zero(self):
        return 0 if self.is_modular else Fraction(0)

    def one(self):
        return 1 if self.is_modular else Fraction(1)

    def from_int(self, n: int):
        if self.is_modular:
            return n % self.characteristic
        return Fraction(n)

    def coerce(self, value):
        """Coerce an int, Fraction or string like ``-3/4`` into the field."""
        if isinstance(value, str):
            try:
                value = Fraction(value)
            except (ValueError, ZeroDivisionError) as exc:
                raise DomainError(f"not a rational literal: {value!r}") from exc
        if isinstance(value, bool):
            raise DomainError("booleans are not field elements")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            if not self.is_modular:
                return value
            p = self.characteristic
            den = value.denominator % p
            if den == 0:
                raise DomainError(
                    f"denominator {value.denominator} is not invertible mod {p}"
                )
            return value.numerator * pow(den, p - 2, p) % p
        raise DomainError(f"cannot coerce {value!r} into {self!r}")

    # -- arithmetic ----------------------------------------------------

    def add(self, a, b):
        return (a + b) % self.characteristic if self.is_modular else a + b

    def sub(self, a, b):
        return (a - b) % self.characteristic if self.is_modular else a - b

    def neg(self, a):
        return (-a) % self.characteristic if self.is_modular else -a

    def mul(self, a, b):
        return (a * b) % self.characteristic if self.is_modular else a * b

    def inv(self, a):
        if self.is_zero(a):
            raise DomainError("division by zero")
        if self.is_modular:
            p = self.characteristic
            return pow(a % p, p - 2, p)
        return 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return (a % self.characteristic if self.is_modular else a) == 0

    def to_str(self, a) -> str:
        return str(a)


def multinomial(alpha, beta, spec: FieldSpec):
    """The coefficient alpha! / (beta! (alpha-beta)!) reduced into the field.

    Computed in exact integer arithmetic first and only then reduced, so
    that characteristic p gives the correct residue (in-field division by
    factorials would be undefined there).  Requires beta <= alpha
    componentwise.
    """
    from . import exponents

    return spec.from_int(exponents.multinomial(alpha, beta))
