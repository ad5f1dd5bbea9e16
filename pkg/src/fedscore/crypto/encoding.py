"""Fixed-point encoding of reals as (mantissa, exponent) pairs, base 16.

The represented value is ``mantissa * 16**exponent``. The default exponent of
-16 gives 64 fractional bits, which keeps the rounding error of each encoded
term below 2**-64 so that sums of a few thousand terms stay exact to well
under 1e-9. Addition and multiplication in the encoded domain are exact:
rounding happens only when a real is first encoded.

Signed mantissas map into a Paillier message space [0, n) the usual way:
negatives wrap to the upper half, and a guard band around n/2 catches
overflow at decode time.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class EncodedNumber:
    """A real number in fixed-point form: value = mantissa * BASE**exponent."""

    mantissa: int
    exponent: int

    BASE = 16
    LOG2_BASE = 4
    DEFAULT_EXPONENT = -16  # 64 fractional bits

    @classmethod
    def encode(cls, value: float | int, exponent: int | None = None) -> "EncodedNumber":
        """Round a real to the fixed-point grid 16**exponent."""
        if isinstance(value, EncodedNumber):
            return value
        if exponent is None:
            exponent = cls.DEFAULT_EXPONENT
        if isinstance(value, numbers.Integral) and exponent <= 0:
            return cls(int(value) * cls.BASE ** (-exponent), exponent)
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"cannot encode non-finite value {value!r}")
        # scaling by a power of two is exact in binary floating point
        scaled = math.ldexp(value, -cls.LOG2_BASE * exponent)
        if math.isfinite(scaled):
            mantissa = round(scaled)
        else:
            mantissa = round(Fraction(value) * Fraction(cls.BASE) ** (-exponent))
        return cls(mantissa, exponent)

    def decode(self) -> float:
        """The represented real, correctly rounded to a double."""
        if self.exponent >= 0:
            return float(self.mantissa * self.BASE**self.exponent)
        return self.mantissa / self.BASE ** (-self.exponent)

    def align_to(self, exponent: int) -> "EncodedNumber":
        """Re-express at a lower (finer) exponent; exact, never drops bits."""
        if exponent > self.exponent:
            raise ValueError(
                f"cannot align exponent {self.exponent} up to {exponent}; "
                "the higher-exponent operand must be rescaled down"
            )
        factor = self.BASE ** (self.exponent - exponent)
        return EncodedNumber(self.mantissa * factor, exponent)

    def __add__(self, other: "EncodedNumber | float | int") -> "EncodedNumber":
        if not isinstance(other, EncodedNumber):
            other = EncodedNumber.encode(other)
        exponent = min(self.exponent, other.exponent)
        return EncodedNumber(
            self.align_to(exponent).mantissa + other.align_to(exponent).mantissa,
            exponent,
        )

    __radd__ = __add__

    def __neg__(self) -> "EncodedNumber":
        return EncodedNumber(-self.mantissa, self.exponent)

    def __sub__(self, other: "EncodedNumber | float | int") -> "EncodedNumber":
        if not isinstance(other, EncodedNumber):
            other = EncodedNumber.encode(other)
        return self + (-other)

    def __mul__(self, other: "EncodedNumber | float | int") -> "EncodedNumber":
        if not isinstance(other, EncodedNumber):
            other = EncodedNumber.encode(other)
        return EncodedNumber(self.mantissa * other.mantissa, self.exponent + other.exponent)

    __rmul__ = __mul__

    def to_modular(self, n: int, max_int: int) -> int:
        """Map the signed mantissa into [0, n); negatives wrap to the top."""
        if abs(self.mantissa) > max_int:
            raise OverflowError(
                f"encoded mantissa magnitude {abs(self.mantissa)} exceeds the "
                f"message-space bound {max_int}"
            )
        return self.mantissa % n

    @classmethod
    def from_modular(cls, value: int, exponent: int, n: int, max_int: int) -> "EncodedNumber":
        """Recover the signed mantissa from a residue in [0, n)."""
        if not 0 <= value < n:
            raise ValueError("residue out of range for this modulus")
        if value <= max_int:
            mantissa = value
        elif value >= n - max_int:
            mantissa = value - n
        else:
            raise OverflowError("overflow detected while decoding ciphertext")
        return cls(mantissa, exponent)
