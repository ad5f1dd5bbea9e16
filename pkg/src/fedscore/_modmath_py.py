"""Pure-Python modular arithmetic kernels.

Same contract as the compiled ``_modmath`` extension: non-negative operands,
strictly positive moduli.
"""

NAME = "pure-python"


def powmod(base: int, exp: int, mod: int) -> int:
    """Return (base ** exp) % mod."""
    if base < 0 or exp < 0 or mod <= 0:
        raise ValueError("powmod requires base >= 0, exp >= 0, mod > 0")
    return pow(base, exp, mod)


def invert(value: int, mod: int) -> int:
    """Return the multiplicative inverse of value modulo mod."""
    if value < 0 or mod <= 0:
        raise ValueError("invert requires value >= 0, mod > 0")
    try:
        return pow(value, -1, mod)
    except ValueError:
        raise ValueError("value is not invertible for this modulus") from None


def mulmod(a: int, b: int, mod: int) -> int:
    """Return (a * b) % mod."""
    if a < 0 or b < 0 or mod <= 0:
        raise ValueError("mulmod requires a >= 0, b >= 0, mod > 0")
    return (a * b) % mod
