# cython: language_level=3
"""GMP-backed modular arithmetic kernels.

Drop-in replacements for the pure-Python kernels in ``_modmath_py``; values
cross the boundary as arbitrary-precision Python ints via big-endian bytes.
All operands must be non-negative and moduli strictly positive.
"""

cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        pass
    ctypedef __mpz_struct mpz_t[1]
    void mpz_init(mpz_t x)
    void mpz_clear(mpz_t x)
    void mpz_import(mpz_t rop, size_t count, int order, size_t size,
                    int endian, size_t nails, const void *op)
    void *mpz_export(void *rop, size_t *countp, int order, size_t size,
                     int endian, size_t nails, const mpz_t op)
    void mpz_powm(mpz_t rop, const mpz_t base, const mpz_t exp, const mpz_t mod)
    int mpz_invert(mpz_t rop, const mpz_t op1, const mpz_t op2)
    void mpz_mul(mpz_t rop, const mpz_t op1, const mpz_t op2)
    void mpz_mod(mpz_t r, const mpz_t n, const mpz_t d)
    size_t mpz_sizeinbase(const mpz_t op, int base)
    int mpz_sgn(const mpz_t op)

NAME = "gmp"


cdef int _mpz_from_int(mpz_t rop, object value) except -1:
    cdef bytes raw = value.to_bytes((value.bit_length() + 7) // 8 or 1, "big")
    cdef const unsigned char *p = raw
    mpz_import(rop, len(raw), 1, 1, 1, 0, <const void *>p)
    return 0


cdef object _int_from_mpz(mpz_t value):
    if mpz_sgn(value) == 0:
        return 0
    cdef size_t nbytes = (mpz_sizeinbase(value, 2) + 7) // 8
    cdef bytearray buf = bytearray(nbytes)
    cdef unsigned char[::1] mv = buf
    cdef size_t written = 0
    mpz_export(<void *>&mv[0], &written, 1, 1, 1, 0, value)
    return int.from_bytes(buf[:written], "big")


def powmod(base, exp, mod):
    """Return (base ** exp) % mod."""
    if base < 0 or exp < 0 or mod <= 0:
        raise ValueError("powmod requires base >= 0, exp >= 0, mod > 0")
    cdef mpz_t b, e, m, r
    mpz_init(b)
    mpz_init(e)
    mpz_init(m)
    mpz_init(r)
    try:
        _mpz_from_int(b, base)
        _mpz_from_int(e, exp)
        _mpz_from_int(m, mod)
        mpz_powm(r, b, e, m)
        return _int_from_mpz(r)
    finally:
        mpz_clear(b)
        mpz_clear(e)
        mpz_clear(m)
        mpz_clear(r)


def invert(value, mod):
    """Return the multiplicative inverse of value modulo mod."""
    if value < 0 or mod <= 0:
        raise ValueError("invert requires value >= 0, mod > 0")
    cdef mpz_t a, m, r
    mpz_init(a)
    mpz_init(m)
    mpz_init(r)
    try:
        _mpz_from_int(a, value)
        _mpz_from_int(m, mod)
        if mpz_invert(r, a, m) == 0:
            raise ValueError("value is not invertible for this modulus")
        return _int_from_mpz(r)
    finally:
        mpz_clear(a)
        mpz_clear(m)
        mpz_clear(r)


def mulmod(a, b, mod):
    """Return (a * b) % mod."""
    if a < 0 or b < 0 or mod <= 0:
        raise ValueError("mulmod requires a >= 0, b >= 0, mod > 0")
    cdef mpz_t x, y, m, r
    mpz_init(x)
    mpz_init(y)
    mpz_init(m)
    mpz_init(r)
    try:
        _mpz_from_int(x, a)
        _mpz_from_int(y, b)
        _mpz_from_int(m, mod)
        mpz_mul(r, x, y)
        mpz_mod(r, r, m)
        return _int_from_mpz(r)
    finally:
        mpz_clear(x)
        mpz_clear(y)
        mpz_clear(m)
        mpz_clear(r)
