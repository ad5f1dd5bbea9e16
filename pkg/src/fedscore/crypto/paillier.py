"""Paillier cryptosystem (simplified g = n+1 variant) over encoded reals.

Supports exactly the two homomorphic identities the training protocol needs:
adding two ciphertexts and multiplying a ciphertext by a plaintext scalar.
Encryption randomness comes from a caller-supplied ``random.Random`` (seeded
for reproducible runs) and defaults to ``random.SystemRandom``.

All objects are immutable after construction and all operations are pure, so
concurrent use from several threads is safe.
"""

from __future__ import annotations

import math
import random
import struct
from typing import NamedTuple

from fedscore import backend
from fedscore.crypto.encoding import EncodedNumber

DEFAULT_KEY_BITS = 2048
MIN_KEY_BITS = 512
_MR_ROUNDS = 40


class KeySizeError(ValueError):
    """Requested key size is insecure or degenerate."""


class KeyMismatchError(ValueError):
    """Operands belong to different key pairs."""


class EncryptionOverflowError(OverflowError):
    """Encoded plaintext does not fit the message space."""


def _small_primes(limit: int = 1000) -> tuple[int, ...]:
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i in range(limit) if sieve[i])


_SMALL_PRIMES = _small_primes()


def _is_probable_prime(n: int, rng: random.Random, rounds: int = _MR_ROUNDS) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = backend.powmod(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = backend.mulmod(x, x, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def _random_prime(bits: int, rng: random.Random) -> int:
    # top two bits set so the product of two such primes has full bit length
    top = (1 << (bits - 1)) | (1 << (bits - 2))
    while True:
        candidate = rng.getrandbits(bits) | top | 1
        if _is_probable_prime(candidate, rng):
            return candidate


class PublicKey:
    """Encryption key: modulus n with generator g = n + 1."""

    __slots__ = ("n", "g", "nsquare", "max_int")

    def __init__(self, n: int):
        self.n = n
        self.g = n + 1
        self.nsquare = n * n
        self.max_int = n // 3 - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PublicKey) and self.n == other.n

    def __hash__(self) -> int:
        return hash(self.n)

    def __repr__(self) -> str:
        return f"<PublicKey {self.n.bit_length()} bits>"

    def raw_encrypt(self, plaintext: int, r: int) -> int:
        """Encrypt a residue in [0, n) with obfuscator r."""
        # (n+1)^m = 1 + n*m (mod n^2), so no exponentiation for the message part
        nude = (1 + self.n * plaintext) % self.nsquare
        return backend.mulmod(nude, backend.powmod(r, self.n, self.nsquare), self.nsquare)

    def encrypt(
        self,
        value: float | int | EncodedNumber,
        rng: random.Random | None = None,
        exponent: int | None = None,
    ) -> "Ciphertext":
        """Encode and encrypt a real; fresh randomness per call."""
        encoded = value if isinstance(value, EncodedNumber) else EncodedNumber.encode(value, exponent)
        try:
            residue = encoded.to_modular(self.n, self.max_int)
        except OverflowError as exc:
            raise EncryptionOverflowError(str(exc)) from None
        rng = rng if rng is not None else random.SystemRandom()
        r = rng.randrange(1, self.n)
        return Ciphertext(self, self.raw_encrypt(residue, r), encoded.exponent)

    def to_bytes(self) -> bytes:
        raw = self.n.to_bytes((self.n.bit_length() + 7) // 8, "big")
        return struct.pack(">I", len(raw)) + raw

    @classmethod
    def from_bytes(cls, data: bytes, offset: int = 0) -> tuple["PublicKey", int]:
        (length,) = struct.unpack_from(">I", data, offset)
        offset += 4
        n = int.from_bytes(data[offset : offset + length], "big")
        return cls(n), offset + length


class PrivateKey:
    """Decryption key: lambda = phi(n) and mu = phi(n)^-1 mod n."""

    __slots__ = ("public_key", "lam", "mu")

    def __init__(self, public_key: PublicKey, lam: int, mu: int):
        self.public_key = public_key
        self.lam = lam
        self.mu = mu

    def __repr__(self) -> str:
        return f"<PrivateKey for {self.public_key!r}>"

    def raw_decrypt(self, ciphertext_value: int) -> int:
        n = self.public_key.n
        u = backend.powmod(ciphertext_value, self.lam, self.public_key.nsquare)
        return ((u - 1) // n) * self.mu % n

    def decrypt_encoded(self, ciphertext: "Ciphertext") -> EncodedNumber:
        if ciphertext.public_key != self.public_key:
            raise KeyMismatchError("ciphertext was encrypted under a different key")
        residue = self.raw_decrypt(ciphertext.value)
        return EncodedNumber.from_modular(
            residue, ciphertext.exponent, self.public_key.n, self.public_key.max_int
        )

    def decrypt(self, ciphertext: "Ciphertext") -> float:
        return self.decrypt_encoded(ciphertext).decode()


class KeyPair(NamedTuple):
    public_key: PublicKey
    private_key: PrivateKey


def keygen(bits: int = DEFAULT_KEY_BITS, rng: random.Random | None = None) -> KeyPair:
    """Generate a key pair whose modulus has exactly ``bits`` bits.

    ``bits`` must be even and at least 512. ``rng`` seeds both prime search
    and primality testing for reproducible test keys.
    """
    if bits < MIN_KEY_BITS:
        raise KeySizeError(f"key size {bits} below the {MIN_KEY_BITS}-bit minimum")
    if bits % 2:
        raise KeySizeError("key size must be even")
    rng = rng if rng is not None else random.SystemRandom()
    half = bits // 2
    while True:
        p = _random_prime(half, rng)
        q = _random_prime(half, rng)
        if p == q:
            continue
        n = p * q
        if n.bit_length() != bits:
            continue
        phi = (p - 1) * (q - 1)
        if math.gcd(n, phi) != 1:
            continue
        public = PublicKey(n)
        return KeyPair(public, PrivateKey(public, lam=phi, mu=backend.invert(phi, n)))


class Ciphertext:
    """An encrypted encoded real; supports ct + ct and scalar * ct."""

    __slots__ = ("public_key", "value", "exponent")

    def __init__(self, public_key: PublicKey, value: int, exponent: int):
        self.public_key = public_key
        self.value = value
        self.exponent = exponent

    def __repr__(self) -> str:
        return f"<Ciphertext exp={self.exponent} under {self.public_key!r}>"

    def rescale_to(self, exponent: int) -> "Ciphertext":
        """Lower this ciphertext's exponent; plaintext value unchanged."""
        if exponent == self.exponent:
            return self
        if exponent > self.exponent:
            raise ValueError("ciphertext exponents can only be rescaled down")
        factor = EncodedNumber.BASE ** (self.exponent - exponent)
        return Ciphertext(
            self.public_key,
            backend.powmod(self.value, factor, self.public_key.nsquare),
            exponent,
        )

    def __add__(self, other: "Ciphertext") -> "Ciphertext":
        if not isinstance(other, Ciphertext):
            return NotImplemented
        if self.public_key != other.public_key:
            raise KeyMismatchError("cannot add ciphertexts under different keys")
        exponent = min(self.exponent, other.exponent)
        a = self.rescale_to(exponent)
        b = other.rescale_to(exponent)
        return Ciphertext(
            self.public_key,
            backend.mulmod(a.value, b.value, self.public_key.nsquare),
            exponent,
        )

    def __mul__(self, scalar: float | int | EncodedNumber) -> "Ciphertext":
        if isinstance(scalar, Ciphertext):
            raise TypeError("ciphertext * ciphertext is not supported by an additive scheme")
        encoded = scalar if isinstance(scalar, EncodedNumber) else EncodedNumber.encode(scalar)
        pk = self.public_key
        if abs(encoded.mantissa) > pk.max_int:
            raise EncryptionOverflowError("scalar too large for the message space")
        if encoded.mantissa < 0:
            base = backend.invert(self.value, pk.nsquare)
            exponent_int = -encoded.mantissa
        else:
            base = self.value
            exponent_int = encoded.mantissa
        return Ciphertext(
            pk,
            backend.powmod(base, exponent_int, pk.nsquare),
            self.exponent + encoded.exponent,
        )

    __rmul__ = __mul__

    def to_bytes(self) -> bytes:
        """value as a length-prefixed big-endian byte string + int32 exponent."""
        raw = self.value.to_bytes((self.value.bit_length() + 7) // 8 or 1, "big")
        return struct.pack(">I", len(raw)) + raw + struct.pack(">i", self.exponent)

    @classmethod
    def from_bytes(cls, data: bytes, public_key: PublicKey, offset: int = 0) -> tuple["Ciphertext", int]:
        (length,) = struct.unpack_from(">I", data, offset)
        offset += 4
        value = int.from_bytes(data[offset : offset + length], "big")
        offset += length
        (exponent,) = struct.unpack_from(">i", data, offset)
        return cls(public_key, value, exponent), offset + 4


def ciphertext_sum(ciphertexts: list[Ciphertext]) -> Ciphertext:
    """Homomorphic sum of a non-empty list under one key."""
    if not ciphertexts:
        raise ValueError("cannot sum zero ciphertexts")
    total = ciphertexts[0]
    for ct in ciphertexts[1:]:
        total = total + ct
    return total
