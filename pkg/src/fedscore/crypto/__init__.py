"""Additively homomorphic encryption over fixed-point-encoded reals."""

from fedscore.crypto.encoding import EncodedNumber
from fedscore.crypto.paillier import (
    Ciphertext,
    EncryptionOverflowError,
    KeyMismatchError,
    KeyPair,
    KeySizeError,
    PrivateKey,
    PublicKey,
    ciphertext_sum,
    keygen,
)

__all__ = [
    "Ciphertext",
    "EncodedNumber",
    "EncryptionOverflowError",
    "KeyMismatchError",
    "KeyPair",
    "KeySizeError",
    "PrivateKey",
    "PublicKey",
    "ciphertext_sum",
    "keygen",
]
