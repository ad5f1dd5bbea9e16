"""Vertical federated scorecard training.

Two data parties (a feature-only host and a label-holding guest) jointly fit a
logistic regression with non-negative coefficients over WOE-transformed
variables, exchanging only Paillier ciphertexts while a third-party
coordinator holds the decryption key and drives convergence.
"""

__version__ = "0.1.0"
