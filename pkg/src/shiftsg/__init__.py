"""Numerical semigroups and their shifted families <n, n+r_1, ..., n+r_k>."""

from .kernels import BACKEND

__version__ = "0.1.0"
