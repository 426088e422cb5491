"""Exact arithmetic in Z[zeta_N].

A value is an integer coefficient vector on the powers zeta^0..zeta^(N-1).
That spanning set is redundant, so equality and rationality are decided
after reducing modulo the cyclotomic polynomial Phi_N.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
import math

import numpy as np
from sympy import Poly, cyclotomic_poly, symbols


@lru_cache(maxsize=None)
def _reduction_matrix(N: int) -> np.ndarray:
    """Row k holds the coefficients of zeta^k in the basis 1, zeta, ..., zeta^(phi-1)."""
    x = symbols("x")
    phi_coeffs = [int(c) for c in Poly(cyclotomic_poly(N, x), x).all_coeffs()[::-1]]
    d = len(phi_coeffs) - 1
    R = np.zeros((N, d), dtype=object)
    cur = [0] * d
    cur[0] = 1
    for k in range(N):
        R[k] = cur
        # multiply by x, then reduce the x^d term using the monic Phi_N
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi_coeffs[i] for i, c in enumerate(cur)]
    return R


class Cyclo:
    __slots__ = ("N", "c")

    def __init__(self, N: int, coeffs=None):
        self.N = int(N)
        if coeffs is None:
            self.c = np.zeros(self.N, dtype=np.int64)
        else:
            self.c = np.asarray(coeffs, dtype=np.int64).copy()

    @classmethod
    def root(cls, N: int, k: int, coef: int = 1) -> "Cyclo":
        z = cls(N)
        z.c[k % N] = coef
        return z

    @classmethod
    def integer(cls, N: int, v: int) -> "Cyclo":
        return cls.root(N, 0, v)

    def lift(self, M: int) -> "Cyclo":
        if M % self.N:
            raise ValueError(f"cannot lift from {self.N} to {M}")
        out = Cyclo(M)
        out.c[np.arange(self.N) * (M // self.N)] = self.c
        return out

    def _common(self, other):
        if isinstance(other, (int, np.integer)):
            return self, Cyclo.integer(self.N, int(other))
        if other.N == self.N:
            return self, other
        M = math.lcm(self.N, other.N)
        return self.lift(M), other.lift(M)

    def __add__(self, other):
        a, b = self._common(other)
        return Cyclo(a.N, a.c + b.c)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.N, -self.c)

    def __sub__(self, other):
        a, b = self._common(other)
        return Cyclo(a.N, a.c - b.c)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return Cyclo(self.N, self.c * int(other))
        a, b = self._common(other)
        i, j = np.flatnonzero(a.c), np.flatnonzero(b.c)
        out = np.zeros(a.N, dtype=np.int64)
        np.add.at(out, (i[:, None] + j[None, :]) % a.N, a.c[i][:, None] * b.c[j][None, :])
        return Cyclo(a.N, out)

    __rmul__ = __mul__

    def conj(self) -> "Cyclo":
        return Cyclo(self.N, np.roll(self.c[::-1], 1))

    def galois(self, u: int) -> "Cyclo":
        """Image under zeta -> zeta^u (u coprime to N)."""
        out = np.zeros(self.N, dtype=np.int64)
        np.add.at(out, (np.arange(self.N) * u) % self.N, self.c)
        return Cyclo(self.N, out)

    def reduced(self) -> tuple:
        R = _reduction_matrix(self.N)
        nz = np.flatnonzero(self.c)
        if not len(nz):
            return (0,) * R.shape[1]
        v = self.c[nz].astype(object) @ R[nz]
        return tuple(int(t) for t in v)

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)) or other.N != self.N:
            a, b = self._common(other)
            return (a - b).is_zero()
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.N, self.reduced()))

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def rational(self):
        """Integer value if this element is rational, else None."""
        v = self.reduced()
        if any(v[1:]):
            return None
        return v[0]

    def to_complex(self) -> complex:
        k = np.arange(self.N)
        return complex((self.c * np.exp(2j * np.pi * k / self.N)).sum())

    def __repr__(self):
        terms = [f"{int(self.c[k])}*z{self.N}^{k}" for k in np.flatnonzero(self.c)]
        return " + ".join(terms) if terms else "0"

    def to_string(self) -> str:
        return repr(self)


def exact_divide(value: Cyclo, n: int) -> Fraction:
    """Rational value of ``value / n``; raises if value is irrational."""
    r = value.rational()
    if r is None:
        raise ArithmeticError(f"{value!r} is not rational")
    return Fraction(r, n)
