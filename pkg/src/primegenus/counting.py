"""Counting k-tuples of non-zero residues mod p with prescribed sum.

s_k counts tuples summing to 0, t_k those summing to a fixed non-zero a.
These give the number of normal surface subgroups of prime index.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded
from .signatures import Signature, as_signature


@dataclass(frozen=True)
class TupleCount:
    p: int
    k: int
    s: int
    t: int

    def __post_init__(self):
        assert self.s + (self.p - 1) * self.t == (self.p - 1) ** self.k


def s_formula(p: int, k: int) -> int:
    if k == 0:
        return 1
    num = (p - 1) * ((p - 1) ** (k - 1) + (-1) ** k)
    assert num % p == 0
    return num // p


def t_formula(p: int, k: int) -> int:
    num = (p - 1) ** k - (-1) ** k
    assert num % p == 0
    return num // p


def st_recurrence(p: int, k: int) -> tuple[int, int]:
    """(s_k, t_k) from (s_0, t_0) = (1, 0) and the 2x2 transfer matrix [[0,1],[p-1,p-2]]."""
    s, t = 1, 0
    for _ in range(k):
        s, t = (p - 1) * t, s + (p - 2) * t
    return s, t


def tuple_count(p: int, k: int) -> TupleCount:
    return TupleCount(p, k, s_formula(p, k), t_formula(p, k))


def s_bruteforce(p: int, k: int, budget: int = 10**8) -> int:
    """Exhaustive count of k-tuples of non-zero residues mod p summing to 0."""
    if k == 0:
        return 1
    if (p - 1) ** k > budget:
        raise BudgetExceeded(f"(p-1)^k = {(p - 1) ** k} exceeds budget {budget}")
    nz = np.arange(1, p, dtype=np.int64)
    rest = np.zeros(1, dtype=np.int64)
    for _ in range(k - 1):
        rest = ((rest[:, None] + nz[None, :]) % p).ravel()
    # first coordinate x needs the others to sum to -x
    hist = np.bincount(rest, minlength=p)
    return int(sum(hist[(-x) % p] for x in range(1, p)))


def count_kernels_cyclic_p(sig, p: int) -> int:
    """Normal surface subgroups of index p in Gamma(sig)."""
    sig = as_signature(sig)
    if any(m != p for m in sig.periods):
        return 0
    if sig.k == 0:
        return (p ** (2 * sig.gamma) - 1) // (p - 1)
    # p^(2 gamma) free choices for the hyperbolic generators, s_k for the x_i, modulo Aut(C_p)
    epis = p ** (2 * sig.gamma) * s_formula(p, sig.k)
    assert epis % (p - 1) == 0
    return epis // (p - 1)
