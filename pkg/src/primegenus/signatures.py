"""Fuchsian signatures: exact ratio rho, Riemann-Hurwitz genus, enumeration.

A signature ``(gamma; m_1, ..., m_k)`` is stored with periods sorted
ascending.  All arithmetic uses :class:`fractions.Fraction`.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .errors import NoSmoothKernel, SignatureError

DEFAULT_MAX_K = 64


@dataclass(frozen=True, order=True)
class Signature:
    gamma: int
    periods: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.gamma, int) or self.gamma < 0:
            raise SignatureError(f"orbit genus must be a non-negative integer, got {self.gamma!r}")
        periods = tuple(sorted(int(m) for m in self.periods))
        if any(m < 2 for m in periods):
            raise SignatureError(f"periods must be >= 2, got {periods}")
        object.__setattr__(self, "periods", periods)
        if self.area() <= 0:
            raise SignatureError(f"signature {self} is not hyperbolic")

    @property
    def k(self) -> int:
        return len(self.periods)

    def area(self) -> Fraction:
        """2*gamma - 2 + sum(1 - 1/m_i), i.e. 2/rho."""
        return 2 * self.gamma - 2 + sum((1 - Fraction(1, m) for m in self.periods), Fraction(0))

    def is_triangle(self) -> bool:
        return self.gamma == 0 and self.k == 3

    def __str__(self) -> str:
        body = ",".join(map(str, self.periods)) if self.periods else "-"
        return f"{self.gamma};{body}"

    def short(self) -> str:
        """Compact display: ``(2,3,7)`` when gamma=0, ``(1;2,2)`` otherwise, with m^[r] runs."""
        parts = []
        i = 0
        while i < self.k:
            j = i
            while j < self.k and self.periods[j] == self.periods[i]:
                j += 1
            run = j - i
            parts.append(f"{self.periods[i]}^{run}" if run >= 4 else ",".join([str(self.periods[i])] * run))
            i = j
        body = ",".join(parts) if parts else "-"
        return f"({body})" if self.gamma == 0 else f"({self.gamma};{body})"

    def to_json(self) -> dict:
        return {"gamma": self.gamma, "periods": list(self.periods)}

    @classmethod
    def from_json(cls, obj: dict) -> "Signature":
        return cls(int(obj["gamma"]), tuple(obj["periods"]))

    @classmethod
    def parse(cls, text: str) -> "Signature":
        return parse_signature(text)


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_signature(text: str) -> Signature:
    """Parse ``"g;m1,m2,..."`` (``"g;-"`` for no periods, ``m^r`` for runs).

    The ``g;`` prefix may be omitted, meaning gamma = 0.
    """
    s = text.strip().strip("()").replace(" ", "")
    if ";" in s:
        head, _, body = s.partition(";")
        if not head.isdigit():
            raise SignatureError(f"bad orbit genus token {head!r} in {text!r}")
        gamma = int(head)
    else:
        gamma, body = 0, s
    periods: list[int] = []
    if body not in ("", "-"):
        for tok in body.split(","):
            m = _TOKEN.match(tok)
            if not m:
                raise SignatureError(f"bad period token {tok!r} in {text!r}")
            periods.extend([int(m.group(1))] * int(m.group(2) or 1))
    return Signature(gamma, tuple(periods))


def as_signature(sig) -> Signature:
    return sig if isinstance(sig, Signature) else parse_signature(str(sig))


def rho_of(sig: Signature) -> Fraction:
    """Exact rho = |G|/(g-1) solving 2/rho = 2*gamma - 2 + sum(1 - 1/m_i)."""
    return 2 / as_signature(sig).area()


def genus_of_kernel(sig: Signature, order: int) -> int:
    """Genus of a smooth normal subgroup of index ``order`` (Riemann-Hurwitz)."""
    sig = as_signature(sig)
    if order < 1:
        raise ValueError("order must be positive")
    twice = order * sig.area()
    if twice.denominator != 1 or twice.numerator % 2:
        raise NoSmoothKernel(f"no smooth kernel of this order: {order} * {sig.area()} is not an even integer")
    return int(twice) // 2 + 1


def teich_dim(sig: Signature) -> int:
    """Real dimension 6*gamma - 6 + 2k of the Teichmueller space."""
    sig = as_signature(sig)
    return 6 * sig.gamma - 6 + 2 * sig.k


def _unit_fraction_sums(beta: Fraction, n: int, lo: int, keep) -> Iterator[tuple[int, ...]]:
    # ascending m_1 <= ... <= m_n, all >= lo, with sum 1/m_i = beta
    if n == 1:
        if beta.numerator == 1 and beta.denominator >= lo and keep(beta.denominator):
            yield (beta.denominator,)
        return
    # smallest period carries the largest term: beta/n <= 1/m < beta
    first = max(lo, math.floor(1 / beta) + 1)
    last = math.floor(n / beta)
    for m in range(first, last + 1):
        if not keep(m):
            continue
        for rest in _unit_fraction_sums(beta - Fraction(1, m), n - 1, m, keep):
            yield (m,) + rest


def enumerate_signatures(
    rho,
    period_filter: Optional[Callable[[int], bool]] = None,
    max_k: int = DEFAULT_MAX_K,
) -> list[Signature]:
    """All hyperbolic signatures with ``rho_of(sig) == rho``, sorted.

    ``period_filter`` is a predicate on a single period; periods failing it
    are pruned during the search.  The search is complete: ``2*gamma + k/2 <=
    2/rho + 2`` bounds gamma and k, and for fixed (gamma, k) the smallest
    period is at most ``k / beta`` where ``beta = sum 1/m_i``.
    """
    rho = Fraction(rho)
    if rho <= 0:
        raise ValueError("rho must be positive")
    alpha = 2 / rho
    keep = period_filter or (lambda m: True)
    out: set[Signature] = set()
    for gamma in range(0, math.floor((alpha + 2) / 2) + 1):
        kmax = math.floor(2 * (alpha + 2 - 2 * gamma))
        if kmax > max_k:
            raise ValueError(f"k bound {kmax} exceeds max_k={max_k} for rho={rho}")
        for k in range(0, kmax + 1):
            beta = 2 * gamma - 2 + k - alpha
            if k == 0:
                if beta == 0:
                    out.add(Signature(gamma, ()))
                continue
            if beta <= 0 or beta > Fraction(k, 2):
                continue
            for periods in _unit_fraction_sums(beta, k, 2, keep):
                out.add(Signature(gamma, periods))
    return sorted(out, key=_display_order)


def _display_order(sig: Signature):
    # gamma first, then number of periods, then lexicographic
    return (sig.gamma, sig.k, sig.periods)


def periods_in(allowed) -> Callable[[int], bool]:
    allowed = frozenset(allowed)
    return lambda m: m in allowed
