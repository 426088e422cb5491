"""Homology of the genus-2 quotient T = S/P as a module for Q = G/P.

For a good prime p the kernels K with Gamma/K of order |Q| p sit between
Delta (the kernel of Gamma -> Q) and Delta' Delta^p, and correspond to
codimension-1 Q-submodules of M = H_1(T; F_p).  M is read off from the
complex homology character via Lefschetz (chi = 2 - phi) and Macbeath's
fixed-point count phi.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from sympy import divisors, isprime

from .characters import Character, character_table_abelian, class_function, inner_product
from .epi import GeneratingTuple, enumerate_epimorphisms
from .errors import LemmaInapplicable
from .groups import FiniteGroup, semidirect_cp
from .signatures import Signature, as_signature, genus_of_kernel


@dataclass(frozen=True, eq=False)
class GenusTwoAction:
    Q: FiniteGroup = field(repr=False)
    sig: Signature
    tuple: GeneratingTuple = field(repr=False)

    def __post_init__(self):
        if genus_of_kernel(self.sig, self.Q.n) != 2:
            raise ValueError(f"{self.sig} with |Q|={self.Q.n} does not give genus 2")
        self.tuple.verify()


def genus_two_actions(sig, Q: FiniteGroup) -> list[GenusTwoAction]:
    """One action per kernel class Delta of Gamma(sig) -> Q."""
    sig = as_signature(sig)
    return [GenusTwoAction(Q, sig, t) for t in enumerate_epimorphisms(sig, Q).classes]


def _conj_to_power(Q: FiniteGroup, q: int, x: int) -> bool:
    cls = Q.class_of[q]
    acc = 0
    for _ in range(int(Q.orders[x])):
        acc = int(Q.mul[acc, x])
        if Q.class_of[acc] == cls:
            return True
    return False


def _cyclic_normalizer_order(Q: FiniteGroup, q: int) -> int:
    H = Q.subgroup_generated([q])
    return len(Q.normalizer(H))


def fixed_point_count(action: GenusTwoAction, q: int) -> int:
    """phi(q) = |N_Q(<q>)| sum_i eps_i(q)/m_i, eps_i(q) = [q conjugate to a power of x_i]."""
    if q == 0:
        raise ValueError("phi is defined for q != 1 only")
    Q = action.Q
    s = sum((Fraction(1, m) for x, m in zip(action.tuple.ell, action.sig.periods)
             if _conj_to_power(Q, q, x)), Fraction(0))
    val = _cyclic_normalizer_order(Q, q) * s
    if val.denominator != 1:
        raise AssertionError(f"non-integral fixed-point count {val}")
    return int(val)


def fixed_point_count_cyclic(action: GenusTwoAction, q: int) -> int:
    """|Q| * sum of 1/m_i over periods divisible by ord(q); valid for cyclic Q."""
    Q = action.Q
    o = int(Q.orders[q])
    val = Q.n * sum((Fraction(1, m) for m in action.sig.periods if m % o == 0), Fraction(0))
    assert val.denominator == 1
    return int(val)


def homology_character(action: GenusTwoAction) -> Character:
    """Lefschetz: chi(1) = 2 * genus = 4, chi(q) = 2 - phi(q)."""
    Q = action.Q
    return class_function(Q, lambda q: 4 if q == 0 else 2 - fixed_point_count(action, q), 1, "chi_H1")


@dataclass
class CharacterDecomposition:
    terms: list  # (Character, multiplicity)

    def total_degree(self) -> int:
        return sum(chi.degree * a for chi, a in self.terms)

    def multiplicity(self, name: str) -> int:
        return sum(a for chi, a in self.terms if chi.name == name)

    def to_json(self) -> list:
        return [{"character": chi.name, "multiplicity": a, "image_order": chi.image_order()}
                for chi, a in self.terms]


def decompose_homology(action: GenusTwoAction) -> CharacterDecomposition:
    """Multiplicities a_j = <chi, chi_j> over the linear characters of abelian Q."""
    chi = homology_character(action)
    terms = []
    for lam in character_table_abelian(action.Q):
        a = inner_product(chi, lam)
        if a.denominator != 1 or a < 0:
            raise AssertionError(f"multiplicity {a} of {lam.name} is not a non-negative integer")
        if a:
            terms.append((lam, int(a)))
    dec = CharacterDecomposition(terms)
    if dec.total_degree() != 4:
        raise AssertionError(f"decomposition has degree {dec.total_degree()}, expected 4")
    return dec


def odd_prime_modulus(m: int) -> int:
    """Smallest m' with (p = 1 mod m) iff (p = 1 mod m') for all odd primes p."""
    return m // 2 if m % 4 == 2 else m


def sylow_lemma_applies(rho: int, p: int, periods=()) -> bool:
    """rho coprime to p, no divisor d != 1 of rho with d = 1 mod p, and p dividing no period."""
    if rho % p == 0:
        return False
    if any(d != 1 and d % p == 1 for d in divisors(rho)):
        return False
    return all(m % p for m in periods)


@dataclass
class CharacterKernels:
    character: str
    multiplicity: int
    image_order: int
    realizable: bool
    kernels: int
    induced_group: str
    faithful: bool


@dataclass
class KernelCensus:
    p: int
    sig: Signature
    Q: str
    condition_modulus: int   # p must be 1 mod this (1: no condition)
    condition_holds: bool
    per_character: list
    kernel_count: int

    def count_for(self, group_name: str) -> int:
        return sum(c.kernels for c in self.per_character if c.induced_group == group_name)

    def to_json(self) -> dict:
        return {"p": self.p, "signature": str(self.sig), "Q": self.Q,
                "condition": f"p = 1 mod {self.condition_modulus}" if self.condition_modulus > 1 else "none",
                "condition_holds": self.condition_holds, "kernel_count": self.kernel_count,
                "per_character": [c.__dict__ for c in self.per_character]}


def abelian_invariants(Q: FiniteGroup, elems) -> list[int]:
    """Invariant factors of the abelian subgroup on ``elems``.

    For each prime p, the number of cyclic p-power factors of order >= p^k is
    log_p(c_k / c_(k-1)) with c_k = #{x : x^(p^k) = 1}.
    """
    orders = [int(Q.orders[e]) for e in elems]
    n = len(orders)
    by_prime = {}
    for p in (d for d in range(2, n + 1) if n % d == 0 and isprime(d)):
        total = sum(1 for o in orders if _p_part(o, p) == o)
        counts = [1]
        while counts[-1] < total:
            counts.append(sum(1 for o in orders if p ** len(counts) % o == 0))
        ge = [round(math.log(counts[k] / counts[k - 1], p)) for k in range(1, len(counts))]
        parts = []
        for k, g in enumerate(ge):
            parts += [p ** (k + 1)] * (g - (ge[k + 1] if k + 1 < len(ge) else 0))
        by_prime[p] = sorted(parts, reverse=True)
    factors = []
    i = 0
    while any(len(v) > i for v in by_prime.values()):
        factors.append(math.prod(v[i] for v in by_prime.values() if len(v) > i))
        i += 1
    return factors


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def abelian_name(factors) -> str:
    return "x".join(f"C{f}" for f in factors) if factors else "1"


def induced_group_name(Q: FiniteGroup, lam: Character, p: int) -> str:
    """Name of C_p x|_lam Q: G(p,e) x ker(lam) when ker(lam) has a complement, e = |image|."""
    e = lam.image_order()
    kern = np.array([q for q in range(Q.n) if lam.exps[q] == 0])
    # complement: an element of order e mapping onto the image
    gens = [q for q in range(Q.n) if Q.orders[q] == e and math.gcd(lam.exps[q], lam.N) * e == lam.N]
    base = f"C{p}" if e == 1 else f"Gpr({p},{e})"
    if not gens:
        return f"C{p}:{Q.name}[ker {len(kern)}]"
    inv = abelian_invariants(Q, kern)
    if e == 1:
        # C_p x ker: p is coprime to |Q|, so it merges into the largest invariant factor
        return abelian_name([p * inv[0]] + inv[1:] if inv else [p])
    k = abelian_name(inv)
    return base if k == "1" else f"{base}x{k}"


def build_induced_group(Q: FiniteGroup, lam: Character, p: int) -> FiniteGroup:
    """C_p x| Q with q acting through an F_p-reduction of the linear character lam."""
    from .groups import default_omega
    e = lam.image_order()
    if (p - 1) % e:
        raise ValueError(f"character of order {e} is not realisable mod {p}")
    w = default_omega(p, e) if e > 1 else 1
    step = lam.N // e  # lam(q) = zeta_N^x with x a multiple of N/e
    return semidirect_cp(p, Q, [pow(w, x // step, p) for x in lam.exps])


def kernel_census(action: GenusTwoAction, p: int) -> KernelCensus:
    """Kernels K of Gamma below this action's Delta with |Delta/K| = p, by quotient character."""
    Q, sig = action.Q, action.sig
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if not sylow_lemma_applies(Q.n, p, sig.periods):
        raise LemmaInapplicable(
            f"normal Sylow lemma inapplicable for |Q|={Q.n}, periods {sig.periods} at p={p}; use exhaustive search")
    dec = decompose_homology(action)
    moduli = sorted({lam.image_order() for lam, _ in dec.terms})
    e = math.lcm(*moduli)
    per = []
    for lam, a in dec.terms:
        o = lam.image_order()
        ok = (p - 1) % o == 0
        per.append(CharacterKernels(lam.name, a, o, ok, (p ** a - 1) // (p - 1) if ok else 0,
                                    induced_group_name(Q, lam, p), lam.is_faithful()))
    mod = odd_prime_modulus(e) if p > 2 else e
    return KernelCensus(p, sig, Q.name, mod, (p - 1) % e == 0, per, sum(c.kernels for c in per))


# the abelian genus-2 actions, keyed by the numbering used for rho >= 3
ABELIAN_GENUS_TWO = {
    1: ("C6xC2", "0;2,6,6"),
    2: ("C10", "0;2,5,10"),
    3: ("C8", "0;2,8,8"),
    4: ("C6", "0;3,6,6"),
    5: ("C6", "0;2,2,3,3"),
    6: ("C5", "0;5,5,5"),
    7: ("C4", "0;2,2,4,4"),
    8: ("C2xC2", "0;2^5"),
    9: ("C3", "0;3^4"),
    10: ("C2", "0;2^6"),
    11: ("C2", "1;2,2"),
}


def case_actions(case: int) -> list[GenusTwoAction]:
    from .groups import group
    qname, s = ABELIAN_GENUS_TWO[case]
    return genus_two_actions(s, group(qname))


def census_for_case(case: int, p: int) -> dict[str, int]:
    """Total kernels per induced group, summed over every Delta for this case."""
    out: dict[str, int] = {}
    for act in case_actions(case):
        for c in kernel_census(act, p).per_character:
            if c.kernels:
                out[c.induced_group] = out.get(c.induced_group, 0) + c.kernels
    return out
