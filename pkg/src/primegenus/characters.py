"""Complex characters with exact cyclotomic values.

Characters are class functions stored per conjugacy class (in the order
of ``G.conjugacy_classes()``).  Irreducibles are constructed for abelian
groups, for the metacyclic groups G_{p,r}, and for G_{p,r} x (abelian).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .cyclotomic import Cyclo, exact_divide
from .errors import UnsupportedGroup
from .groups import FiniteGroup, Subgroup, _spanning_tree


@dataclass(frozen=True, eq=False)
class Character:
    group: FiniteGroup = field(repr=False)
    values: tuple  # Cyclo per conjugacy class
    name: str = "chi"
    exps: Optional[tuple] = field(default=None, repr=False)  # linear chars: exponent of zeta_N per class

    @property
    def N(self) -> int:
        return self.values[0].N

    @property
    def degree(self) -> int:
        d = self.values[0].rational()
        assert d is not None and d > 0
        return d

    def __call__(self, x: int) -> Cyclo:
        return self.values[self.group.class_of[x]]

    def __add__(self, other: "Character") -> "Character":
        _same_group(self, other)
        return Character(self.group, tuple(a + b for a, b in zip(self.values, other.values)),
                         f"{self.name}+{other.name}")

    def __mul__(self, other) -> "Character":
        if isinstance(other, int):
            return Character(self.group, tuple(a * other for a in self.values), f"{other}{self.name}")
        _same_group(self, other)
        exps = None
        if self.exps is not None and other.exps is not None and self.N == other.N:
            exps = tuple((a + b) % self.N for a, b in zip(self.exps, other.exps))
        return Character(self.group, tuple(a * b for a, b in zip(self.values, other.values)),
                         f"{self.name}*{other.name}", exps)

    __rmul__ = __mul__

    def conj(self) -> "Character":
        exps = None if self.exps is None else tuple((-e) % self.N for e in self.exps)
        return Character(self.group, tuple(v.conj() for v in self.values), f"conj({self.name})", exps)

    def inner(self, other: "Character") -> Fraction:
        return inner_product(self, other)

    def is_irreducible(self) -> bool:
        return inner_product(self, self) == 1

    def image_order(self) -> int:
        """Order of the image of a linear character (its order in the dual group)."""
        if self.exps is None:
            raise ValueError("image_order needs a linear character")
        return math.lcm(*[self.N // math.gcd(self.N, e) for e in self.exps])

    def kernel(self) -> np.ndarray:
        d = Cyclo.integer(self.N, self.degree)
        ok = [v == d for v in self.values]
        return np.flatnonzero(np.array(ok)[self.group.class_of])

    def is_faithful(self) -> bool:
        return len(self.kernel()) == 1

    def to_json(self) -> list:
        reps = [int(c[0]) for c in self.group.conjugacy_classes()]
        return [{"class_rep": self.group.label(r), "value": v.to_string()} for r, v in zip(reps, self.values)]


def _same_group(a: Character, b: Character):
    if a.group is not b.group:
        raise ValueError("characters belong to different groups")


def class_function(G: FiniteGroup, f, N: int, name="chi") -> Character:
    """Character from a function on elements, sampled at class representatives."""
    vals = []
    for cls in G.conjugacy_classes():
        v = f(int(cls[0]))
        vals.append(v if isinstance(v, Cyclo) else Cyclo.integer(N, int(v)))
    return Character(G, tuple(v if v.N == N else v.lift(N) for v in vals), name)


def inner_product(chi: Character, psi: Character) -> Fraction:
    """(1/|G|) sum_g chi(g) * conj(psi(g)), exact."""
    _same_group(chi, psi)
    G = chi.group
    total = Cyclo(math.lcm(chi.N, psi.N))
    for cls, a, b in zip(G.conjugacy_classes(), chi.values, psi.values):
        total = total + (a * b.conj()) * len(cls)
    return exact_divide(total, G.n)


def fixed_dim(chi: Character, H) -> int:
    """Dimension of the H-fixed subspace: (1/|H|) sum_{h in H} chi(h)."""
    elems = np.asarray(H.elements if isinstance(H, Subgroup) else list(H))
    counts = np.bincount(chi.group.class_of[elems], minlength=len(chi.values))
    total = Cyclo(chi.N)
    for c in np.flatnonzero(counts):
        total = total + chi.values[c] * int(counts[c])
    val = exact_divide(total, len(elems))
    if val.denominator != 1 or val < 0:
        raise AssertionError(f"fixed-space dimension {val} is not a non-negative integer")
    return int(val)


# -- abelian groups ------------------------------------------------------------

def character_table_abelian(Q: FiniteGroup, gens: Optional[Sequence[int]] = None) -> list[Character]:
    """All |Q| linear characters, labelled by the exponents k_i with chi(g_i) = zeta_{o_i}^{k_i}."""
    if not Q.is_abelian:
        raise ValueError(f"{Q.name} is not abelian; use metacyclic_irreps")
    N = Q.exponent
    gens = list(Q.gens if gens is None else gens)
    if not gens:
        return [Character(Q, (Cyclo.integer(N, 1),), "chi()", (0,))]
    tree, parent, via = _spanning_tree(Q, gens)
    ords = [int(Q.orders[g]) for g in gens]
    chars = []
    for ks in itertools.product(*[range(o) for o in ords]):
        step = [(N // o) * k for o, k in zip(ords, ks)]
        e = np.zeros(Q.n, dtype=np.int64)
        for j in tree[1:]:
            e[j] = (e[parent[j]] + step[via[j]]) % N
        if all(((e[Q.mul[:, g]] - e - step[i]) % N == 0).all() for i, g in enumerate(gens)):
            # abelian: class index == element index
            exps = tuple(int(v) for v in e)
            chars.append(Character(Q, tuple(Cyclo.root(N, v) for v in exps),
                                   "chi(" + ",".join(map(str, ks)) + ")", exps))
    if len(chars) != Q.n:
        raise AssertionError(f"found {len(chars)} linear characters of {Q.name}, expected {Q.n}")
    return chars


# -- metacyclic groups ---------------------------------------------------------

def coset_reps(p: int, r: int, omega: int) -> list[int]:
    """Smallest representative of each coset of <omega> in Z_p^*, ascending."""
    seen, reps = set(), []
    for k in range(1, p):
        if k not in seen:
            reps.append(k)
            seen.update(k * pow(omega, c, p) % p for c in range(r))
    return reps


@dataclass(frozen=True)
class MetacyclicIrrep:
    """Monomial representation of G_{p,r}.

    kind "U", index l: a -> 1, b -> xi_r^l.
    kind "V", index j: a -> diag(xi_p^{k_j omega^c}), b -> shift e_c -> e_{c-1}.
    Monomial matrices are pairs (perm, exps): M e_c = zeta^{exps[c]} e_{perm[c]},
    zeta = exp(2 pi i / (p r)).
    """
    p: int
    r: int
    omega: int
    kind: str
    index: int
    k: int = 0  # coset representative k_j for kind "V"

    @property
    def N(self) -> int:
        return self.p * self.r

    @property
    def degree(self) -> int:
        return 1 if self.kind == "U" else self.r

    @property
    def name(self) -> str:
        return f"{self.kind}_{self.index}"

    def image(self, i: int, j: int):
        """Monomial matrix of a^i b^j."""
        p, r, N = self.p, self.r, self.N
        if self.kind == "U":
            return (np.array([0]), np.array([(p * self.index * j) % N]))
        c = np.arange(r)
        perm = (c - j) % r
        # A^i B^j e_c = A^i e_{c-j} = xi_p^{i k omega^(c-j)} e_{c-j}
        alpha = np.array([self.k * pow(self.omega, int(t), p) % p for t in range(r)])
        exps = (r * i * alpha[perm]) % N
        return perm, exps

    def matrices(self):
        return {"a": self.image(1, 0), "b": self.image(0, 1)}

    def trace(self, i: int, j: int) -> Cyclo:
        perm, exps = self.image(i, j)
        z = Cyclo(self.N)
        for c in np.flatnonzero(perm == np.arange(len(perm))):
            z.c[exps[c]] += 1
        return z


def mono_mul(m1, m2, N):
    s1, e1 = m1
    s2, e2 = m2
    return s1[s2], (e2 + e1[s2]) % N


def mono_eq(m1, m2) -> bool:
    return bool((m1[0] == m2[0]).all() and (m1[1] == m2[1]).all())


def metacyclic_irreps(p: int, r: int, omega: Optional[int] = None) -> list[MetacyclicIrrep]:
    from .groups import default_omega
    if (p - 1) % r:
        raise ValueError(f"r={r} does not divide p-1")
    w = default_omega(p, r) if omega is None else omega
    out = [MetacyclicIrrep(p, r, w, "U", l) for l in range(r)]
    out += [MetacyclicIrrep(p, r, w, "V", j + 1, k) for j, k in enumerate(coset_reps(p, r, w))]
    return out


def check_relations(rep: MetacyclicIrrep) -> bool:
    """a^p = b^r = 1 and b a b^-1 = a^omega, as exact monomial identities."""
    p, r, N = rep.p, rep.r, rep.N
    ident = rep.image(0, 0)
    A, B = rep.image(1, 0), rep.image(0, 1)

    def pw(M, k):
        acc = ident
        for _ in range(k):
            acc = mono_mul(acc, M, N)
        return acc

    ok = mono_eq(pw(A, p), ident) and mono_eq(pw(B, r), ident)
    lhs = mono_mul(mono_mul(B, A, N), pw(B, r - 1), N)
    return ok and mono_eq(lhs, pw(A, rep.omega))


def metacyclic_character(G: FiniteGroup, rep: MetacyclicIrrep, check_hom=True) -> Character:
    """Character of ``rep`` on a group built by :func:`groups.metacyclic` with matching parameters."""
    m = G.meta
    if m.get("kind") != "metacyclic" or (m["p"], m["r"], m["omega"]) != (rep.p, rep.r, rep.omega):
        raise ValueError("representation parameters do not match the group")
    if check_hom:
        imgs = [rep.image(*G.elements[x]) for x in range(G.n)]
        for g in G.gens:
            for x in range(G.n):
                if not mono_eq(imgs[G.mul[x, g]], mono_mul(imgs[x], imgs[g], rep.N)):
                    raise AssertionError(f"{rep.name} is not a homomorphism")
    vals = tuple(rep.trace(*G.elements[int(c[0])]) for c in G.conjugacy_classes())
    exps = None
    if rep.kind == "U":
        exps = tuple(int(np.flatnonzero(v.c)[0]) for v in vals)
    return Character(G, vals, rep.name, exps)


def irreducible_characters(G: FiniteGroup) -> list[Character]:
    """Irreducible characters for abelian groups, G_{p,r}, and G_{p,r} x abelian."""
    cached = getattr(G, "_irreducibles", None)
    if cached is None:
        cached = G._irreducibles = _irreducible_characters(G)
    return list(cached)


def _irreducible_characters(G: FiniteGroup) -> list[Character]:
    kind = G.meta.get("kind")
    if G.is_abelian:
        return character_table_abelian(G)
    if kind == "metacyclic":
        m = G.meta
        return [metacyclic_character(G, rep) for rep in metacyclic_irreps(m["p"], m["r"], m["omega"])]
    if kind == "direct":
        G1, H = G.meta["factors"]
        if not H.is_abelian:
            raise UnsupportedGroup(f"irreducibles of {G.name} are not constructed")
        left = irreducible_characters(G1)
        right = character_table_abelian(H)
        out = []
        reps = [int(c[0]) for c in G.conjugacy_classes()]
        for chi in left:
            for lam in right:
                vals = tuple(chi(x // H.n) * lam(x % H.n) for x in reps)
                exps = None
                if chi.exps is not None:
                    exps = tuple(int(np.flatnonzero(v.c)[0]) for v in vals)
                out.append(Character(G, vals, f"{chi.name}*{lam.name}", exps))
        return out
    raise UnsupportedGroup(f"irreducibles of {G.name} are not constructed")


def trivial_character(G: FiniteGroup) -> Character:
    return Character(G, tuple(Cyclo.integer(1, 1) for _ in G.conjugacy_classes()), "1",
                     tuple(0 for _ in G.conjugacy_classes()))
