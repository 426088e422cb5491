"""Finite groups as Cayley tables, with the families needed for the census.

Convention: ``mul[i, j]`` is the index of the product ``i * j``.  For
permutation groups the product ``i * j`` means "apply j, then i".  The
identity always has index 0.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable, Hashable, Optional, Sequence

import numpy as np
from sympy import isprime, primitive_root

from .errors import BudgetExceeded, GroupSpecError

AUT_BUDGET = 5 * 10**7  # candidate generator-image tuples examined per search


class FiniteGroup:
    """Cayley-table group.

    Optional ``elements`` hold concrete data (tuples, matrices) used by
    constructors; ``named`` maps short names such as ``"a"`` to indices.
    """

    def __init__(self, mul, gens=(), labels=None, name="G", elements=None,
                 named=None, meta=None, check=True):
        self.mul = np.ascontiguousarray(mul, dtype=np.int32)
        self.n = self.mul.shape[0]
        self.name = name
        self.gens = tuple(int(g) for g in gens)
        self.labels = list(labels) if labels is not None else [f"g{i}" for i in range(self.n)]
        self.elements = elements
        self.named = dict(named or {})
        self.meta = dict(meta or {})
        if check:
            self.check_laws()

    def __repr__(self):
        return f"<{self.name} order {self.n}>"

    @property
    def order(self) -> int:
        return self.n

    # -- basic arithmetic -------------------------------------------------

    def op(self, *xs) -> int:
        acc = 0
        for x in xs:
            acc = int(self.mul[acc, x])
        return acc

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = int(self.inv[x]), -k
        acc, base = 0, int(x)
        while k:
            if k & 1:
                acc = int(self.mul[acc, base])
            base = int(self.mul[base, base])
            k >>= 1
        return acc

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return int(self.mul[self.mul[g, x], self.inv[g]])

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x y x^-1 y^-1."""
        return self.op(x, y, int(self.inv[x]), int(self.inv[y]))

    @cached_property
    def inv(self) -> np.ndarray:
        return np.argmax(self.mul == 0, axis=1).astype(np.int32)

    @cached_property
    def orders(self) -> np.ndarray:
        ar = np.arange(self.n)
        out = np.zeros(self.n, dtype=np.int64)
        out[0] = 1
        cur = ar.copy()
        k = 1
        while (out == 0).any():
            cur = self.mul[cur, ar]
            k += 1
            out[(cur == 0) & (out == 0)] = k
        return out

    def element_order(self, x: int) -> int:
        return int(self.orders[x])

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*map(int, np.unique(self.orders)))

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def label(self, x: int) -> str:
        return self.labels[int(x)]

    def __getitem__(self, name: str) -> int:
        return self.named[name]

    # -- structure --------------------------------------------------------

    @cached_property
    def _classes(self):
        cls_of = np.full(self.n, -1, dtype=np.int64)
        classes = []
        ar = np.arange(self.n)
        for x in range(self.n):
            if cls_of[x] >= 0:
                continue
            orbit = np.unique(self.mul[self.mul[ar, x], self.inv])
            cls_of[orbit] = len(classes)
            classes.append(orbit)
        return classes, cls_of

    def conjugacy_classes(self) -> list[np.ndarray]:
        return self._classes[0]

    @property
    def class_of(self) -> np.ndarray:
        return self._classes[1]

    def centre(self) -> np.ndarray:
        return np.flatnonzero((self.mul == self.mul.T).all(axis=1))

    def centralizer(self, x: int) -> np.ndarray:
        return np.flatnonzero(self.mul[:, x] == self.mul[x, :])

    def normalizer(self, H: "Subgroup") -> np.ndarray:
        ar = np.arange(self.n)
        ok = np.ones(self.n, dtype=bool)
        for h in H.elements:
            ok &= H.mask[self.mul[self.mul[ar, h], self.inv]]
        return np.flatnonzero(ok)

    def closure(self, gens: Sequence[int]) -> np.ndarray:
        gens = np.unique(np.asarray(list(gens), dtype=np.int64))
        mask = np.zeros(self.n, dtype=bool)
        mask[0] = True
        frontier = np.array([0])
        if len(gens) == 0:
            return frontier
        while len(frontier):
            new = np.unique(self.mul[np.ix_(frontier, gens)])
            new = new[~mask[new]]
            mask[new] = True
            frontier = new
        return np.flatnonzero(mask)

    def subgroup_generated(self, gens: Sequence[int]) -> "Subgroup":
        return Subgroup(self, tuple(int(x) for x in self.closure(gens)))

    def generates(self, gens: Sequence[int]) -> bool:
        return len(self.closure(gens)) == self.n

    def count_subgroups_of_prime_order(self, p: int) -> int:
        return int((self.orders == p).sum()) // (p - 1)

    def check_laws(self, samples: int = 1000, seed: int = 0):
        n, m = self.n, self.mul
        ar = np.arange(n)
        if not ((m[0] == ar).all() and (m[:, 0] == ar).all()):
            raise AssertionError(f"{self.name}: index 0 is not the identity")
        if not (np.sort(m, axis=1) == ar).all():
            raise AssertionError(f"{self.name}: table rows are not permutations")
        if not (m[ar, self.inv] == 0).all():
            raise AssertionError(f"{self.name}: missing inverses")
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))
        if not (m[m[a, b], c] == m[a, m[b, c]]).all():
            raise AssertionError(f"{self.name}: associativity fails")

    # -- generating sets and automorphisms --------------------------------

    def _candidate_pool(self, x: int) -> np.ndarray:
        cls_sizes = np.array([len(c) for c in self.conjugacy_classes()])[self.class_of]
        return np.flatnonzero((self.orders == self.orders[x]) & (cls_sizes == cls_sizes[self.class_of[x]]))

    @cached_property
    def small_generating_set(self) -> tuple[int, ...]:
        """A short generating set, chosen to keep automorphism searches small."""
        n = self.n
        if n == 1:
            return ()
        if self.orders.max() == n:
            return (int(np.flatnonzero(self.orders == n)[0]),)
        pool_size = {}

        def cost(x):
            c = self.class_of[x]
            if c not in pool_size:
                pool_size[c] = len(self._candidate_pool(x))
            return pool_size[c]

        rng = np.random.default_rng(12345)
        best = None
        for _ in range(400):
            x, y = (int(v) for v in rng.integers(1, n, size=2))
            c = cost(x) * cost(y)
            if best is not None and c >= best[0]:
                continue
            if self.generates([x, y]):
                best = (c, (x, y))
        if best is not None:
            return best[1]
        gens: list[int] = []
        cur = self.closure(gens)
        while len(cur) < n:
            outside = np.setdiff1d(np.arange(n), cur)
            # largest-order element outside the current subgroup
            x = int(outside[np.argmax(self.orders[outside])])
            gens.append(x)
            cur = self.closure(gens)
        return tuple(gens)

    def automorphisms(self, budget: int = AUT_BUDGET) -> np.ndarray:
        """All automorphisms as an (|Aut G|, n) array of element permutations.

        Row 0 is the identity.  Cyclic groups use the unit group directly;
        everything else goes through the generator-image search.
        """
        if "_aut" not in self.__dict__:
            if self.meta.get("kind") == "cyclic":
                n = self.n
                # element c^i has index i in the cyclic constructor
                units = [u for u in range(1, n + 1) if math.gcd(u, n) == 1] if n > 1 else [1]
                ar = np.arange(n)
                auts = np.array([(ar * u) % n for u in units], dtype=np.int32)
            else:
                auts = find_homs(self, self, bijective=True, budget=budget)
            order = np.lexsort(auts.T[::-1])
            self.__dict__["_aut"] = auts[order]
        return self.__dict__["_aut"]

    def inner_automorphism(self, g: int) -> np.ndarray:
        return self.mul[self.mul[g, :], self.inv[g]]

    def is_inner(self, aut: np.ndarray) -> Optional[int]:
        """An element g with aut = conjugation by g, or None."""
        gens = self.small_generating_set
        cand = np.arange(self.n)
        for x in gens:
            img = self.mul[self.mul[cand, x], self.inv[cand]]
            cand = cand[img == aut[x]]
        return int(cand[0]) if len(cand) else None

    @cached_property
    def fingerprint(self) -> tuple:
        """Isomorphism invariant: order, abelian flag, class (size, order) multiset, centre size."""
        cls = sorted((len(c), int(self.orders[c[0]])) for c in self.conjugacy_classes())
        return (self.n, self.is_abelian, tuple(cls), len(self.centre()))


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(repr=False, compare=False)
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(int(e) for e in self.elements)))

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.n, dtype=bool)
        m[list(self.elements)] = True
        return m

    def __contains__(self, x) -> bool:
        return bool(self.mask[int(x)])

    def is_normal(self) -> bool:
        return len(self.parent.normalizer(self)) == self.parent.n

    def right_cosets(self) -> np.ndarray:
        """coset_of[x] = id of the coset Hx; ids are 0..index-1."""
        G = self.parent
        coset_of = np.full(G.n, -1, dtype=np.int64)
        H = np.array(self.elements)
        k = 0
        for x in range(G.n):
            if coset_of[x] < 0:
                coset_of[G.mul[H, x]] = k
                k += 1
        return coset_of

    def as_group(self, name: str = "H") -> FiniteGroup:
        """The subgroup as a standalone Cayley table (identity stays at index 0)."""
        els = np.array(self.elements)
        pos = np.full(self.parent.n, -1, dtype=np.int64)
        pos[els] = np.arange(len(els))
        mul = pos[self.parent.mul[np.ix_(els, els)]]
        return FiniteGroup(mul, labels=[self.parent.label(e) for e in els], name=name, check=False)

    def conjugate(self, g: int) -> "Subgroup":
        G = self.parent
        H = np.array(self.elements)
        return Subgroup(G, tuple(G.mul[G.mul[g, H], G.inv[g]]))


# -- homomorphism search ----------------------------------------------------

def _spanning_tree(G: FiniteGroup, gens: Sequence[int]):
    # BFS order with j = parent[j] * gens[via[j]]
    parent = np.full(G.n, -1, dtype=np.int64)
    via = np.full(G.n, -1, dtype=np.int64)
    seen = np.zeros(G.n, dtype=bool)
    seen[0] = True
    order = [0]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for i, g in enumerate(gens):
            y = int(G.mul[x, g])
            if not seen[y]:
                seen[y] = True
                parent[y], via[y] = x, i
                order.append(y)
    if len(order) != G.n:
        raise ValueError("generators do not generate the group")
    return order, parent, via


def _test_words(k: int):
    """Short words in generator indices (negative = inverse) used for pruning."""
    words = []
    for i, j in itertools.combinations(range(k), 2):
        words += [(i, j), (i, -j - 1), (i, i, j), (i, j, j), (i, j, -i - 1, -j - 1), (i, j, i, -j - 1)]
    return words


def _eval_words(G: FiniteGroup, images: np.ndarray, words) -> np.ndarray:
    # images: (C, k) array of element indices; returns (C, len(words)) element orders
    out = np.empty((images.shape[0], len(words)), dtype=np.int64)
    for w, word in enumerate(words):
        acc = np.zeros(images.shape[0], dtype=np.int64)
        for letter in word:
            x = images[:, letter] if letter >= 0 else G.inv[images[:, -letter - 1]]
            acc = G.mul[acc, x]
        out[:, w] = G.orders[acc]
    return out


def find_homs(G: FiniteGroup, H: FiniteGroup, bijective=True, first_only=False,
              budget: int = AUT_BUDGET) -> np.ndarray:
    """Isomorphisms (bijective=True) G -> H by generator-image search.

    Returns an (m, |G|) array; with ``first_only`` at most one row.
    """
    if bijective and G.fingerprint != H.fingerprint:
        return np.zeros((0, G.n), dtype=np.int32)
    gens = list(G.small_generating_set)
    if not gens:
        return np.zeros((1, G.n), dtype=np.int32)
    tree_order, parent, via = _spanning_tree(G, gens)
    if bijective:
        H_cls_sizes = np.array([len(c) for c in H.conjugacy_classes()])[H.class_of]
        G_cls_sizes = np.array([len(c) for c in G.conjugacy_classes()])[G.class_of]
        pools = [np.flatnonzero((H.orders == G.orders[g]) & (H_cls_sizes == G_cls_sizes[g])) for g in gens]
    else:
        pools = [np.flatnonzero(G.orders[g] % H.orders == 0) for g in gens]
    total = math.prod(len(p) for p in pools)
    if total > budget:
        raise BudgetExceeded(f"homomorphism search {G.name}->{H.name}: {total} candidate tuples > budget {budget}")
    words = _test_words(len(gens))
    target = _eval_words(G, np.array([gens]), words)[0] if words else None
    found = []
    # iterate over the first pool in blocks, the rest as a full product
    if total == 0:
        return np.zeros((0, G.n), dtype=np.int32)
    if len(gens) == 1:
        rest = np.zeros((1, 0), dtype=np.int64)
    else:
        rest = np.array(list(itertools.product(*pools[1:])), dtype=np.int64).reshape(-1, len(gens) - 1)
    block = max(1, 2_000_000 // max(1, len(rest) * max(1, G.n // 8)))
    right = [G.mul[:, g] for g in gens]
    for start in range(0, len(pools[0]), block):
        heads = pools[0][start:start + block]
        T = np.concatenate([np.repeat(heads, len(rest))[:, None], np.tile(rest, (len(heads), 1))], axis=1)
        if words:
            got = _eval_words(H, T, words)
            keep = (got == target) if bijective else (target % got == 0)
            T = T[keep.all(axis=1)]
        if not len(T):
            continue
        img = np.zeros((len(T), G.n), dtype=np.int64)
        for j in tree_order[1:]:
            img[:, j] = H.mul[img[:, parent[j]], T[:, via[j]]]
        ok = np.ones(len(T), dtype=bool)
        for i, g in enumerate(gens):
            ok &= (img[:, right[i]] == H.mul[img, T[:, i][:, None]]).all(axis=1)
        if bijective:
            ok &= (np.sort(img, axis=1) == np.arange(G.n)).all(axis=1)
        img = img[ok]
        if len(img):
            found.append(img.astype(np.int32))
            if first_only:
                return found[0][:1]
    if not found:
        return np.zeros((0, G.n), dtype=np.int32)
    return np.concatenate(found)


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> Optional[np.ndarray]:
    if G.n != H.n:
        return None
    res = find_homs(G, H, bijective=True, first_only=True)
    return res[0] if len(res) else None


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


# -- constructors -------------------------------------------------------------

def from_generators(identity, gens: Sequence, multiply: Callable, key: Callable = lambda e: e,
                    label: Callable = str, name="G", named_gens=None, meta=None,
                    limit: int = 10**5) -> FiniteGroup:
    """Close a set of concrete generators under ``multiply`` and tabulate."""
    elements = [identity]
    index: dict[Hashable, int] = {key(identity): 0}
    parent, via = [-1], [-1]
    right = [[] for _ in gens]
    head = 0
    while head < len(elements):
        x = elements[head]
        for gi, g in enumerate(gens):
            y = multiply(x, g)
            ky = key(y)
            j = index.get(ky)
            if j is None:
                j = len(elements)
                index[ky] = j
                elements.append(y)
                parent.append(head)
                via.append(gi)
                if j >= limit:
                    raise BudgetExceeded(f"group closure exceeded {limit} elements")
            right[gi].append(j)
        head += 1
    n = len(elements)
    R = np.array(right, dtype=np.int32).reshape(len(gens), n)
    mul = np.empty((n, n), dtype=np.int32)
    mul[:, 0] = np.arange(n)
    for j in range(1, n):
        mul[:, j] = R[via[j]][mul[:, parent[j]]]
    gen_idx = [index[key(g)] for g in gens]
    named = {nm: index[key(g)] for nm, g in (named_gens or {}).items()}
    G = FiniteGroup(mul, gens=gen_idx, labels=[label(e) for e in elements], name=name,
                    elements=elements, named=named, meta=meta)
    G.index = index
    G.key = key
    return G


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError(f"cyclic group needs n >= 1, got {n}")
    ar = np.arange(n)
    mul = (ar[:, None] + ar[None, :]) % n
    labels = ["1"] + [f"c^{i}" if i > 1 else "c" for i in range(1, n)]
    return FiniteGroup(mul, gens=[1] if n > 1 else [], labels=labels, name=f"C{n}",
                       elements=[(i,) for i in range(n)], named={"c": 1 % n},
                       meta={"kind": "cyclic", "n": n})


def _ab_label(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("a" if i == 1 else f"a^{i}")
    if j:
        parts.append("b" if j == 1 else f"b^{j}")
    return " ".join(parts) or "1"


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: a rotation of order n, b a reflection."""
    if n < 2:
        raise GroupSpecError(f"dihedral group needs n >= 2, got {n}")

    def mult(x, y):
        return ((x[0] + (-1) ** x[1] * y[0]) % n, (x[1] + y[1]) % 2)

    return from_generators((0, 0), [(1, 0), (0, 1)], mult, label=lambda e: _ab_label(*e),
                           name=f"D{n}", named_gens={"a": (1, 0), "b": (0, 1)},
                           meta={"kind": "dihedral", "n": n})


def default_omega(p: int, r: int) -> int:
    """Smallest integer of multiplicative order exactly r mod p."""
    for w in range(1, p):
        if pow(w, r, p) == 1 and all(pow(w, r // q, p) != 1 for q in _prime_divisors(r)):
            return w
    raise GroupSpecError(f"no element of order {r} mod {p}")


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def metacyclic(p: int, r: int, omega: Optional[int] = None) -> FiniteGroup:
    """G_{p,r} = <a, b | a^p = b^r = 1, b a b^-1 = a^omega> on pairs (i, j) = a^i b^j."""
    if not isprime(p) or p == 2:
        raise GroupSpecError(f"metacyclic group needs an odd prime p, got {p}")
    if r < 1 or (p - 1) % r:
        raise GroupSpecError(f"r={r} does not divide p-1={p - 1}")
    w = default_omega(p, r) if omega is None else omega % p
    if pow(w, r, p) != 1 or any(pow(w, r // q, p) == 1 for q in _prime_divisors(r)):
        raise GroupSpecError(f"omega={omega} does not have order {r} mod {p}")
    pw = [pow(w, j, p) for j in range(r)]

    def mult(x, y):
        return ((x[0] + pw[x[1]] * y[0]) % p, (x[1] + y[1]) % r)

    gens = [(1, 0), (0, 1)] if r > 1 else [(1, 0)]
    return from_generators((0, 0), gens, mult, label=lambda e: _ab_label(*e),
                           name=f"Gpr({p},{r})", named_gens={"a": (1, 0), "b": (0, 1 % r)},
                           meta={"kind": "metacyclic", "p": p, "r": r, "omega": w})


def direct_product(G: FiniteGroup, H: FiniteGroup, name: Optional[str] = None) -> FiniteGroup:
    n1, n2 = G.n, H.n
    mul = (G.mul[:, None, :, None].astype(np.int64) * n2 + H.mul[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    labels = [f"({a}, {b})" for a in G.labels for b in H.labels]
    gens = [g * n2 for g in G.gens] + list(H.gens)
    named = {k: v * n2 for k, v in G.named.items()}
    for k, v in H.named.items():
        named[k if k not in named else k + "2"] = v
    P = FiniteGroup(mul, gens=gens, labels=labels, name=name or f"{G.name}x{H.name}", named=named,
                    meta={"kind": "direct", "factors": (G, H)})
    return P


def inject(P: FiniteGroup, which: int, x: int) -> int:
    """Image of x under the inclusion of factor ``which`` into a direct product."""
    G, H = P.meta["factors"]
    return int(x) * H.n if which == 0 else int(x)


def semidirect_cp(p: int, Q: FiniteGroup, lam: Sequence[int], name: Optional[str] = None) -> FiniteGroup:
    """C_p x| Q where q acts on C_p by multiplication with lam[q] (a homomorphism Q -> Z_p^*)."""
    lam = np.asarray(lam, dtype=np.int64) % p
    if lam[0] != 1 or not (lam[Q.mul] == (lam[:, None] * lam[None, :]) % p).all():
        raise GroupSpecError("lam is not a homomorphism into Z_p^*")
    nq = Q.n
    i = np.arange(p)
    # index (i, q) -> q * p + i
    qq = np.repeat(np.arange(nq), p)
    ii = np.tile(i, nq)
    mul = Q.mul[qq[:, None], qq[None, :]].astype(np.int64) * p + (ii[:, None] + lam[qq][:, None] * ii[None, :]) % p
    labels = [f"a^{b}.{Q.labels[a]}" for a, b in zip(qq, ii)]
    gens = [1] + [g * p for g in Q.gens]
    return FiniteGroup(mul, gens=gens, labels=labels, name=name or f"C{p}:{Q.name}",
                       named={"a": 1}, meta={"kind": "semidirect", "p": p, "Q": Q, "lam": lam})


def _perm_mult(a, b):
    return tuple(a[x] for x in b)


def from_permutations(perms: Sequence[Sequence[int]], name="G", named=None, meta=None) -> FiniteGroup:
    perms = [tuple(int(v) for v in p) for p in perms]
    d = len(perms[0])
    return from_generators(tuple(range(d)), perms, _perm_mult, name=name,
                           label=lambda e: _cycle_string(e), named_gens=named, meta=meta)


def _cycle_string(perm) -> str:
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen or perm[s] == s:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def symmetric(n: int) -> FiniteGroup:
    if n < 2:
        return cyclic(1)
    t = tuple([1, 0] + list(range(2, n)))
    c = tuple(list(range(1, n)) + [0])
    return from_permutations([t, c], name=f"S{n}", meta={"kind": "symmetric", "n": n})


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        return cyclic(1)
    gens = []
    for k in range(2, n):
        p = list(range(n))
        p[0], p[1], p[k] = 1, k, 0
        gens.append(tuple(p))
    return from_permutations(gens, name=f"A{n}", meta={"kind": "alternating", "n": n})


# projective line over F_q: points 0..q-1 and infinity = q

def mobius_perm(M, q: int) -> tuple[int, ...]:
    a, b, c, d = M
    out = []
    for z in range(q):
        num, den = (a * z + b) % q, (c * z + d) % q
        out.append(q if den == 0 else num * pow(den, -1, q) % q)
    out.append(q if c % q == 0 else a * pow(c, -1, q) % q)
    return tuple(out)


def _mat_mult(q):
    def mult(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % q, (a * f + b * h) % q, (c * e + d * g) % q, (c * f + d * h) % q)
    return mult


def _projective_group(q: int, pgl: bool) -> FiniteGroup:
    if not isprime(q) or q == 2:
        raise GroupSpecError(f"q must be an odd prime, got {q}")
    gens = [(1, 1, 0, 1), (0, q - 1, 1, 0)]
    if pgl:
        gens.append((int(primitive_root(q)), 0, 0, 1))
    kind = "PGL2" if pgl else "PSL2"
    G = from_generators((1, 0, 0, 1), gens, _mat_mult(q), key=lambda M: mobius_perm(M, q),
                        label=lambda M: "[[%d,%d],[%d,%d]]" % M, name=f"{kind}({q})",
                        meta={"kind": kind, "q": q})
    expected = q * (q * q - 1) // (1 if pgl else 2)
    assert G.n == expected, (G.n, expected)
    return G


def psl2(q: int) -> FiniteGroup:
    """PSL_2(q) acting on the q+1 points of the projective line."""
    return _projective_group(q, pgl=False)


def pgl2(q: int) -> FiniteGroup:
    """PGL_2(q) acting on the q+1 points of the projective line."""
    return _projective_group(q, pgl=True)


def element_from_matrix(G: FiniteGroup, M) -> int:
    """Index of the Moebius transformation given by the 2x2 matrix ``M`` (flat or nested)."""
    q = G.meta["q"]
    flat = tuple(int(v) % q for v in np.asarray(M).ravel())
    try:
        return G.index[mobius_perm(flat, q)]
    except KeyError:
        raise GroupSpecError(f"matrix {flat} does not lie in {G.name}") from None


def matrix_det(G: FiniteGroup, x: int) -> int:
    a, b, c, d = G.elements[x]
    return (a * d - b * c) % G.meta["q"]


def psl_trace(G: FiniteGroup, x: int) -> int:
    """Trace of x in PSL_2(q), normalised to the representative t <= (q-1)/2 of {t, -t}."""
    q = G.meta["q"]
    a, b, c, d = G.elements[x]
    det = (a * d - b * c) % q
    t = (a + d) % q
    # rescale to determinant 1: det = s^2, divide trace by s
    s = next(s for s in range(1, q) if s * s % q == det)
    t = t * pow(s, -1, q) % q
    return min(t, q - t)


def affine_plane_group(p: int, mats: Sequence, name: Optional[str] = None) -> FiniteGroup:
    """F_p^2 x| H with H generated by the given 2x2 matrices, elements (v, M)."""
    mm = _mat_mult(p)
    ident = (1, 0, 0, 1)

    def mult(x, y):
        (v, M), (w, N) = x, y
        a, b, c, d = M
        return (((v[0] + a * w[0] + b * w[1]) % p, (v[1] + c * w[0] + d * w[1]) % p), mm(M, N))

    gens = [((1, 0), ident), ((0, 1), ident)] + [((0, 0), tuple(int(t) % p for t in np.asarray(M).ravel())) for M in mats]

    def lab(e):
        v, M = e
        return f"v{v}.[[{M[0]},{M[1]}],[{M[2]},{M[3]}]]"

    return from_generators(((0, 0), ident), gens, mult, label=lab, name=name or f"V{p * p}:H",
                           meta={"kind": "affine", "p": p})


S3_MATRICES = {"t": ((0, -1), (1, -1)), "s": ((0, 1), (1, 0))}
_AFFINE_H = {"S3": ("t", "s"), "C3": ("t",), "C2": ("s",), "1": ()}


# -- specs ---------------------------------------------------------------------

@dataclass(frozen=True)
class GroupSpec:
    """Parsed group description; ``str(spec)`` round-trips through :func:`parse_group`."""
    kind: str
    args: tuple = ()

    def __str__(self):
        k, a = self.kind, self.args
        if k == "direct":
            return "x".join(str(s) for s in a)
        if k in ("C", "D", "S", "A"):
            return f"{k}{a[0]}"
        if k == "Gpr":
            return f"Gpr({','.join(map(str, a))})"
        if k in ("PSL", "PGL"):
            return f"{k}(2,{a[0]})"
        if k == "V":
            return f"V{a[0] ** 2}:{a[1]}"
        raise GroupSpecError(k)

    def build(self) -> FiniteGroup:
        return build_group(self)


_FACTOR_PATTERNS = [
    (re.compile(r"^C(\d+)$"), "C"),
    (re.compile(r"^D(\d+)$"), "D"),
    (re.compile(r"^S(\d+)$"), "S"),
    (re.compile(r"^A(\d+)$"), "A"),
    (re.compile(r"^Gpr\((\d+),(\d+)(?:,(\d+))?\)$"), "Gpr"),
    (re.compile(r"^PSL\(2,(\d+)\)$"), "PSL"),
    (re.compile(r"^PGL\(2,(\d+)\)$"), "PGL"),
    (re.compile(r"^V(\d+):(S3|C3|C2|1)$"), "V"),
]


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "x" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def parse_group(text: str) -> GroupSpec:
    """Parse ``C6``, ``C6xC2``, ``D5``, ``Gpr(13,6)``, ``PSL(2,7)``, ``PGL(2,7)``, ``S5``, ``A5``, ``V25:S3``."""
    s = text.replace(" ", "")
    factors = _split_top(s)
    specs = []
    for tok in factors:
        for pat, kind in _FACTOR_PATTERNS:
            m = pat.match(tok)
            if m:
                break
        else:
            raise GroupSpecError(f"unrecognised group token {tok!r} in {text!r}")
        g = [x for x in m.groups() if x is not None]
        if kind == "V":
            sq = int(g[0])
            p = math.isqrt(sq)
            if p * p != sq or not isprime(p):
                raise GroupSpecError(f"unrecognised group token {tok!r}: {sq} is not a prime square")
            specs.append(GroupSpec("V", (p, g[1])))
        else:
            specs.append(GroupSpec(kind, tuple(int(x) for x in g)))
    spec = specs[0] if len(specs) == 1 else GroupSpec("direct", tuple(specs))
    build_group(spec)  # validate parameters eagerly
    return spec


@lru_cache(maxsize=256)
def build_group(spec: GroupSpec) -> FiniteGroup:
    k, a = spec.kind, spec.args
    if k == "direct":
        G = build_group(a[0])
        for s in a[1:]:
            G = direct_product(G, build_group(s))
        G.name = str(spec)
        return G
    if k == "C":
        return cyclic(a[0])
    if k == "D":
        return dihedral(a[0])
    if k == "S":
        return symmetric(a[0])
    if k == "A":
        return alternating(a[0])
    if k == "Gpr":
        return metacyclic(*a)
    if k == "PSL":
        return psl2(a[0])
    if k == "PGL":
        return pgl2(a[0])
    if k == "V":
        p, h = a
        return affine_plane_group(p, [S3_MATRICES[x] for x in _AFFINE_H[h]], name=f"V{p * p}:{h}")
    raise GroupSpecError(f"unknown group kind {k!r}")


def group(text) -> FiniteGroup:
    """Convenience: build from a spec string or GroupSpec."""
    spec = text if isinstance(text, GroupSpec) else parse_group(text)
    return build_group(spec)
