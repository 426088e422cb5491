"""Surface-kernel epimorphisms Gamma(sigma) -> G and what can be read off them.

A generating tuple lists images of the canonical generators
a_1, b_1, ..., a_gamma, b_gamma, x_1, ..., x_k with
prod [a_j, b_j] * x_1 ... x_k = 1 and ord(x_i) = m_i exactly (the kernel is
then torsion-free).  Kernels of epimorphisms onto G correspond to
Aut(G)-orbits of generating tuples, and Aut(G) acts freely on them.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .counting import count_kernels_cyclic_p, s_formula as s_k  # noqa: F401  (re-exported)
from .errors import BudgetExceeded, SignatureError, VerificationError
from .groups import FiniteGroup, Subgroup, matrix_det, psl_trace
from .signatures import Signature, as_signature, genus_of_kernel

SEARCH_BUDGET = 2 * 10**8  # candidate tuples, after fixing the first slot up to conjugacy


@dataclass(frozen=True, eq=False)
class GeneratingTuple:
    sig: Signature
    G: FiniteGroup = field(repr=False)
    hyp: tuple = ()   # ((a_1, b_1), ..., (a_gamma, b_gamma))
    ell: tuple = ()   # (x_1, ..., x_k)

    @classmethod
    def from_flat(cls, sig: Signature, G: FiniteGroup, flat: Sequence[int]) -> "GeneratingTuple":
        flat = [int(v) for v in flat]
        g = sig.gamma
        hyp = tuple((flat[2 * j], flat[2 * j + 1]) for j in range(g))
        return cls(sig, G, hyp, tuple(flat[2 * g:]))

    @property
    def flat(self) -> tuple:
        return tuple(v for pair in self.hyp for v in pair) + tuple(self.ell)

    def relation_value(self) -> int:
        G = self.G
        acc = 0
        for a, b in self.hyp:
            acc = G.op(acc, G.commutator(a, b))
        for x in self.ell:
            acc = G.op(acc, x)
        return acc

    def is_valid(self) -> bool:
        G = self.G
        if len(self.ell) != self.sig.k or len(self.hyp) != self.sig.gamma:
            return False
        if self.relation_value() != 0:
            return False
        if any(G.orders[x] != m for x, m in zip(self.ell, self.sig.periods)):
            return False
        return G.generates(self.flat)

    def verify(self):
        if not self.is_valid():
            raise VerificationError(f"invalid generating tuple {self.labels()} for {self.sig}")
        return self

    def labels(self) -> list[str]:
        return [self.G.label(v) for v in self.flat]

    def to_json(self) -> dict:
        out = {"signature": self.sig.to_json(), "group": self.G.name,
               "hyperbolic": [[self.G.label(a), self.G.label(b)] for a, b in self.hyp],
               "elliptic": [self.G.label(x) for x in self.ell]}
        if self.sig.is_triangle():
            l, m, n = (int(self.G.orders[x]) for x in self.ell)
            out["type"] = f"({l},{m},{n})"
            if l == 2:
                out["map_type"] = "{%d,%d}" % (n, m)
        return out

    @property
    def x(self):
        return self.ell[0]

    @property
    def y(self):
        return self.ell[1]

    @property
    def z(self):
        return self.ell[2]


def _ordered(gamma: int, periods: Sequence[int]) -> Signature:
    """Signature whose periods keep the given order (braid moves and triality permute them)."""
    periods = tuple(int(m) for m in periods)
    if list(periods) == sorted(periods):
        return Signature(gamma, periods)
    s = object.__new__(Signature)
    object.__setattr__(s, "gamma", gamma)
    object.__setattr__(s, "periods", periods)
    return s


# -- search ---------------------------------------------------------------------

def _slot_pools(sig: Signature, G: FiniteGroup):
    """Candidate pools per slot; the last elliptic slot (if any) is determined."""
    pools = []
    for _ in range(2 * sig.gamma):
        pools.append(np.arange(G.n))
    for m in sig.periods:
        pools.append(np.flatnonzero(G.orders == m))
    return pools


def _relation(G: FiniteGroup, T: np.ndarray, gamma: int, upto: int) -> np.ndarray:
    """Partial relation value over slots [0, upto) for an (M, slots) array."""
    acc = np.zeros(len(T), dtype=np.int64)
    inv = G.inv
    s = 0
    while s < 2 * gamma and s + 1 < upto:
        a, b = T[:, s], T[:, s + 1]
        acc = G.mul[G.mul[G.mul[G.mul[acc, a], b], inv[a]], inv[b]]
        s += 2
    while s < upto:
        acc = G.mul[acc, T[:, s]]
        s += 1
    return acc


def generates_many(G: FiniteGroup, T: np.ndarray) -> np.ndarray:
    """Vectorised test that each row of T generates G."""
    M = len(T)
    if M == 0:
        return np.zeros(0, dtype=bool)
    S = np.zeros((M, G.n), dtype=bool)
    S[:, 0] = True
    shifts = [G.mul[:, G.inv[T[:, c]]].T for c in range(T.shape[1])]  # (M, n): y -> y * g^-1
    while True:
        new = S.copy()
        for sh in shifts:
            new |= np.take_along_axis(S, sh, axis=1)
        if (new == S).all():
            break
        S = new
    return S.all(axis=1)


def _search_rep(sig: Signature, G: FiniteGroup, pools, rep: int, first_only: bool) -> np.ndarray:
    """All valid tuples with slot 0 equal to ``rep``."""
    k, gamma = sig.k, sig.gamma
    nslots = 2 * gamma + k
    determined = k >= 1
    free = list(range(1, nslots - (1 if determined else 0)))
    found = []
    # outer python loop over all free slots but the last two; vectorise those
    inner = free[-2:] if len(free) >= 2 else free
    outer = free[:len(free) - len(inner)]
    if inner:
        grids = np.array(list(itertools.product(*[pools[s] for s in inner])), dtype=np.int64).reshape(-1, len(inner))
    else:
        grids = np.zeros((1, 0), dtype=np.int64)
    for head in itertools.product(*[pools[s] for s in outer]):
        T = np.zeros((len(grids), nslots), dtype=np.int64)
        T[:, 0] = rep
        for s, v in zip(outer, head):
            T[:, s] = v
        for c, s in enumerate(inner):
            T[:, s] = grids[:, c]
        if determined:
            acc = _relation(G, T, gamma, nslots - 1)
            last = G.inv[acc]
            T[:, -1] = last
            T = T[G.orders[last] == sig.periods[-1]]
        else:
            T = T[_relation(G, T, gamma, nslots) == 0]
        if first_only:
            # stop at the first generating row instead of testing the whole batch
            hit = next((row for row in T if G.generates(row)), None)
            if hit is not None:
                found.append(hit[None, :])
                break
            continue
        if len(T):
            T = T[generates_many(G, T)]
        if len(T):
            found.append(T)
    if not found:
        return np.zeros((0, nslots), dtype=np.int64)
    return np.concatenate(found)


def _first_slot_reps(sig: Signature, G: FiniteGroup, pools):
    cls = G.class_of
    reps = []
    seen = set()
    for x in pools[0]:
        c = int(cls[x])
        if c not in seen:
            seen.add(c)
            reps.append(int(x))
    return reps


def search_size(sig: Signature, G: FiniteGroup) -> int:
    pools = _slot_pools(sig, G)
    reps = _first_slot_reps(sig, G, pools)
    free = pools[1:-1] if sig.k >= 1 else pools[1:]
    return len(reps) * math.prod(len(p) for p in free)


def canonical_keys(aut: np.ndarray, T: np.ndarray) -> list[tuple]:
    """Lexicographically least Aut(G)-image of each row of T."""
    out = []
    for row in T:
        imgs = aut[:, row]
        best = imgs[np.lexsort(imgs.T[::-1])[0]]
        out.append(tuple(int(v) for v in best))
    return out


@dataclass
class KernelSearch:
    sig: Signature
    G: FiniteGroup = field(repr=False)
    classes: list            # list of GeneratingTuple (canonical representative per kernel)
    n_epimorphisms: int
    aut_order: int

    @property
    def count(self) -> int:
        return len(self.classes)


def enumerate_epimorphisms(sig, G: FiniteGroup, budget: int = SEARCH_BUDGET, threads: int = 1) -> KernelSearch:
    """Exhaustive surface-kernel epimorphism search, grouped into kernel classes.

    Slot 0 is fixed to one representative per conjugacy class; the number of
    epimorphisms is recovered as sum over representatives of class size times
    the number of completions.  Kernel classes are Aut(G)-orbits, found by
    canonicalising every completion; the orbit count must equal
    n_epimorphisms / |Aut G| since Aut(G) acts freely.
    """
    sig = as_signature(sig)
    if not _rh_ok(sig, G.n):
        return KernelSearch(sig, G, [], 0, len(G.automorphisms()))
    size = search_size(sig, G)
    if size > budget:
        raise BudgetExceeded(f"epimorphism search for {sig} -> {G.name}: {size} candidates > budget {budget}")
    pools = _slot_pools(sig, G)
    reps = _first_slot_reps(sig, G, pools)
    cls_size = {r: len(G.conjugacy_classes()[G.class_of[r]]) for r in reps}
    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            results = list(ex.map(lambda r: _search_rep(sig, G, pools, r, False), reps))
    else:
        results = [_search_rep(sig, G, pools, r, False) for r in reps]
    n_epi = sum(cls_size[r] * len(T) for r, T in zip(reps, results))
    aut = G.automorphisms()
    keys = set()
    for T in results:
        keys.update(canonical_keys(aut, T))
    if n_epi % len(aut) or n_epi // len(aut) != len(keys):
        raise VerificationError(
            f"{sig} -> {G.name}: {n_epi} epimorphisms, |Aut|={len(aut)}, but {len(keys)} orbits")
    classes = [GeneratingTuple.from_flat(sig, G, k).verify() for k in sorted(keys)]
    return KernelSearch(sig, G, classes, n_epi, len(aut))


def _rh_ok(sig: Signature, order: int) -> bool:
    twice = order * sig.area()
    return twice.denominator == 1 and twice.numerator % 2 == 0


def count_kernels(sig, G: FiniteGroup, budget: int = SEARCH_BUDGET, threads: int = 1) -> int:
    """Number of normal surface subgroups K of Gamma(sig) with Gamma/K isomorphic to G."""
    return enumerate_epimorphisms(sig, G, budget, threads).count


def first_epimorphism(sig, G: FiniteGroup, budget: int = SEARCH_BUDGET) -> Optional[GeneratingTuple]:
    sig = as_signature(sig)
    if not _rh_ok(sig, G.n):
        return None
    size = search_size(sig, G)
    if size > budget:
        raise BudgetExceeded(f"epimorphism search for {sig} -> {G.name}: {size} candidates > budget {budget}")
    pools = _slot_pools(sig, G)
    for r in _first_slot_reps(sig, G, pools):
        T = _search_rep(sig, G, pools, r, True)
        if len(T):
            return GeneratingTuple.from_flat(sig, G, T[0]).verify()
    return None


# -- quotients ------------------------------------------------------------------

def fixed_points(t: GeneratingTuple, h: int) -> int:
    """Fixed points of h != 1 on the surface: |C_G(h)| * sum_i #{j mod m_i : x_i^j ~ h} / m_i."""
    G = t.G
    if h == 0:
        raise ValueError("identity fixes every point")
    total = Fraction(0)
    ch = G.class_of[h]
    for x, m in zip(t.ell, t.sig.periods):
        if m % G.orders[h]:
            continue
        hits, acc = 0, 0
        for _ in range(m):
            acc = int(G.mul[acc, x])
            hits += G.class_of[acc] == ch
        total += Fraction(hits, m)
    val = len(G.centralizer(h)) * total
    assert val.denominator == 1
    return int(val)


def surface_genus(t: GeneratingTuple) -> int:
    return genus_of_kernel(t.sig, t.G.n)


def quotient_data(t: GeneratingTuple, H) -> tuple[Signature, int]:
    """Signature and orbit genus of Gamma_H = theta^-1(H), i.e. of S -> S/H.

    Periods come from cycle lengths of the x_i on the cosets Hg; the genus is
    solved from the area relation and cross-checked against Riemann-Hurwitz
    for S -> S/H using fixed-point counts of elements of H.
    """
    G = t.G
    if not isinstance(H, Subgroup):
        H = G.subgroup_generated(H)
    coset_of = H.right_cosets()
    index = G.n // H.order
    reps = np.array([np.flatnonzero(coset_of == c)[0] for c in range(index)])
    periods = []
    for x, m in zip(t.ell, t.sig.periods):
        perm = coset_of[G.mul[reps, x]]
        seen = np.zeros(index, dtype=bool)
        for s in range(index):
            if seen[s]:
                continue
            c, cur = 0, s
            while not seen[cur]:
                seen[cur] = True
                cur = perm[cur]
                c += 1
            if m // c >= 2:
                periods.append(m // c)
    area_H = index * t.sig.area()
    twice_gamma = area_H + 2 - sum((1 - Fraction(1, m) for m in periods), Fraction(0))
    assert twice_gamma.denominator == 1 and twice_gamma.numerator % 2 == 0
    gamma_H = int(twice_gamma) // 2
    # second route: 2g - 2 = |H| (2 gamma_H - 2) + sum_{h != 1} fix(h)
    g = surface_genus(t)
    fix_total = sum(fixed_points(t, h) for h in H.elements if h != 0)
    rhs = 2 * g - 2 - fix_total
    if rhs % (2 * H.order) or rhs // (2 * H.order) + 1 != gamma_H:
        raise VerificationError(f"quotient genus mismatch: cosets give {gamma_H}, fixed points give {rhs}/{2 * H.order}+1")
    return Signature(gamma_H, tuple(periods)), gamma_H


# -- braid action (gamma = 0) -----------------------------------------------------

def _braid_moves(G: FiniteGroup, tup: tuple):
    k = len(tup)
    for i in range(k - 1):
        x, y = tup[i], tup[i + 1]
        fwd = list(tup)
        fwd[i], fwd[i + 1] = G.conj(x, y), x
        yield tuple(fwd)
        bwd = list(tup)
        bwd[i], bwd[i + 1] = y, G.conj(int(G.inv[y]), x)
        yield tuple(bwd)


def braid_orbits(tuples: Sequence[GeneratingTuple]) -> list[list[int]]:
    """Partition of the input tuples into braid-group x Aut(G) orbits (gamma = 0 only).

    Intermediate tuples may have their periods in any order.
    """
    if not tuples:
        return []
    if any(t.sig.gamma for t in tuples):
        raise SignatureError("braid orbits are only implemented for orbit genus 0")
    G = tuples[0].G
    aut = G.automorphisms()

    def canon(tup):
        return canonical_keys(aut, np.array([tup]))[0]

    state_orbit: dict[tuple, int] = {}
    result = []
    for idx, t in enumerate(tuples):
        key = canon(t.ell)
        if key in state_orbit:
            result[state_orbit[key]].append(idx)
            continue
        oid = len(result)
        result.append([idx])
        stack = [key]
        state_orbit[key] = oid
        while stack:
            cur = stack.pop()
            for nxt in _braid_moves(G, cur):
                kn = canon(nxt)
                if kn not in state_orbit:
                    state_orbit[kn] = oid
                    stack.append(kn)
    return result


# -- hypermaps (triangle tuples) ----------------------------------------------------

def _require_triangle(t: GeneratingTuple):
    if t.sig.gamma != 0 or t.sig.k != 3:
        raise SignatureError(f"{t.sig} is not a triangle signature")


def petrie_length(t: GeneratingTuple) -> int:
    """Twice the order of the commutator [x, y]."""
    _require_triangle(t)
    return 2 * int(t.G.orders[t.G.commutator(t.x, t.y)])


def inverting_automorphisms(t: GeneratingTuple) -> np.ndarray:
    _require_triangle(t)
    G = t.G
    aut = G.automorphisms()
    ok = (aut[:, t.x] == G.inv[t.x]) & (aut[:, t.y] == G.inv[t.y])
    return aut[ok]


def is_reflexible(t: GeneratingTuple) -> bool:
    return len(inverting_automorphisms(t)) > 0


def retuple(t: GeneratingTuple, ell: Sequence[int]) -> GeneratingTuple:
    G = t.G
    ell = tuple(int(v) for v in ell)
    return GeneratingTuple(_ordered(t.sig.gamma, [int(G.orders[v]) for v in ell]), G, (), ell)


def mirror(t: GeneratingTuple) -> GeneratingTuple:
    """Orientation reversal: (x, y, z) -> (x^-1, y^-1, y x)."""
    _require_triangle(t)
    G = t.G
    return retuple(t, (G.inv[t.x], G.inv[t.y], G.op(t.y, t.x)))


def triality_images(t: GeneratingTuple, perm: Sequence[int]) -> GeneratingTuple:
    """Permute the roles of (x, y, z): new (u, v) = (old[perm[0]], old[perm[1]]), w = (u v)^-1."""
    _require_triangle(t)
    G = t.G
    u, v = t.ell[perm[0]], t.ell[perm[1]]
    return retuple(t, (u, v, G.inv[G.op(u, v)]))


def kernel_key(t: GeneratingTuple) -> tuple:
    """Aut(G)-canonical form; equal keys iff equal kernels (same period order)."""
    return canonical_keys(t.G.automorphisms(), np.array([t.flat]))[0]


def operation_orbits(tuples: Sequence[GeneratingTuple], with_mirror=True, perms=None) -> list[list[int]]:
    """Orbits of the C2 x S3 action (chirality, duality, triality) on kernel classes.

    Images are matched against the input list; images outside it (other
    period orders) are followed so orbits are closed.
    """
    perms = list(itertools.permutations(range(3))) if perms is None else perms
    key_of = [kernel_key(t) for t in tuples]
    index = {k: i for i, k in enumerate(key_of)}
    parent = list(range(len(tuples)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, t in enumerate(tuples):
        imgs = [triality_images(t, p) for p in perms]
        if with_mirror:
            imgs += [mirror(s) for s in imgs]
        for s in imgs:
            j = index.get(kernel_key(s))
            if j is not None:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(len(tuples)):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


@dataclass(frozen=True)
class FullGroupType:
    kind: str  # "GxC2", "ProperExtension", "EqualsG"
    description: str = ""
    inner_by: Optional[int] = None

    def __str__(self):
        return self.kind if not self.description else f"{self.kind}({self.description})"


def full_automorphism_type(t: GeneratingTuple) -> FullGroupType:
    """Full automorphism group A of a reflexible regular hypermap.

    A is G extended by an involution R acting as the inverting automorphism
    alpha.  If alpha is conjugation by g, then g^-1 R centralises G and
    A = G x C2 exactly when some central c has c^2 = g^2 (then c g^-1 R is a
    central involution outside G).  Otherwise A is a proper extension.
    """
    inv_auts = inverting_automorphisms(t)
    if not len(inv_auts):
        raise ValueError("hypermap is chiral; its full automorphism group is G")
    G = t.G
    alpha = inv_auts[0]
    g = G.is_inner(alpha)
    if g is not None:
        g2 = G.op(g, g)
        Z = G.centre()
        if any(G.op(int(c), int(c)) == g2 for c in Z):
            return FullGroupType("GxC2", f"{G.name}xC2", inner_by=g)
        return FullGroupType("ProperExtension", f"{G.name}.2 (inner, no central splitting)", inner_by=g)
    kind = G.meta.get("kind")
    if kind == "PSL2":
        return FullGroupType("ProperExtension", f"PGL2({G.meta['q']})")
    return FullGroupType("ProperExtension", f"{G.name}.2 (outer)")


def hall_square_test(t: GeneratingTuple) -> bool:
    """For a (2,3,7) tuple in PSL_2(q): True iff 3 - t^2 is a square mod q (t = trace of z).

    Square predicts A = PSL_2(q) x C2, non-square predicts PGL_2(q).
    """
    G = t.G
    if G.meta.get("kind") != "PSL2":
        raise ValueError("Hall's test applies to PSL_2(q)")
    q = G.meta["q"]
    tr = psl_trace(G, t.z)
    v = (3 - tr * tr) % q
    return v == 0 or pow(v, (q - 1) // 2, q) == 1


@dataclass
class HypermapRecord:
    tuple: GeneratingTuple
    genus: int
    petrie: int
    reflexible: bool
    full_group_type: FullGroupType
    conder_ref: Optional[str] = None
    orbit_id: Optional[int] = None
    case_id: Optional[str] = None

    @property
    def chiral(self) -> bool:
        return not self.reflexible

    def to_json(self) -> dict:
        d = self.tuple.to_json()
        d.update({"genus": self.genus, "petrie": self.petrie, "reflexible": self.reflexible,
                  "full_group_type": str(self.full_group_type), "conder_ref": self.conder_ref,
                  "orbit_id": self.orbit_id, "case": self.case_id})
        return d


def hypermap_record(t: GeneratingTuple, case_id=None, conder_ref=None) -> HypermapRecord:
    refl = is_reflexible(t)
    ftype = full_automorphism_type(t) if refl else FullGroupType("EqualsG", t.G.name)
    return HypermapRecord(t, surface_genus(t), petrie_length(t), refl, ftype, conder_ref, case_id=case_id)
