"""Isogeny decompositions of J(S) from admissible subgroup collections.

A collection H_1..H_t of subgroups of G is admissible when
sum_j dim V^{H_j} <= dim V for every non-trivial irreducible V.  Then
J(S) ~ prod_j J(S/H_j) x A, and comparing dimensions fixes dim A.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .characters import fixed_dim, irreducible_characters
from .epi import GeneratingTuple, first_epimorphism, quotient_data, surface_genus
from .errors import UnsupportedGroup, VerificationError
from .groups import FiniteGroup, Subgroup, group, metacyclic
from .signatures import as_signature


@dataclass
class IrrepSlack:
    name: str
    degree: int
    fixed: list
    slack: int  # degree - sum(fixed); negative means the inequality fails


@dataclass
class AdmissibilityReport:
    admissible: bool
    rows: list

    def __bool__(self):
        return self.admissible

    def failures(self) -> list:
        return [r for r in self.rows if r.slack < 0]


@dataclass(eq=False)
class AdmissibleCollection:
    G: FiniteGroup = field(repr=False)
    subgroups: list
    report: AdmissibilityReport = field(repr=False, default=None)

    def __post_init__(self):
        self.report = is_admissible(self.G, self.subgroups)
        if not self.report:
            bad = ", ".join(f"{r.name} ({-r.slack} over)" for r in self.report.failures())
            raise VerificationError(f"collection is not admissible: {bad}")


def is_admissible(G: FiniteGroup, subgroups, chars=None) -> AdmissibilityReport:
    """Check sum_j d_V^{H_j} <= d_V over the non-trivial irreducibles of G."""
    subs = [H if isinstance(H, Subgroup) else G.subgroup_generated(H) for H in subgroups]
    if len({H.elements for H in subs}) != len(subs):
        raise ValueError("subgroups in an admissible collection must be distinct")
    chars = irreducible_characters(G) if chars is None else chars  # raises UnsupportedGroup
    rows = []
    for chi in chars:
        if chi.exps is not None and not any(chi.exps) or \
                chi.exps is None and chi.degree == 1 and all(v == chi.values[0] for v in chi.values):
            continue  # trivial character
        fixed = [fixed_dim(chi, H) for H in subs]
        rows.append(IrrepSlack(chi.name, chi.degree, fixed, chi.degree - sum(fixed)))
    return AdmissibilityReport(all(r.slack >= 0 for r in rows), rows)


# -- explicit subgroups ----------------------------------------------------------

def metacyclic_subgroup_chars(G: FiniteGroup, a: int, b: int, p: int, r: int):
    """Pull back the irreducibles of G_{p,r} to <a, b> <= G.

    Returns (elements of <a,b>, a function mapping a subgroup of <a,b> to the
    matching subgroup of the model group, the model group).  The isomorphism
    a^i b^j -> (i, j) is checked on the full multiplication table.
    """
    w = next(k for k in range(1, p) if G.op(b, a, G.inv[b]) == G.power(a, k))
    M = metacyclic(p, r, w)
    phi = {}
    for i in range(p):
        for j in range(r):
            phi[G.op(G.power(a, i), G.power(b, j))] = M.index[(i, j)]
    if len(phi) != p * r:
        raise VerificationError(f"<a, b> does not have order {p * r}")
    elems = list(phi)
    for x in elems:
        for y in elems:
            if phi[int(G.mul[x, y])] != M.mul[phi[x], phi[y]]:
                raise VerificationError("a^i b^j -> (i, j) is not a homomorphism")

    def transfer(H: Subgroup) -> Subgroup:
        return Subgroup(M, tuple(phi[int(h)] for h in H.elements))

    return elems, transfer, M


@dataclass
class IsogenyFactor:
    subgroup: str
    genus: int
    exponent: int
    label: str  # T, C, E, C1, C2


@dataclass
class IsogenyReport:
    case_id: str
    p: int
    group: str
    factors: list
    residual_dim: int
    genus: int
    admissibility: AdmissibilityReport = field(repr=False, default=None)

    def dimension(self) -> int:
        return sum(f.genus * f.exponent for f in self.factors) + self.residual_dim

    def text(self) -> str:
        terms, dims = [], []
        for f in self.factors:
            name = "E" if f.label == "E" else f"J({f.label})"
            terms.append(name if f.exponent == 1 else f"{name}^{f.exponent}")
            dims.append(str(f.genus) if f.exponent == 1 else f"{f.exponent}*{f.genus}")
        if self.residual_dim:
            terms.append("A")
            dims.append(str(self.residual_dim))
        return f"J(S) ~ {' x '.join(terms)} [dims {' + '.join(dims)} = {self.dimension()}]"

    __str__ = text

    def to_json(self) -> dict:
        return {"case": self.case_id, "p": self.p, "group": self.group, "genus": self.genus,
                "factors": [f.__dict__ for f in self.factors], "residual_dim": self.residual_dim,
                "text": self.text()}


# case -> (signature, group template, r)
JACOBIAN_CASES = {
    "i": ("0;2,6,6", "Gpr({p},6)xC2", 6),
    "ii": ("0;2,5,10", "Gpr({p},10)", 10),
    "iii": ("0;2,8,8", "Gpr({p},8)", 8),
    "iv": ("0;3,6,6", "Gpr({p},6)", 6),
    "iv'": ("0;3,6,6", "Gpr({p},3)xC2", 3),
    "v": ("0;2,2,3,3", "Gpr({p},6)", 6),
    "vi": ("0;5,5,5", "Gpr({p},5)", 5),
    "vii": ("0;2,2,4,4", "Gpr({p},4)", 4),
    "viii": ("0;2^5", "Gpr({p},2)xC2", 2),
    "ix": ("0;3^4", "Gpr({p},3)", 3),
}


def jacobian_cases_for(p: int) -> list[str]:
    return [c for c, (_, _, r) in JACOBIAN_CASES.items() if (p - 1) % r == 0]


def _genus(t: GeneratingTuple, H: Subgroup) -> int:
    return quotient_data(t, H)[1]


def _metacyclic_factors(t: GeneratingTuple, a: int, b: int, p: int, r: int):
    """T = S/<a> and the r conjugates Q_i = <a^i b>, i = 1..r, with the admissibility report."""
    G = t.G
    P = G.subgroup_generated([a])
    Qs = [G.subgroup_generated([G.op(G.power(a, i), b)]) for i in range(1, r + 1)]
    if len({Q.elements for Q in Qs}) != r:
        raise VerificationError("the subgroups <a^i b> are not distinct")
    B = G.subgroup_generated([b])
    for Q in Qs:
        if not any(Q.elements == B.conjugate(g).elements for g in range(G.n)):
            raise VerificationError("some <a^i b> is not conjugate to <b>")
    _, transfer, M = metacyclic_subgroup_chars(G, a, b, p, r)
    rep = is_admissible(M, [transfer(H) for H in [P] + Qs])
    if not rep:
        raise VerificationError(f"{{P, Q_1..Q_{r}}} is not admissible")
    gT = _genus(t, P)
    gC = {_genus(t, Q) for Q in Qs}
    if len(gC) != 1:
        raise VerificationError(f"conjugate subgroups gave different quotient genera {gC}")
    return gT, gC.pop(), rep


def decompose_jacobian(case: str, p: int, tuple: Optional[GeneratingTuple] = None) -> IsogenyReport:
    """Isogeny decomposition of J(S) for one surface in a family case.

    ``case`` is a key of JACOBIAN_CASES ("iv" is the G_{p,6} action, "iv'"
    the G_{p,3} x C2 action).  Without ``tuple`` the first epimorphism found
    is used.  Closed-form genera are compared with quotient_data.
    """
    if case not in JACOBIAN_CASES:
        raise UnsupportedGroup(f"no decomposition for case {case!r}")
    s, gtemplate, r = JACOBIAN_CASES[case]
    if (p - 1) % r:
        raise ValueError(f"case {case} needs p = 1 mod {r}, got p={p}")
    sig = as_signature(s)
    G = tuple.G if tuple is not None else group(gtemplate.format(p=p))
    t = tuple if tuple is not None else first_epimorphism(sig, G)
    if t is None:
        raise VerificationError(f"no surface-kernel epimorphism {sig} -> {G.name}")
    g = surface_genus(t)
    if g != p + 1:
        raise VerificationError(f"surface has genus {g}, expected {p + 1}")
    a = G["a"]
    if case in ("i", "viii"):
        b, c = G["b"], G["c"]  # c generates the central C2
        bt = G.op(b, c)
        want = (p - 1) // r
        # b -> bt is an automorphism swapping the two classes of complements;
        # label so that S/<bt> is the quotient of genus (p-1)/r
        if _genus(t, G.subgroup_generated([bt])) != want:
            b, bt = bt, b
        if case == "i":
            gT, gC, rep = _metacyclic_factors(t, a, bt, p, 6)
            factors = [IsogenyFactor("<a>", gT, 1, "T"), IsogenyFactor("<bt>", gC, 6, "C")]
            expect = [2, want]
        else:
            at, ab = G.op(a, c), G.op(a, b)
            subs = [G.subgroup_generated([x]) for x in (at, bt, ab)]
            rep = is_admissible(G, subs)
            if not rep:
                raise VerificationError("{<at>, <bt>, <ab>} is not admissible")
            gs = [_genus(t, H) for H in subs]
            factors = [IsogenyFactor("<at>", gs[0], 1, "E"), IsogenyFactor("<bt>", gs[1], 1, "C1"),
                       IsogenyFactor("<ab>", gs[2], 1, "C2")]
            expect = [1, (p - 1) // 2, (p + 1) // 2]
    else:
        b = G["b"]
        gT, gC, rep = _metacyclic_factors(t, a, b, p, r)
        factors = [IsogenyFactor("<a>", gT, 1, "T"), IsogenyFactor("<b>", gC, r, "C")]
        expect = [2, (p - 1) // r]
    got = [f.genus for f in factors]
    if got != expect:
        raise VerificationError(f"case {case}, p={p}: quotient genera {got}, closed forms give {expect}")
    residual = g - sum(f.genus * f.exponent for f in factors)
    if residual != 0:
        raise VerificationError(f"residual dimension {residual} != 0")
    return IsogenyReport(case, p, G.name, factors, residual, g, rep)
