"""One test per acceptance criterion, each with its time limit.

Every test records a PASS/FAIL line that is printed in the terminal summary
(and echoed to stdout, visible with -s).
"""
import time

import pytest

from primegenus import data
from primegenus.census import (hypermap_census, nonorientable_census, orbit_sizes, check_small_prime,
                               classify_small_prime, reflection_involution)
from primegenus.counting import count_kernels_cyclic_p, s_bruteforce, s_formula
from primegenus.epi import (count_kernels, enumerate_epimorphisms, full_automorphism_type, hall_square_test,
                            is_reflexible, petrie_length, quotient_data)
from primegenus.errors import LemmaInapplicable
from primegenus.groups import group, psl_trace
from primegenus.homology import ABELIAN_GENUS_TWO, case_actions, kernel_census, sylow_lemma_applies
from primegenus.jacobian import decompose_jacobian, jacobian_cases_for
from primegenus.signatures import as_signature, enumerate_signatures, rho_of

from conftest import ACCEPTANCE_LINES

PRIMES = (7, 11, 13, 17, 19, 23, 29, 31)


class Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit
        self.problems = []

    def check(self, cond, msg):
        if not cond:
            self.problems.append(msg)

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        dt = time.perf_counter() - self.t0
        if exc is not None:
            self.problems.append(f"{exc_type.__name__}: {exc}")
        if dt >= self.limit:
            self.problems.append(f"took {dt:.2f}s, limit {self.limit}s")
        ok = not self.problems
        line = f"[{'PASS' if ok else 'FAIL'}] #{self.number:>2} {self.title} ({dt:.2f}s / {self.limit}s)"
        if not ok:
            line += ": " + "; ".join(self.problems)
        ACCEPTANCE_LINES.append((self.number, line))
        print(line)
        if exc is None:
            assert ok, line
        return False


def test_1_signature_lists():
    printed = {}
    for rho, s, status in data.read_table("sigma", 3):
        if status == "printed":
            printed.setdefault(int(rho), set()).add(as_signature(s))
    with Criterion(1, "signature lists rho=4..84 equal the printed lists", 1.0) as c:
        for rho in range(4, 85):
            got = set(enumerate_signatures(rho))
            want = printed.get(rho, set())
            if got != want:
                extra = ", ".join(sorted(x.short() for x in got - want))
                missing = ", ".join(sorted(x.short() for x in want - got))
                c.check(False, f"rho={rho}: extra [{extra}] missing [{missing}]"
                               + (f" (rho of extra = {[str(rho_of(x)) for x in got - want]})" if extra else ""))


def test_2_rho_one_counts():
    rows = [r for r in data.read_table("small_rho", 6) if r[0] == "1" and r[5] == "printed"]
    with Criterion(2, "rho=1 kernel counts, brute force, s_k oracle", 10.0) as c:
        c.check(len(rows) == 6, f"{len(rows)} printed rho=1 rows")
        for p in (2, 3, 5, 7, 11):
            c.check(count_kernels_cyclic_p("2;-", p) == p ** 3 + p ** 2 + p + 1, f"(2;-) formula at p={p}")
        for p in (2, 3, 5):
            c.check(count_kernels("2;-", group(f"C{p}")) == p ** 3 + p ** 2 + p + 1, f"(2;-) search at p={p}")
        expect = {"1;2^4": 4, "1;3,3,3": 9, "2^8": 1, "3^6": 11, "5^4": 13}
        for _, s, p, g, cnt, _ in rows:
            if s == "2;-":
                continue
            want = expect[s]
            c.check(data.eval_count(cnt, int(p)) == want, f"{s} table value")
            c.check(count_kernels_cyclic_p(s, int(p)) == want, f"{s} formula")
            c.check(count_kernels(s, group(g)) == want, f"{s} search")
        for p in (2, 3, 5, 7):
            for k in range(1, 7):
                c.check(s_formula(p, k) == s_bruteforce(p, k), f"s_{k}({p})")


def test_3_rho_two_counts():
    with Criterion(3, "(1;2,2) gives 4(p+1) kernels for C_2p and D_p", 10.0) as c:
        for p in (3, 5):
            for g in (f"C{2 * p}", f"D{p}"):
                n = count_kernels("1;2,2", group(g))
                c.check(n == 4 * (p + 1), f"{g}: {n}")


EXPECTED = {
    1: (3, {"Gpr({p},6)xC2": lambda p: 4}),
    2: (5, {"Gpr({p},10)": lambda p: 4}),
    3: (8, {"Gpr({p},8)": lambda p: 4}),
    4: (3, {"Gpr({p},6)": lambda p: 2, "Gpr({p},3)xC2": lambda p: 2}),
    5: (3, {"Gpr({p},6)": lambda p: 2 * (p + 1)}),
    6: (5, {"Gpr({p},5)": lambda p: 12}),
    7: (4, {"Gpr({p},4)": lambda p: 2 * (p + 1)}),
    8: (1, {"Gpr({p},2)xC2": lambda p: 20 * (p + 1)}),
    9: (3, {"Gpr({p},3)": lambda p: 6 * (p + 1)}),
}


def test_4_good_prime_census():
    with Criterion(4, "homology census: conditions and kernel counts, cases 1-9", 5.0) as c:
        for case in range(1, 10):
            mod, want = EXPECTED[case]
            acts = case_actions(case)
            for p in PRIMES:
                holds = mod == 1 or p % mod == 1
                if not sylow_lemma_applies(acts[0].Q.n, p, acts[0].sig.periods):
                    c.check(not holds, f"case {case} p={p}: bad prime where the condition holds")
                    try:
                        kernel_census(acts[0], p)
                        c.check(False, f"case {case} p={p}: census ran at a bad prime")
                    except LemmaInapplicable:
                        pass
                    continue
                got = {}
                for act in acts:
                    cen = kernel_census(act, p)
                    c.check(cen.condition_holds == holds, f"case {case} p={p}: condition {cen.condition_holds}")
                    for ch in cen.per_character:
                        if ch.kernels:
                            got[ch.induced_group] = got.get(ch.induced_group, 0) + ch.kernels
                exp = {k.format(p=p): f(p) for k, f in want.items()} if holds else {}
                c.check(got == exp, f"case {case} p={p}: {got} != {exp}")


def test_5_sporadic_search():
    with Criterion(5, "sporadic kernel classes 3, 2, 2", 60.0) as c:
        for sig, g, n in (("0;2,3,7", "PSL(2,13)", 3), ("0;2,3,8", "PGL(2,7)", 2), ("0;3,3,4", "PSL(2,7)", 2)):
            ks = enumerate_epimorphisms(sig, group(g))
            c.check(ks.count == n, f"{sig} -> {g}: {ks.count}")
            c.check(ks.n_epimorphisms == n * ks.aut_order, f"{g}: epimorphism count check")


def test_6_petrie_and_traces():
    with Criterion(6, "Hurwitz Petrie lengths, traces, Hall test; family Petrie 2p", 10.0) as c:
        ks = enumerate_epimorphisms("0;2,3,7", group("PSL(2,13)"))
        c.check(sorted(petrie_length(t) for t in ks.classes) == [12, 14, 26], "Petrie lengths")
        c.check(len({psl_trace(ks.G, t.z) for t in ks.classes}) == 3, "order-7 traces not distinct")
        squares = [t for t in ks.classes if hall_square_test(t)]
        c.check(len(squares) == 1, f"{len(squares)} square traces")
        if len(squares) == 1:
            c.check(full_automorphism_type(squares[0]).kind == "GxC2", "square trace is not the GxC2 cover")
        for p in (7, 13):
            for sig, g in (("0;2,6,6", f"Gpr({p},6)xC2"), ("0;3,6,6", f"Gpr({p},6)"), ("0;3,6,6", f"Gpr({p},3)xC2")):
                for t in enumerate_epimorphisms(sig, group(g)).classes:
                    c.check(petrie_length(t) == 2 * p, f"{g} Petrie {petrie_length(t)}")


def test_7_chirality():
    with Criterion(7, "family records chiral, sporadic reflexible, orbit structure", 30.0) as c:
        by_p = {p: hypermap_census(p) for p in (7, 11, 13, 17)}
        for p, recs in by_p.items():
            for r in recs:
                family = r.case_id in ("i", "ii", "iii", "iv", "vi")
                c.check(is_reflexible(r.tuple) == (not family), f"p={p} case {r.case_id} chirality")
        c.check(orbit_sizes(by_p[7], "i") == [4], "case i: one chiral pair")
        c.check(orbit_sizes(by_p[11], "ii") == [2, 2], "case ii: two chiral pairs")
        c.check(orbit_sizes(by_p[17], "iii") == [4], "case iii: one chiral pair")
        c.check(orbit_sizes(by_p[13], "iv") == [2, 2], "case iv: two chiral pairs")
        c.check(orbit_sizes(by_p[11], "vi") == [6, 6], "case vi: twelve hypermaps in two orbits of six")
        c.check(orbit_sizes(by_p[13], "x") == [1, 1, 1], "case x: three regular maps")
        c.check(orbit_sizes(by_p[7], "xi") == [1, 1] and orbit_sizes(by_p[7], "xii") == [1, 1], "cases xi, xii")


def test_8_nonorientable():
    with Criterion(8, "non-orientable quotients at p=13 and p=7", 10.0) as c:
        n13 = nonorientable_census(13)
        c.check(len(n13) == 1, f"p=13: {len(n13)} quotients")
        if n13:
            cover = n13[0].base
            c.check(cover.full_group_type.kind == "GxC2" and hall_square_test(cover.tuple), "p=13 cover")
            c.check(n13[0].petrie == 13, f"N15.1 Petrie {n13[0].petrie}")
        n7 = nonorientable_census(7, include_absent=True)
        maps = [r for r in n7 if r.quotient_exists and r.base.case_id == "xi"]
        hyp = [r for r in n7 if r.quotient_exists and r.base.case_id == "xii"]
        c.check(len(maps) == 2, f"{len(maps)} quotients of type {{3,8}}")
        c.check(len(hyp) == 1, f"{len(hyp)} quotients of type (3,3,4)")
        pgl = [r for r in n7 if r.base.case_id == "xii" and r.base.full_group_type.kind != "GxC2"]
        c.check(len(pgl) == 1 and not pgl[0].quotient_exists, "PGL-type hypermap must give no quotient")
        for r in n7:
            c.check((reflection_involution(r.base.tuple) is not None) == r.quotient_exists, "involution route")


def test_9_jacobian():
    with Criterion(9, "Jacobian decompositions, all cases, p <= 31", 5.0) as c:
        for p in PRIMES:
            for case in jacobian_cases_for(p):
                rep = decompose_jacobian(case, p)
                c.check(rep.admissibility.admissible, f"{case} p={p}: not admissible")
                c.check(rep.residual_dim == 0, f"{case} p={p}: residual {rep.residual_dim}")
                c.check(sum(f.exponent * f.genus for f in rep.factors) == p + 1, f"{case} p={p}: {rep.text()}")
        c.check(decompose_jacobian("viii", 7).text().endswith("[dims 1 + 3 + 4 = 8]"), "case viii p=7")


def test_10_small_prime():
    with Criterion(10, "p=5 brute-force list", 120.0) as c:
        recs = classify_small_prime(5)
        printed = [r for r in data.read_table("small_primes", 8) if r[7] == "printed"]
        found = {(r.sig, r.group_spec): r for r in recs}
        for label, rho, s, g, parent, actions, conder, _ in printed:
            r = found.get((as_signature(s), g))
            c.check(r is not None, f"({label}) {g} {s} missing")
        want = [("V25:S3", "0;2,3,10"), ("V25:C3", "0;3,3,5"), ("V25:C2", "0;2,5,10"), ("V25:1", "0;5,5,5"),
                ("S5", "0;2,4,6"), ("C5xS3", "0;2,10,15"), ("C20", "0;4,5,20")]
        for g, s in want:
            r = found.get((as_signature(s), g))
            c.check(r is not None and "actions up to topological equivalence: 1" in r.notes,
                    f"{g} {s}: not exactly one action")
        problems = [pr for pr in check_small_prime(5, recs)]
        c.check(not problems, "; ".join(problems))
        extras = sorted(f"{r.group_spec} {r.sig.short()}" for key, r in found.items()
                        if (str(key[0]), key[1]) not in {(str(as_signature(x[2])), x[3]) for x in printed})
        print(f"    p=5 actions beyond the printed list: {extras}")
