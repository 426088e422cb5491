import pytest
from hypothesis import given, settings, strategies as st

from primegenus.epi import (braid_orbits, count_kernels, enumerate_epimorphisms, first_epimorphism,
                            full_automorphism_type, hall_square_test, is_reflexible, kernel_key, mirror,
                            operation_orbits, petrie_length, quotient_data, surface_genus, triality_images)
from primegenus.errors import BudgetExceeded
from primegenus.groups import group, psl_trace
from primegenus.signatures import parse_signature

from conftest import naive_kernel_count


@pytest.mark.parametrize("sig,spec", [("1;2,2", "C6"), ("1;2,2", "D3"), ("0;2,2,3,3", "C6"),
                                      ("0;3,3,6,6", "C6"), ("0;2,5,5,10", "C10"), ("2;-", "C3"),
                                      ("0;2,6,6", "C6xC2"), ("0;3,6,6", "C6"), ("0;2,3,8", "S4"),
                                      ("0;2,2,2,3", "A4")])
def test_search_matches_naive_oracle(sig, spec):
    s, G = parse_signature(sig), group(spec)
    assert count_kernels(s, G) == naive_kernel_count(s, G)


def test_rho_two_counts():
    # (1;2,2): 4(p+1) kernels for both C_2p and D_p
    for p in (3, 5):
        assert count_kernels("1;2,2", group(f"C{2 * p}")) == 4 * (p + 1)
        assert count_kernels("1;2,2", group(f"D{p}")) == 4 * (p + 1)


def test_hurwitz_kernels():
    ks = enumerate_epimorphisms("0;2,3,7", group("PSL(2,13)"))
    assert ks.count == 3
    assert ks.n_epimorphisms == 3 * ks.aut_order
    G = ks.G
    assert sorted(petrie_length(t) for t in ks.classes) == [12, 14, 26]
    traces = {psl_trace(G, t.z) for t in ks.classes}
    assert len(traces) == 3
    hall = [hall_square_test(t) for t in ks.classes]
    assert hall.count(True) == 1
    for t, h in zip(ks.classes, hall):
        assert (full_automorphism_type(t).kind == "GxC2") == h
        assert surface_genus(t) == 14


def test_no_epimorphism():
    assert first_epimorphism("0;2,3,7", group("A5")) is None
    assert first_epimorphism("0;2,3,7", group("PSL(2,7)")) is not None
    assert count_kernels("0;2,4,5", group("C40")) == 0


def test_budget_is_hard_error():
    with pytest.raises(BudgetExceeded):
        enumerate_epimorphisms("0;2^5", group("PSL(2,13)"), budget=10)


def test_quotient_genera():
    t = first_epimorphism("0;2,6,6", group("Gpr(7,6)xC2"))
    G = t.G
    P = G.subgroup_generated([G["a"]])
    sig, g = quotient_data(t, P)
    # P acts freely (p divides no period), so S/P is unramified of genus 2
    assert g == 2 and sig == parse_signature("2;-")


def test_braid_orbits_c15():
    ks = enumerate_epimorphisms("0;5,15,15", group("C15"))
    assert ks.count == 3
    assert sorted(map(len, braid_orbits(ks.classes))) == [1, 2]


def test_family_maps_are_chiral_with_petrie_2p():
    for p in (7, 13):
        ks = enumerate_epimorphisms("0;2,6,6", group(f"Gpr({p},6)xC2"))
        for t in ks.classes:
            assert not is_reflexible(t)
            assert petrie_length(t) == 2 * p


CASES = [("0;2,3,7", "PSL(2,13)"), ("0;2,3,8", "PGL(2,7)"), ("0;3,3,4", "PSL(2,7)"),
         ("0;2,6,6", "Gpr(7,6)xC2"), ("0;5,5,5", "Gpr(11,5)"), ("0;2,5,10", "Gpr(11,10)")]


@settings(max_examples=20)
@given(st.sampled_from(CASES), st.data())
def test_operations_preserve_validity(case, data):
    ks = enumerate_epimorphisms(*case[:1], group(case[1]))
    t = data.draw(st.sampled_from(ks.classes))
    perm = data.draw(st.permutations(range(3)))
    for s in (mirror(t), triality_images(t, perm), mirror(mirror(t))):
        s.verify()
        assert surface_genus(s) == surface_genus(t)
    assert kernel_key(mirror(mirror(t))) == kernel_key(t)


@settings(max_examples=15)
@given(st.sampled_from(CASES))
def test_orbits_partition(case):
    ks = enumerate_epimorphisms(case[0], group(case[1]))
    orbits = operation_orbits(ks.classes)
    assert sorted(i for o in orbits for i in o) == list(range(ks.count))
    chiral_free = operation_orbits(ks.classes, with_mirror=False)
    assert len(chiral_free) >= len(orbits)
