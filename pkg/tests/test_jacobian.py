import pytest

from primegenus.epi import enumerate_epimorphisms
from primegenus.errors import UnsupportedGroup, VerificationError
from primegenus.groups import group
from primegenus.jacobian import (AdmissibleCollection, decompose_jacobian, is_admissible, jacobian_cases_for,
                                 metacyclic_subgroup_chars)

PRIMES = [7, 11, 13, 17, 19, 23, 29, 31]


@pytest.mark.parametrize("p", PRIMES)
def test_all_cases(p):
    for case in jacobian_cases_for(p):
        rep = decompose_jacobian(case, p)
        assert rep.residual_dim == 0
        assert rep.dimension() == p + 1
        assert rep.admissibility.admissible


def test_viii_text():
    assert decompose_jacobian("viii", 7).text() == "J(S) ~ E x J(C1) x J(C2) [dims 1 + 3 + 4 = 8]"
    assert decompose_jacobian("i", 13).text() == "J(S) ~ J(T) x J(C)^6 [dims 2 + 6*2 = 14]"


def test_every_surface_in_family_case():
    # not just the first epimorphism: every kernel class of case (iv) at p=13
    ks = enumerate_epimorphisms("0;3,6,6", group("Gpr(13,6)"))
    for t in ks.classes:
        assert decompose_jacobian("iv", 13, tuple=t).residual_dim == 0


def test_full_collection_on_direct_product_is_not_admissible():
    # on G_{p,6} x C2 the collection {<a>, <a^i bt>} over-counts a sign-twisted 3-dim irreducible
    G = group("Gpr(7,6)xC2")
    a, b, c = G["a"], G["b"], G["c"]
    bt = G.op(b, c)
    subs = [G.subgroup_generated([a])] + [G.subgroup_generated([G.op(G.power(a, i), bt)]) for i in range(1, 7)]
    rep = is_admissible(G, subs)
    assert not rep
    assert any(r.slack < 0 for r in rep.failures())
    with pytest.raises(VerificationError):
        AdmissibleCollection(G, subs)
    _, transfer, M = metacyclic_subgroup_chars(G, a, bt, 7, 6)
    assert is_admissible(M, [transfer(H) for H in subs])


def test_duplicates_rejected():
    G = group("Gpr(7,3)")
    H = G.subgroup_generated([G["b"]])
    with pytest.raises(ValueError):
        is_admissible(G, [H, H])


def test_bad_inputs():
    with pytest.raises(UnsupportedGroup):
        decompose_jacobian("x", 13)
    with pytest.raises(ValueError):
        decompose_jacobian("iii", 7)
