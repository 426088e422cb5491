from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from primegenus.characters import (character_table_abelian, check_relations, fixed_dim, inner_product,
                                   irreducible_characters, metacyclic_irreps, trivial_character)
from primegenus.cyclotomic import Cyclo
from primegenus.errors import UnsupportedGroup
from primegenus.groups import group


def test_zeta_relations():
    z = Cyclo.root(5, 1)
    total = Cyclo.integer(5, 0)
    for k in range(5):
        total = total + Cyclo.root(5, k)
    assert total.is_zero()
    assert (z * z.conj()).rational() == 1


@given(st.integers(1, 24), st.lists(st.integers(-3, 3), min_size=1, max_size=24),
       st.lists(st.integers(-3, 3), min_size=1, max_size=24))
def test_ring_laws(N, a, b):
    x = Cyclo(N, (a + [0] * N)[:N])
    y = Cyclo(N, (b + [0] * N)[:N])
    assert x * y == y * x
    assert (x + y) - y == x
    assert (x * y).conj() == x.conj() * y.conj()
    assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-8


@pytest.mark.parametrize("spec", ["Gpr(7,3)", "Gpr(7,6)", "Gpr(13,4)", "Gpr(11,10)", "Gpr(7,6)xC2",
                                  "Gpr(7,2)xC2", "C6xC2"])
def test_orthogonality(spec):
    G = group(spec)
    chars = irreducible_characters(G)
    assert sum(c.degree ** 2 for c in chars) == G.n
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            assert inner_product(a, b) == (1 if i == j else 0)


@pytest.mark.parametrize("p,r", [(7, 3), (7, 6), (13, 4), (31, 10), (17, 8)])
def test_irrep_relations(p, r):
    reps = metacyclic_irreps(p, r)
    assert all(check_relations(rep) for rep in reps)
    assert len(reps) == r + (p - 1) // r


def test_fixed_dims():
    G = group("Gpr(7,3)")
    P = G.subgroup_generated([G["a"]])
    B = G.subgroup_generated([G["b"]])
    for chi in irreducible_characters(G):
        if chi.degree == 3:
            assert fixed_dim(chi, P) == 0 and fixed_dim(chi, B) == 1
        else:
            assert fixed_dim(chi, P) == 1
    assert fixed_dim(trivial_character(G), B) == 1


def test_unsupported():
    with pytest.raises(UnsupportedGroup):
        irreducible_characters(group("A5"))


@given(st.sampled_from(["C12", "C6xC2", "C10", "C2xC2", "C8"]))
def test_abelian_table(spec):
    G = group(spec)
    chars = character_table_abelian(G)
    assert len(chars) == G.n
    assert sum(Fraction(c.image_order()) for c in chars) > 0
    prod = chars[1] * chars[-1]
    assert inner_product(prod, prod) == 1
