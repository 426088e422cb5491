from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from primegenus.errors import NoSmoothKernel, SignatureError
from primegenus.signatures import (Signature, enumerate_signatures, genus_of_kernel, parse_signature,
                                   periods_in, rho_of, teich_dim)


def test_hurwitz_rho():
    assert rho_of(parse_signature("0;2,3,7")) == 84
    assert enumerate_signatures(84) == [Signature(0, (2, 3, 7))]


def test_rho_6_list():
    got = [s.short() for s in enumerate_signatures(6)]
    assert len(got) == 10
    assert got[-2:] == ["(2,2,2,6)", "(2,2,3,3)"]


def test_rho_8_contains_444():
    assert Signature(0, (4, 4, 4)) in enumerate_signatures(8)


def test_rho_1_has_five_fives_not_four():
    sigs = enumerate_signatures(1)
    assert parse_signature("5^5") in sigs
    assert parse_signature("5^4") not in sigs
    assert rho_of(parse_signature("5^4")) == Fraction(5, 3)


def test_parse_forms():
    assert parse_signature("(2,2,3,3)") == Signature(0, (2, 2, 3, 3))
    assert parse_signature("1;2^2") == Signature(1, (2, 2))
    assert parse_signature("2;-") == Signature(2, ())
    assert parse_signature("3^4").short() == "(3^4)"


@pytest.mark.parametrize("bad", ["0;2,x", "a;2,3,7", "0;1,2,3", "0;2,3,6", "0;-"])
def test_parse_rejects(bad):
    with pytest.raises(SignatureError):
        parse_signature(bad)


def test_genus_of_kernel():
    assert genus_of_kernel(parse_signature("0;2,3,7"), 84 * 13) == 14
    with pytest.raises(NoSmoothKernel):
        genus_of_kernel(parse_signature("0;2,3,7"), 85)


def test_teich_dim():
    assert teich_dim(parse_signature("0;2,2,3,3")) == 2
    assert teich_dim(parse_signature("0;2^5")) == 4
    assert teich_dim(parse_signature("0;2,3,7")) == 0


def test_period_filter():
    sigs = enumerate_signatures(4, period_filter=periods_in({2, 4}))
    assert all(set(s.periods) <= {2, 4} for s in sigs)
    assert parse_signature("0;2,2,4,4") in sigs


periods = st.lists(st.integers(2, 30), min_size=0, max_size=6)


@given(st.integers(0, 3), periods)
def test_roundtrip_and_rho(gamma, ms):
    area = 2 * gamma - 2 + sum(1 - Fraction(1, m) for m in ms)
    if area <= 0:
        with pytest.raises(SignatureError):
            Signature(gamma, tuple(ms))
        return
    s = Signature(gamma, tuple(ms))
    assert parse_signature(str(s)) == s
    assert parse_signature(s.short()) == s
    assert Signature.from_json(s.to_json()) == s
    assert rho_of(s) * s.area() == 2


@given(st.integers(3, 84))
def test_enumeration_is_exact(rho):
    for s in enumerate_signatures(rho):
        assert rho_of(s) == rho


@given(st.integers(4, 84), st.sampled_from([7, 11, 13, 17]))
def test_genus_p_plus_1(rho, p):
    for s in enumerate_signatures(rho):
        assert genus_of_kernel(s, rho * p) == p + 1
