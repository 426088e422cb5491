import pytest
from hypothesis import given, strategies as st

from primegenus.counting import (count_kernels_cyclic_p, s_bruteforce, s_formula, st_recurrence, t_formula,
                                 tuple_count)
from primegenus.errors import BudgetExceeded
from primegenus.signatures import parse_signature


def test_small_values():
    assert s_formula(5, 4) == 52
    assert s_bruteforce(5, 4) == 52
    assert s_bruteforce(3, 3) == 2
    assert s_formula(7, 1) == 0 and s_bruteforce(7, 1) == 0


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("k", range(1, 7))
def test_formula_vs_bruteforce(p, k):
    assert s_formula(p, k) == s_bruteforce(p, k)


@given(st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]), st.integers(1, 12))
def test_recurrence_and_partition(p, k):
    assert st_recurrence(p, k) == (s_formula(p, k), t_formula(p, k))
    c = tuple_count(p, k)
    assert c.s + (p - 1) * c.t == (p - 1) ** k
    assert s_formula(p, 2) == p - 1


def test_budget():
    with pytest.raises(BudgetExceeded):
        s_bruteforce(31, 12)


def test_rho_one_cyclic_counts():
    assert count_kernels_cyclic_p(parse_signature("2;-"), 7) == 7 ** 3 + 7 ** 2 + 7 + 1
    assert count_kernels_cyclic_p(parse_signature("1;2^4"), 2) == 4
    assert count_kernels_cyclic_p(parse_signature("1;3,3,3"), 3) == 9
    assert count_kernels_cyclic_p(parse_signature("2^8"), 2) == 1
    assert count_kernels_cyclic_p(parse_signature("3^6"), 3) == 11
    assert count_kernels_cyclic_p(parse_signature("5^4"), 5) == 13
    assert count_kernels_cyclic_p(parse_signature("5^5"), 5) == 51
