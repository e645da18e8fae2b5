import itertools

import pytest
from hypothesis import given, strategies as st

from pseudosym.errors import ArithmeticOverflow, InvalidParameters, checked
from pseudosym.semigroup import (PseudoSymParams, check_conditions,
                                 compute_order_table, derive_generators,
                                 oracle_hilbert)

from golden import LARGE, SMALL


def test_small_generators():
    assert tuple(derive_generators(PseudoSymParams(*SMALL))) == (232, 237, 531, 1447)


def test_large_generators():
    assert tuple(derive_generators(PseudoSymParams(*LARGE))) == (801, 831, 5010, 8610)


def test_small_conditions_all_true():
    assert check_conditions(PseudoSymParams(*SMALL)).valid


def test_large_generators_share_factor_three():
    rep = check_conditions(PseudoSymParams(*LARGE))
    assert rep.failing() == ["coprime"]
    assert all((rep.cond1, rep.cond2, rep.cond3, rep.cond4, rep.ordered))


def test_cond4_boundary():
    rep = check_conditions(PseudoSymParams(21, 3, 7, 4, 2))
    assert not rep.cond4
    assert "cond4" in rep.failing()


@pytest.mark.parametrize("bad", [(1, 5, 5, 5, 1), (5, 5, 5, 1, 1), (6, 5, 5, 5, 5),
                                 (6, 5, 5, 5, 0)])
def test_parameter_range_rejected(bad):
    with pytest.raises(InvalidParameters):
        PseudoSymParams(*bad)


def test_checked_overflow():
    assert checked(2**63 - 1) == 2**63 - 1
    with pytest.raises(ArithmeticOverflow):
        checked(2**63)


def test_order_table_small_cases():
    table = compute_order_table((2, 3), 9)
    assert table[0] == 0
    assert table[1] is None
    assert table[4] == 2
    assert not table.in_semigroup(1)


def test_oracle_examples():
    assert oracle_hilbert((2, 3), 3) == [1, 2, 2, 2]
    assert oracle_hilbert((1,), 2) == [1, 1, 1]
    assert oracle_hilbert((232, 237, 531, 1447), 4) == [1, 4, 10, 20, 32]


def test_oracle_stabilizes_at_multiplicity():
    H = oracle_hilbert((2, 3), 6)
    assert H[2:] == [2] * 5


def test_ordered_implies_cond1_to_3():
    for a1, a2, a3, a4 in itertools.product(range(2, 9), repeat=4):
        for a21 in range(1, a1 - 1):
            rep = check_conditions(PseudoSymParams(a1, a2, a3, a4, a21))
            if rep.ordered:
                assert rep.cond1 and rep.cond2 and rep.cond3, (a1, a2, a3, a4, a21)


@given(st.lists(st.integers(2, 12), min_size=1, max_size=4), st.integers(0, 80))
def test_order_superadditive(gens, bound):
    table = compute_order_table(gens, bound)
    for s in range(bound + 1):
        if table[s] is None:
            continue
        for n in gens:
            if s + n <= bound:
                assert table[s + n] >= table[s] + 1
