import pytest
from hypothesis import given, strategies as st

from pseudosym.errors import NotDivisible
from pseudosym.unipoly import ONE, UniPoly, divide_exact, format_poly, geom, t

polys = st.lists(st.integers(-5, 5), max_size=12).map(UniPoly)


def test_canonical_trim():
    assert UniPoly([1, 2, 0, 0]) == UniPoly([1, 2])
    assert UniPoly([0, 0]).is_zero()
    assert UniPoly().degree == -1 or UniPoly().is_zero()


def test_divide_exact_examples():
    assert divide_exact(ONE - t(1), 1) == ONE
    assert divide_exact(UniPoly([1, 0, -2, 1]), 1) == UniPoly([1, 1, -1])


def test_divide_exact_reports_step():
    with pytest.raises(NotDivisible) as info:
        divide_exact(ONE - t(1), 2)
    assert info.value.step == 2


@given(polys, st.integers(0, 4))
def test_divide_inverts_multiply(f, k):
    assert divide_exact(f * (ONE - t(1)) ** k, k) == f


def test_geom_empty_sum():
    assert geom(0, -1).is_zero()
    assert geom(2, 4) == t(2) + t(3) + t(4)
    assert geom(0, 2, step=3) == ONE + t(3) + t(6)


def test_partial_sums_and_eval():
    q = UniPoly([1, 3, 6])
    assert q.partial_sums(4) == [1, 4, 10, 10, 10]
    assert q(1) == 10


def test_format():
    assert format_poly(UniPoly([1, 0, 0, 0, -3, 3])) == "1 - 3t^4 + 3t^5"
    assert format_poly(UniPoly([0, -1])) == "-t"
    assert format_poly(UniPoly()) == "0"


def test_negative_shift_rejected():
    with pytest.raises(ValueError):
        t(1).shift(-2)
