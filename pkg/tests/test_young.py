import pytest
from hypothesis import given, strategies as st

from bmwskein.errors import CellOutsideDiagram
from bmwskein.young import (
    Partition,
    StdTableau,
    UpDownTableau,
    content,
    corners,
    dfun,
    enumerate_standard,
    enumerate_updown,
    hook_length,
    parse_partition,
    parse_path,
    partitions_of,
    updown_shapes,
)
from oracles import double_factorial, factorial

partitions = st.integers(0, 8).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_content():
    assert content((1, 1)) == 0
    assert content((1, 2)) == 1
    assert content((3, 1)) == -2


def test_hook_length():
    assert hook_length(Partition((1,)), (1, 1)) == 1
    assert hook_length(Partition((2, 1)), (1, 1)) == 3
    assert hook_length(Partition((2, 1)), (1, 2)) == 1
    with pytest.raises(CellOutsideDiagram):
        hook_length(Partition((2, 1)), (2, 2))


def test_dfun():
    assert dfun(Partition((1,)), (1, 1)) == 1
    assert dfun(Partition((1,)), (1, 1), primed=True) == -1
    assert dfun(Partition((2,)), (1, 2)) == 0
    with pytest.raises(CellOutsideDiagram):
        dfun(Partition((1,)), (1, 2))


def test_corners():
    assert corners(Partition()) == ([(1, 1)], [])
    add, rem = corners(Partition((2, 1)))
    assert set(add) == {(1, 3), (2, 2), (3, 1)} and set(rem) == {(1, 2), (2, 1)}
    add, rem = corners(Partition((2, 2)))
    assert set(add) == {(1, 3), (3, 1)} and set(rem) == {(2, 2)}


def test_updown_examples():
    assert [t.path for t in enumerate_updown(2, Partition())] == [(Partition((1,)), Partition())]
    paths = {str(t) for t in enumerate_updown(3, Partition((1,)))}
    assert paths == {"1>2>1", "1>1,1>1", "1>0>1"}
    total = sum(len(enumerate_updown(3, lam)) ** 2 for lam in updown_shapes(3))
    assert total == 15


def test_standard_examples():
    assert len(enumerate_standard(Partition((4,)))) == 1
    assert len(enumerate_standard(Partition((2, 1)))) == 2
    assert sum(len(enumerate_standard(lam)) ** 2 for lam in partitions_of(4)) == 24


@pytest.mark.parametrize("n", range(1, 7))
def test_hecke_dimension_count(n):
    assert sum(len(enumerate_standard(lam)) ** 2 for lam in partitions_of(n)) == factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_bmw_dimension_count(n):
    total = sum(len(enumerate_updown(n, lam)) ** 2 for lam in updown_shapes(n))
    assert total == double_factorial(2 * n - 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_updown_growing_paths_are_standard(n):
    for lam in partitions_of(n):
        ups = {t.to_standard() for t in enumerate_updown(n, lam)}
        assert ups == set(enumerate_standard(lam))


def test_tableau_rows_roundtrip():
    t = StdTableau.from_rows([[1, 2], [3]])
    assert t.shape == Partition((2, 1))
    assert t.rows() == [[1, 2], [3]]
    assert t.parent().shape == Partition((2,))
    assert t.last_cell() == (2, 1)


def test_parsing():
    assert parse_partition("2,1") == Partition((2, 1))
    assert parse_partition("0") == Partition()
    assert str(parse_path("1>2>1")) == "1>2>1"
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        UpDownTableau([(1,), (3,)])


@given(partitions)
def test_transpose_involution(lam):
    assert lam.transpose().transpose() == lam
    assert lam.transpose().size == lam.size


@given(partitions)
def test_cells_and_hooks(lam):
    assert len(lam.cells()) == lam.size
    assert all(hook_length(lam, c) >= 1 for c in lam.cells())


@given(partitions)
def test_corner_counts(lam):
    add, rem = corners(lam)
    assert len(add) == len(rem) + 1 == len(set(lam)) + 1
    for c in add:
        assert lam.add(c).size == lam.size + 1
    for c in rem:
        assert lam.remove(c).size == lam.size - 1
