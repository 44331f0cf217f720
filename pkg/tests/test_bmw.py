import json

import pytest
from hypothesis import given, strategies as st

from bmwskein import bmw as B
from bmwskein import coeff as C
from bmwskein.bmw import AlgElem, gen_E, gen_e, gen_h, identity
from bmwskein.errors import StrandMismatch
from bmwskein.tangle import enumerate_basis
from oracles import double_factorial

a, d, s, z = C.alpha(), C.loop_value(), C.s(), C.z()

scalars = st.sampled_from([C.ONE, -C.ONE, a, s, 1 / s, d, a + s, C.qint(2)])


def elements(n, max_terms=3):
    basis = enumerate_basis(n)
    return st.lists(st.tuples(st.sampled_from(basis), scalars), min_size=1, max_size=max_terms).map(
        lambda ts: sum((AlgElem.basis(n, n, m, c) for m, c in ts), AlgElem(n))
    )


@pytest.mark.parametrize("n", [2, 3, 4])
def test_relations(n):
    one = identity(n)
    for i in range(1, n):
        e, E, h = gen_e(n, i), gen_E(n, i), gen_h(n, i)
        assert e * E == one
        assert e - E == (one - h) * z
        assert h * e == h / a and e * h == h / a
        assert h * h == h * d
        for j in range(1, n):
            if abs(i - j) > 1:
                assert e * gen_e(n, j) == gen_e(n, j) * e
                assert h * gen_h(n, j) == gen_h(n, j) * h
            if abs(i - j) == 1:
                assert h * gen_e(n, j) * h == h * a
                assert h * gen_E(n, j) * h == h / a
                assert h * gen_h(n, j) * h == h
        if i + 1 < n:
            f = gen_e(n, i + 1)
            assert e * f * e == f * e * f


def test_mul_examples():
    assert gen_e(2, 1) * gen_E(2, 1) == identity(2)
    assert gen_h(3, 2) * (gen_e(3, 1) * gen_h(3, 2)) == gen_h(3, 2) * a


def test_strand_mismatch():
    with pytest.raises(StrandMismatch):
        identity(2) * identity(3)


def test_tensor_examples():
    assert identity(1).tensor_id(1) == identity(2)
    x = gen_e(2, 1) + gen_h(2, 1) * s
    assert x.tensor_id(0) == x
    assert gen_e(2, 1).tensor_id(1) == gen_e(3, 1)


def test_qtrace_examples():
    for n in range(1, 5):
        assert identity(n).qtrace() == d**n
    assert gen_e(2, 1).qtrace() == a * d
    assert gen_h(2, 1).qtrace() == d


def test_partial_close_examples():
    for n in range(1, 4):
        assert identity(n + 1).partial_close() == identity(n) * d
        assert gen_e(n + 1, n).partial_close() == identity(n) * a
        assert gen_h(n + 1, n).partial_close() == identity(n)
    with pytest.raises(StrandMismatch):
        identity(1).partial_close(2)


def test_jm_element():
    assert B.pure_jm_element(1) == identity(1)
    assert B.pure_jm_element(2) == gen_e(2, 1) ** 2
    assert B.jm_element(2) == gen_e(2, 1) ** 2 * a
    assert B.jm_element(1) == identity(1) * a


@pytest.mark.parametrize("n", [2, 3, 4])
def test_jm_commutes_with_smaller_algebra(n):
    tau = B.jm_element(n)
    for i in range(1, n - 1):
        for g in (gen_e(n - 1, i), gen_h(n - 1, i)):
            x = g.tensor_id(1)
            assert tau * x == x * tau


def test_json_roundtrip():
    x = gen_e(3, 1) * s + gen_h(3, 2) * d
    data = json.loads(json.dumps(x.to_json()))
    assert AlgElem.from_json(data) == x
    assert data["n"] == 3


@pytest.mark.parametrize("n", [2, 3, 4])
@given(data=st.data())
def test_associativity(n, data):
    x, y, w = (data.draw(elements(n)) for _ in range(3))
    assert (x * y) * w == x * (y * w)


@pytest.mark.parametrize("n", [2, 3, 4])
@given(data=st.data())
def test_qtrace_cyclic(n, data):
    x, y = data.draw(elements(n)), data.draw(elements(n))
    assert (x * y).qtrace() == (y * x).qtrace()


@pytest.mark.parametrize("n", [2, 3])
@given(data=st.data())
def test_tensor_multiplicative(n, data):
    x, y = data.draw(elements(n)), data.draw(elements(n))
    assert x.tensor_id(1) * y.tensor_id(1) == (x * y).tensor_id(1)


@pytest.mark.parametrize("n", [1, 2, 3])
@given(data=st.data())
def test_partial_close_properties(n, data):
    x = data.draw(elements(n))
    assert x.tensor_id(1).partial_close() == x * d
    assert (x.tensor_id(1) * gen_e(n + 1, n)).qtrace() == x.qtrace() * a
    assert x.partial_close(0) == x
    big = x.tensor_id(1) * gen_e(n + 1, n)
    assert big.partial_close().qtrace() == big.qtrace()


@pytest.mark.parametrize("n", range(1, 6))
def test_products_stay_in_basis(n):
    basis = set(enumerate_basis(n))
    assert len(basis) == double_factorial(2 * n - 1)
    x = identity(n)
    for i in range(1, n):
        x = x * (gen_e(n, i) + gen_h(n, i))
    assert set(x.terms) <= basis
