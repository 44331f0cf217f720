import json

import pytest
from hypothesis import given, strategies as st

from bmwskein import bmw as B
from bmwskein import coeff as C
from bmwskein.tangle import (
    TangleWord,
    close_trace,
    enumerate_basis,
    hook_matching,
    identity_matching,
    matching_from_json,
    matching_to_json,
    normalize,
    parse_word,
    tensor_word,
)
from oracles import double_factorial, kauffman_oracle

a, d, s = C.alpha(), C.loop_value(), C.s()


def words(n, max_len=5):
    tok = st.tuples(st.sampled_from("eEh"), st.integers(1, n - 1)).map(lambda t: f"{t[0]}{t[1]}")
    return st.lists(tok, max_size=max_len).map(" ".join)


def test_normalize_examples():
    assert normalize(parse_word("e1 E1", 2)) == {identity_matching(2): C.ONE}
    assert normalize(parse_word("h1 h1", 2)) == {hook_matching(2, 1): d}
    assert normalize(parse_word("h1 e1", 2)) == {hook_matching(2, 1): 1 / a}


def test_close_trace_examples():
    assert close_trace(TangleWord(1)) == d
    assert close_trace(parse_word("e1", 2)) == a * d
    assert close_trace(parse_word("e1 e1 e1", 2)) == kauffman_oracle("e1 e1 e1", 2)


def test_trefoil_coefficients():
    # the trefoil is neither the unknot nor its mirror
    t = close_trace(parse_word("e1 e1 e1", 2))
    assert t != close_trace(parse_word("E1 E1 E1", 2))
    assert t != a**3 * d


@pytest.mark.parametrize("n", range(1, 7))
def test_basis_count(n):
    assert len(enumerate_basis(n)) == double_factorial(2 * n - 1)
    assert len(set(enumerate_basis(n))) == len(enumerate_basis(n))


def test_tensor_word():
    assert tensor_word(TangleWord(1), 1) == TangleWord(2)
    assert tensor_word(parse_word("e1", 2), 1) == parse_word("e1", 3)
    assert tensor_word(parse_word("h1", 2), 2) == parse_word("h1", 4)


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_word("x1", 2)
    with pytest.raises(ValueError):
        parse_word("e2", 2)


def test_matching_json_roundtrip():
    for m in enumerate_basis(3):
        pairs = matching_to_json(3, 3, m)
        assert matching_from_json(3, 3, json.loads(json.dumps(pairs))) == m
    assert matching_to_json(3, 3, identity_matching(3)) == [[1, -1], [2, -2], [3, -3]]


@pytest.mark.parametrize("n", [2, 3, 4])
@given(data=st.data())
def test_normalize_is_multiplicative(n, data):
    w1 = parse_word(data.draw(words(n)), n)
    w2 = parse_word(data.draw(words(n)), n)
    x = B.AlgElem(n, n, normalize(w1)) * B.AlgElem(n, n, normalize(w2))
    assert normalize(w1 * w2) == x.terms


@pytest.mark.parametrize("n", [2, 3, 4])
@given(data=st.data())
def test_trace_property(n, data):
    w1 = parse_word(data.draw(words(n)), n)
    w2 = parse_word(data.draw(words(n)), n)
    assert close_trace(w1 * w2) == close_trace(w2 * w1)


@pytest.mark.parametrize("n", [2, 3])
@given(data=st.data())
def test_markov_property(n, data):
    w = data.draw(words(n))
    closed = close_trace(parse_word(w, n))
    assert close_trace(parse_word(f"{w} e{n}", n + 1)) == a * closed
    assert close_trace(parse_word(f"{w} E{n}", n + 1)) == closed / a


@pytest.mark.parametrize("n", [2, 3])
@given(data=st.data())
def test_close_trace_matches_oracle(n, data):
    w = data.draw(words(n, 6))
    assert close_trace(parse_word(w, n)) == kauffman_oracle(w, n)
