from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legsat.braid import (
    BraidWord,
    WordProblemResult,
    braid_group_equal,
    closure_components,
    free_reduce,
    full_twist,
    permutation,
    positive_monoid_class,
    positive_monoid_equivalent,
    writhe,
)
from legsat.errors import NonPositiveInput, StrandMismatch


def bw(n, *word):
    return BraidWord.from_ints(n, word)


def test_writhe_examples():
    assert writhe(bw(2, 1, 1, 1)) == 3
    assert writhe(bw(4)) == 0
    assert writhe(bw(3, 1, -2, 1)) == 1


def test_full_twist_examples():
    assert full_twist(2, 1).ints() == (1, 1)
    assert full_twist(3, 0).ints() == ()
    assert full_twist(2, -1).ints() == (-1, -1)
    assert full_twist(1, 5).ints() == ()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("k", [-2, -1, 0, 1, 3])
def test_full_twist_writhe_and_pure(n, k):
    d = full_twist(n, k)
    assert writhe(d) == k * n * (n - 1)
    assert permutation(d) == tuple(range(n))


def test_full_twist_inverse_cancels():
    assert free_reduce(full_twist(4, 1) * full_twist(4, -1)).ints() == ()


def test_closure_components_examples():
    assert closure_components(bw(2, 1)) == 1
    assert closure_components(bw(3)) == 3
    assert closure_components(bw(2, 1, 1)) == 2
    assert closure_components(bw(3, 1, 2)) == 1


def test_positive_monoid_examples():
    assert positive_monoid_equivalent(bw(3, 1, 2, 1), bw(3, 2, 1, 2))
    assert positive_monoid_equivalent(bw(4, 1, 3), bw(4, 3, 1))
    assert not positive_monoid_equivalent(bw(3, 1, 1), bw(3, 1, 2))


def test_positive_monoid_errors():
    with pytest.raises(NonPositiveInput):
        positive_monoid_equivalent(bw(3, 1, -2), bw(3, 1, 2))
    with pytest.raises(StrandMismatch):
        positive_monoid_equivalent(bw(3, 1), bw(4, 1))


def test_letter_bounds():
    with pytest.raises(ValueError):
        bw(2, 2)
    with pytest.raises(ValueError):
        bw(3, 0)


def test_json_roundtrip():
    w = bw(3, 1, -2, 1)
    assert w.to_json() == {"n": 3, "word": [1, -2, 1]}
    assert BraidWord.from_json(w.to_json()) == w


words = st.integers(2, 5).flatmap(
    lambda n: st.lists(
        st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=10
    ).map(lambda xs: BraidWord.from_ints(n, xs))
)
positive_words = st.integers(2, 4).flatmap(
    lambda n: st.lists(st.integers(1, n - 1), max_size=7).map(lambda xs: BraidWord.from_ints(n, xs))
)


@given(words)
def test_writhe_invariant_under_rotation(w):
    xs = w.ints()
    for j in range(len(xs)):
        assert writhe(BraidWord.from_ints(w.strands, xs[j:] + xs[:j])) == writhe(w)


@settings(max_examples=50)
@given(positive_words)
def test_writhe_and_permutation_constant_on_positive_class(w):
    for c in positive_monoid_class(w):
        v = BraidWord.from_ints(w.strands, c)
        assert writhe(v) == writhe(w)
        assert permutation(v) == permutation(w)


@settings(max_examples=40)
@given(positive_words, st.data())
def test_positive_equivalence_respects_concatenation(w, data):
    cls = sorted(positive_monoid_class(w))
    other = BraidWord.from_ints(w.strands, data.draw(st.sampled_from(cls)))
    pad = data.draw(st.lists(st.integers(1, w.strands - 1), max_size=3))
    p = BraidWord.from_ints(w.strands, pad)
    assert positive_monoid_equivalent(p * w, p * other)
    assert positive_monoid_equivalent(w * p, other * p)
    assert positive_monoid_equivalent(other, w)


def test_group_equality_three_values():
    assert braid_group_equal(bw(3, 1, 2, 1), bw(3, 2, 1, 2)) is WordProblemResult.EQUAL
    assert braid_group_equal(bw(3, 1, 2, -1), bw(3, -2, 1, 2)) is WordProblemResult.EQUAL
    assert braid_group_equal(bw(3, 1, 1), bw(3, 1, 2)) is WordProblemResult.DISTINCT
    # same permutation and writhe, told apart by the Burau image
    assert braid_group_equal(bw(3, 1, 1, -2, -2), bw(3)) is WordProblemResult.DISTINCT
    res = braid_group_equal(bw(3, 1, 2, 1, 2, 1, 2), bw(3, 2, 1, 2, 1, 2, 1), slack=0, budget=5)
    assert res in (WordProblemResult.EQUAL, WordProblemResult.BUDGET_EXHAUSTED)
