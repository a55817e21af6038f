import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from blocktoeplitz.address import (VerificationError, all_closed_circuits, block_address, compose, entry_address,
                                   fiber_size, in_class_mask, non_surjective_witness, verify_decomposition)
from blocktoeplitz.links import Composite, Link, Model, label_table
from blocktoeplitz.words import Word, enumerate_pair_matched

WORDS_T2 = enumerate_pair_matched(1) + enumerate_pair_matched(2)


def test_address_examples():
    assert block_address([3, 1, 3], 2).tolist() == [2, 1, 2]
    assert block_address([5, 6, 5], 5).tolist() == [1, 2, 1]
    assert entry_address([3, 1, 3], 2).tolist() == [1, 1, 1]
    assert entry_address([5, 6, 5], 5).tolist() == [5, 1, 5]


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_round_trip(n, k, data):
    pi = np.array(data.draw(st.lists(st.integers(1, n * k), min_size=1, max_size=7)))
    pb, pe = block_address(pi, n), entry_address(pi, n)
    assert np.array_equal(compose(pb, pe, n), pi)
    assert pb.min() >= 1 and pb.max() <= k and pe.min() >= 1 and pe.max() <= n


@given(st.integers(1, 5), st.integers(1, 40))
def test_constant_circuit_constant_address(n, v):
    assert len(set(block_address([v] * 5, n).tolist())) == 1


@pytest.mark.parametrize("model", list(Model))
@pytest.mark.parametrize("w", WORDS_T2, ids=str)
@pytest.mark.parametrize("n,k", [(2, 2), (3, 2), (2, 4), (4, 3), (4, 4)])
def test_membership_push_forward(model, w, n, k):
    circuits = all_closed_circuits(n * k, len(w))
    members = circuits[in_class_mask(circuits, w, label_table(Composite(model, k, n), n * k))]
    pb, pe = block_address(members, n), entry_address(members, n)
    assert in_class_mask(pb, w, label_table(Link.SYM_TOEPLITZ, k)).all()
    assert in_class_mask(pe, w, label_table(model.entry_link, n)).all()


def test_fiber_examples():
    assert fiber_size([1, 1, 1], "aa", "TBI", 2, 2) == 4
    assert fiber_size([1, 2, 1], "aa", "TBI", 2, 2) == 4


@given(st.sampled_from(list(Model)), st.sampled_from(WORDS_T2), st.integers(1, 3), st.integers(1, 3), st.data())
def test_fiber_direct_equals_union(model, w, n, k, data):
    blocks = all_closed_circuits(k, len(w))
    blocks = blocks[in_class_mask(blocks, w, label_table(Link.SYM_TOEPLITZ, k))]
    pb = blocks[data.draw(st.integers(0, len(blocks) - 1))]
    fiber_size(pb, w, model, n, k)  # raises on disagreement


def test_fiber_rejects_non_member():
    with pytest.raises(ValueError):
        fiber_size([1, 1, 2, 1, 1], "aabb", "TBT", 2, 2)


def test_verification_error_is_assertion():
    assert issubclass(VerificationError, AssertionError)


def test_decomposition_examples():
    r = verify_decomposition("aa", 2, 2, "TBI")
    assert r.composite_count == 16 and r.sandwich == {"lower": 16, "value": 16, "upper": 16}
    assert r.passed
    assert verify_decomposition("abab", 2, 2, "TBT").passed
    assert verify_decomposition("aabb", 3, 2, "TBI").passed
    d = r.to_dict()
    assert {"word", "n", "k", "model", "composite_count", "fiber_sum", "entry_sum", "sandwich", "pass"} <= set(d)


@pytest.mark.parametrize("model", list(Model))
@pytest.mark.parametrize("w", WORDS_T2, ids=str)
def test_decomposition_grid(model, w):
    for n in (2, 3, 4):
        for k in (2, 3, 4):
            r = verify_decomposition(w, n, k, model)
            assert r.passed, r.failures
            assert r.fiber_sum == r.entry_sum == r.composite_count == r.enumerated_count
            assert r.sandwich["lower"] <= r.composite_count <= r.sandwich["upper"]


@pytest.mark.parametrize("model", list(Model))
def test_non_surjective_witness_abab(model):
    w = Word("abab")
    found = non_surjective_witness(w, 2, 2, model) or non_surjective_witness(w, 3, 3, model)
    assert found is not None
    pb, pe = found
    n = 2 if non_surjective_witness(w, 2, 2, model) is not None else 3
    k = n
    assert in_class_mask(pb[None], w, label_table(Link.SYM_TOEPLITZ, k))[0]
    assert in_class_mask(pe[None], w, label_table(model.entry_link, n))[0]
    pi = compose(pb, pe, n)
    assert not in_class_mask(pi[None], w, label_table(Composite(model, k, n), n * k))[0]
