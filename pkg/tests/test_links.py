import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from blocktoeplitz.links import (Composite, Link, Model, assumption_b_stats, label_table, link_eval, parse_link,
                                 property_b_delta)


def test_link_eval_examples():
    assert link_eval(Link.SYM_TOEPLITZ, 2, 5, 8) == 3
    assert link_eval(Link.WIGNER, 5, 2, 8) == (2, 5)
    assert link_eval(Link.ASYM_TOEPLITZ, 2, 5, 8) == -3
    assert link_eval(Link.FULL_IID, 5, 2, 8) == (5, 2)


def test_composite_negative_lag_folds_to_transpose():
    # block lag of (1,3) is -1; entry coordinates (1,1) are swapped (a no-op on the diagonal)
    assert link_eval(Composite(Model.TBT, 2, 2), 1, 3, 4) == (1, 0)
    # off-diagonal entry: (1,4) has entry coords (1,2), folded to lag 1 at (2,1)
    assert link_eval(Composite(Model.TBT, 2, 2), 1, 4, 4) == (1, 1)
    assert link_eval(Composite(Model.TBT, 2, 2), 4, 1, 4) == (1, 1)
    assert link_eval(Composite(Model.TBI, 2, 2), 1, 4, 4) == (1, (2, 1))


def test_out_of_range_index():
    with pytest.raises(IndexError):
        link_eval(Link.SYM_TOEPLITZ, 0, 1, 3)
    with pytest.raises(IndexError):
        link_eval(Link.WIGNER, 1, 4, 3)
    with pytest.raises(ValueError):
        link_eval(Composite(Model.TBI, 2, 3), 1, 1, 5)


def test_parse_link():
    assert parse_link("sym-toeplitz") is Link.SYM_TOEPLITZ
    assert parse_link("TBT", 3, 2) == Composite(Model.TBT, 3, 2)
    with pytest.raises(ValueError):
        parse_link("tbi")
    with pytest.raises(ValueError):
        parse_link("hankel")


@pytest.mark.parametrize("n,expected", [(10, 2), (3, 2), (50, 2)])
def test_property_b_symmetric_toeplitz(n, expected):
    assert property_b_delta(Link.SYM_TOEPLITZ, n) == expected


@pytest.mark.parametrize("link", [Link.WIGNER, Link.FULL_IID])
@pytest.mark.parametrize("n", [1, 4, 10])
def test_property_b_one(link, n):
    assert property_b_delta(link, n) == 1


def test_assumption_b_examples():
    assert assumption_b_stats(Link.SYM_TOEPLITZ, 4) == (4, 6)
    assert assumption_b_stats(Link.WIGNER, 4) == (10, 2)
    assert assumption_b_stats(Link.FULL_IID, 4) == (16, 1)


@pytest.mark.parametrize("n", [2, 5, 16, 64, 200])
def test_assumption_b_bound_toeplitz(n):
    kn, alpha = assumption_b_stats(Link.SYM_TOEPLITZ, n)
    assert kn * alpha <= 2 * n * n


links_st = st.sampled_from(list(Link)) | st.builds(
    Composite, st.sampled_from(list(Model)), st.integers(1, 3), st.integers(1, 3))


@given(links_st, st.data())
def test_label_table_matches_link_eval(link, data):
    N = link.dim if isinstance(link, Composite) else data.draw(st.integers(1, 6))
    table = label_table(link, N)
    pairs = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1)]
    labels = [link_eval(link, i, j, N) for i, j in pairs]
    a, b = data.draw(st.sampled_from(pairs)), data.draw(st.sampled_from(pairs))
    same_label = labels[pairs.index(a)] == labels[pairs.index(b)]
    assert same_label == (table[a[0] - 1, a[1] - 1] == table[b[0] - 1, b[1] - 1])


@given(links_st, st.integers(1, 6))
def test_symmetric_links_have_symmetric_tables(link, n):
    N = link.dim if isinstance(link, Composite) else n
    table = label_table(link, N)
    if isinstance(link, Composite) or link.symmetric:
        assert np.array_equal(table, table.T)
