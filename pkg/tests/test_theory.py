import pytest

from blocktoeplitz.counting import count_pi_star_signed
from blocktoeplitz.links import Link, Model
from blocktoeplitz.theory import Regime, even_moment, p_toeplitz, theoretical_moments
from blocktoeplitz.words import catalan_words, enumerate_pair_matched, l0


def test_tbi_both_large_catalan():
    m = theoretical_moments("TBI", Regime.both_large(), 3)
    assert m == {1: 0.0, 2: 1.0, 3: 0.0, 4: 2.0, 5: 0.0, 6: 5.0}


def test_tbi_fixed_k_one():
    m = theoretical_moments(Model.TBI, Regime.fixed_k(1), 2)
    assert m[2] == 1 and m[4] == 2


def test_tbt_both_large_22_over_9():
    m = theoretical_moments("TBT", Regime.both_large(), 2)
    assert m[2] == 1.0
    assert abs(m[4] - 22 / 9) < 0.02


@pytest.mark.parametrize("k", [1, 2, 3, 7])
def test_catalan_l0_fraction_is_one(k):
    for t in (1, 2, 3):
        for w in catalan_words(t):
            assert count_pi_star_signed(Link.SYM_TOEPLITZ, k, w, l0(t)).count == k ** (t + 1)


def test_fixed_k_tbt_hand_formula():
    # sum over words of l0 fraction times p_T, done by hand for k = 2
    k = 2
    want = sum(count_pi_star_signed(Link.SYM_TOEPLITZ, k, w, l0(2)).normalized * p_toeplitz(w)
               for w in enumerate_pair_matched(2))
    assert even_moment("TBT", Regime.fixed_k(k), 2) == pytest.approx(want)


def test_fixed_n_tbi_uses_wigner():
    # with n = 1 every word has l0 Wigner fraction 1, so the moment is the sum of p_T
    want = sum(p_toeplitz(w) for w in enumerate_pair_matched(2))
    assert even_moment("TBI", Regime.fixed_n(1), 2) == pytest.approx(want)
    assert abs(want - 8 / 3) < 0.02


@pytest.mark.parametrize("model", ["TBI", "TBT"])
def test_fixed_k_gap_shrinks(model):
    limit = even_moment(model, Regime.both_large(), 2)
    gaps = [abs(even_moment(model, Regime.fixed_k(k), 2) - limit) for k in (2, 4, 8, 16)]
    assert all(b <= a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 0.1


def test_p_toeplitz_catalan_exact():
    assert p_toeplitz("aabb") == 1.0
    assert abs(p_toeplitz("abab") - 2 / 3) < 0.02


def test_regime_validation():
    with pytest.raises(ValueError):
        Regime("fixed_k")
    with pytest.raises(ValueError):
        Regime("sideways", 2)
    with pytest.raises(ValueError):
        theoretical_moments("TBI", Regime.both_large(), 0)
    assert Regime.fixed_k(4).label() == "fixed_k(k=4)"
