"""Limiting even moments of the scaled TBI / TBT ensembles.

Odd moments vanish.  The even moment of order 2t sums, over pair-matched
words of length 2t, a per-word weight that depends on the regime:

=======  ============  ===================================================
model    regime        weight of word w
=======  ============  ===================================================
TBI      fixed k       [w Catalan] * #Pi*_{T,k,l0}(w) / k^(t+1)
TBI      fixed n       #Pi*_{W,n,l0}(w) / n^(t+1) * p_T(w)
TBI      both large    [w Catalan]
TBT      fixed k       #Pi*_{T,k,l0}(w) / k^(t+1) * p_T(w)
TBT      fixed n       #Pi*_{T,n,l0}(w) / n^(t+1) * p_T(w)
TBT      both large    p_T(w)^2
=======  ============  ===================================================

``l0 = (-1, ..., -1)``.  ``p_T(w) = 1`` for Catalan words; for the others it is
extrapolated from exact counts with :func:`estimate_p`.
"""
from __future__ import annotations

from dataclasses import dataclass

from .counting import DEFAULT_BUDGET, DEFAULT_P_GRID, count_pi_star_signed, estimate_p
from .links import Link, Model
from .words import catalan_words, enumerate_pair_matched, is_catalan, l0

MAX_T = 5
REGIMES = ("fixed_k", "fixed_n", "both_large")


@dataclass(frozen=True)
class Regime:
    kind: str
    size: int | None = None

    def __post_init__(self):
        if self.kind not in REGIMES:
            raise ValueError(f"unknown regime {self.kind!r}; expected one of {REGIMES}")
        if self.kind != "both_large" and (self.size is None or self.size < 1):
            raise ValueError(f"regime {self.kind} needs a positive fixed size")

    @classmethod
    def fixed_k(cls, k: int) -> "Regime":
        return cls("fixed_k", k)

    @classmethod
    def fixed_n(cls, n: int) -> "Regime":
        return cls("fixed_n", n)

    @classmethod
    def both_large(cls) -> "Regime":
        return cls("both_large")

    def label(self) -> str:
        if self.kind == "both_large":
            return "both_large"
        return f"{self.kind}({'k' if self.kind == 'fixed_k' else 'n'}={self.size})"


def p_toeplitz(w, p_grid=DEFAULT_P_GRID, budget=DEFAULT_BUDGET) -> float:
    if is_catalan(w):
        return 1.0
    return estimate_p(Link.SYM_TOEPLITZ, w, p_grid, budget).p_hat


def _l0_fraction(link: Link, size: int, w, budget) -> float:
    return count_pi_star_signed(link, size, w, l0(w.t), budget).normalized


def even_moment(model, regime: Regime, t: int, p_grid=DEFAULT_P_GRID, budget=DEFAULT_BUDGET) -> float:
    """Limiting moment of order ``2t``."""
    model = Model(model) if isinstance(model, str) else model
    if regime.kind == "both_large":
        if model is Model.TBI:
            return float(len(catalan_words(t)))
        return sum(p_toeplitz(w, p_grid, budget) ** 2 for w in enumerate_pair_matched(t))

    size = regime.size
    if model is Model.TBI and regime.kind == "fixed_k":
        return sum(_l0_fraction(Link.SYM_TOEPLITZ, size, w, budget) for w in catalan_words(t))

    link = Link.WIGNER if (model is Model.TBI and regime.kind == "fixed_n") else Link.SYM_TOEPLITZ
    total = 0.0
    for w in enumerate_pair_matched(t):
        frac = _l0_fraction(link, size, w, budget)
        if frac:
            total += frac * p_toeplitz(w, p_grid, budget)
    return total


def theoretical_moments(model, regime: Regime, t_max: int, p_grid=DEFAULT_P_GRID,
                        budget=DEFAULT_BUDGET) -> dict[int, float]:
    """``{h: beta_h}`` for ``h = 1..2*t_max``; odd moments are exactly 0."""
    if not 1 <= t_max <= MAX_T:
        raise ValueError(f"t_max must be in 1..{MAX_T}, got {t_max}")
    out: dict[int, float] = {}
    for t in range(1, t_max + 1):
        out[2 * t - 1] = 0.0
        out[2 * t] = even_moment(model, regime, t, p_grid, budget)
    return out
