"""Exact counts of the circuit classes Pi*_{L,n}(w) and their sign refinements.

``Pi*_{L,n}(w)`` holds the circuits of length ``2t`` over ``1..n`` such that two
positions carrying the same letter also carry the same link label.  The sign
class for ``l in {-1,+1}^t`` further asks, letter by letter, that the second
edge repeat the first (``l_i = +1``) or run it backwards (``l_i = -1``).
Zero-slope (Toeplitz) and loop (Wigner) edges satisfy both signs, so the sign
classes overlap and only their set union equals the unsigned class.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from . import _kernels
from .links import Composite, Link, LinkKind, label_table, link_dim
from .words import Word

DEFAULT_BUDGET = 10**10
DEFAULT_P_GRID = (20, 40, 80, 160)
SIGNED_LINKS = (Link.SYM_TOEPLITZ, Link.WIGNER)


class BudgetExceeded(RuntimeError):
    def __init__(self, estimate: float, budget: float):
        super().__init__(f"estimated {estimate:.3g} node visits exceeds budget {budget:.3g}")
        self.estimate = estimate
        self.budget = budget


def visit_estimate(link: LinkKind, n: int, t: int) -> int:
    """Worst-case work of the counting routine used for ``link``.

    Toeplitz-type slope enumeration: ``n^(t+1) 2^t``.  Composite label scans
    pay another factor ``n``.  The Wigner-type pattern recursion does not
    depend on ``n``: at most ``(t+1)^(t+1)`` equality patterns of the
    generating vertices times ``3^t`` sign states.
    """
    if link in (Link.WIGNER, Link.FULL_IID):
        return (t + 1) ** (t + 1) * 3**t
    est = n ** (t + 1) * 2**t
    if isinstance(link, Composite):
        est *= n
    return est


def check_budget(link: LinkKind, n: int, t: int, budget: float = DEFAULT_BUDGET) -> None:
    est = visit_estimate(link, n, t)
    if est > budget:
        raise BudgetExceeded(est, budget)


@dataclass(frozen=True)
class CountResult:
    word: Word
    link: LinkKind
    n: int
    sign: tuple[int, ...] | None
    count: int

    @property
    def normalized(self) -> float:
        return self.count / self.n ** (self.word.t + 1)

    def to_dict(self) -> dict:
        link = self.link
        if isinstance(link, Composite):
            link_name = f"{link.model.value}(k={link.k},n={link.n})"
        else:
            link_name = link.value
        return {
            "word": str(self.word),
            "link": link_name,
            "n": self.n,
            "sign": list(self.sign) if self.sign is not None else None,
            "count": str(self.count),
            "normalized": self.normalized,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _as_word(w) -> Word:
    return w if isinstance(w, Word) else Word(str(w))


@lru_cache(maxsize=None)
def allowed_table(t: int, signs: frozenset | None) -> np.ndarray:
    """Which sign-state tuples lie in the union of the classes in ``signs``.

    ``signs=None`` means every sign vector, i.e. the unsigned class.
    """
    states = list(product((0, 1, 2), repeat=t))
    out = np.zeros(3**t, dtype=np.bool_)
    for st in states:
        code = sum(s * 3**c for c, s in enumerate(st))
        if signs is None:
            out[code] = True
            continue
        out[code] = any(
            all(s == 0 or (s == 1) == (l == 1) for s, l in zip(st, lv)) for lv in signs
        )
    return out


def _wigner_count(n: int, w: Word, allowed: np.ndarray) -> int:
    """Wigner-type count by dynamic programming over equality patterns.

    Wigner constraints only compare vertices for equality, so the number of
    completions depends on the equality pattern of the vertices still needed
    (the start vertex, the current one, and both ends of every open letter's
    first edge), not on their values.  A fresh vertex either repeats one of
    the ``d`` distinct needed values or takes one of the other ``n - d``.
    """
    is_first, letter, mate = w.arrays()
    h, t = len(w), w.t
    needed = []
    for p in range(h + 1):
        keep = {0, p}
        for i in range(1, p + 1):
            if is_first[i] and mate[i] > p:
                keep.update((i - 1, i))
        needed.append(tuple(sorted(keep)))
    pow3 = [3**c for c in range(t)]

    @lru_cache(maxsize=None)
    def completions(p: int, classes: tuple, code: int) -> int:
        if p == h:
            return int(classes[0] == classes[-1] and allowed[code])
        at = dict(zip(needed[p], classes))
        d = max(classes) + 1
        q = p + 1
        options = []
        if is_first[q]:
            options = [(c, 1, code) for c in range(d)]
            if n > d:
                options.append((d, n - d, code))
        else:
            u, v, cur = at[mate[q] - 1], at[mate[q]], at[p]
            L = letter[q]
            if u == v:
                if cur == u:
                    options.append((u, 1, code))
            elif cur == u:
                options.append((v, 1, code + pow3[L]))
            elif cur == v:
                options.append((u, 1, code + 2 * pow3[L]))
        total = 0
        for c, mult, nxt_code in options:
            at[q] = c
            relabel: dict[int, int] = {}
            canon = tuple(relabel.setdefault(at[x], len(relabel)) for x in needed[q])
            total += mult * completions(q, canon, nxt_code)
        return total

    return n * completions(0, (0,), 0)


def _union_count(link: Link, n: int, w: Word, allowed: np.ndarray) -> int:
    if link is Link.SYM_TOEPLITZ or link is Link.ASYM_TOEPLITZ:
        is_first, letter, _ = w.arrays()
        return int(_kernels.toeplitz_count(n, len(w), w.t, is_first, letter, allowed))
    return _wigner_count(n, w, allowed)


# asymmetric links only admit the repeat (+1) orientation
_ONE_WAY = (Link.ASYM_TOEPLITZ, Link.FULL_IID)


def count_pi_star(link: LinkKind, n: int, w, budget: float = DEFAULT_BUDGET) -> CountResult:
    """Exact ``#Pi*_{L,n}(w)``; for composite links ``n`` is the full dimension ``nk``."""
    w = _as_word(w)
    link_dim(link, n)
    check_budget(link, n, w.t, budget)
    if isinstance(link, Composite):
        is_first, _, mate = w.arrays()
        count = int(_kernels.table_count(n, len(w), is_first, mate, label_table(link, n)))
    elif link in _ONE_WAY:
        plus = frozenset({(1,) * w.t})
        count = _union_count(link, n, w, allowed_table(w.t, plus))
    else:
        count = _union_count(link, n, w, allowed_table(w.t, None))
    return CountResult(w, link, n, None, count)


def _check_signed_link(link) -> Link:
    if link not in SIGNED_LINKS:
        raise ValueError(f"sign classes are defined for {[l.value for l in SIGNED_LINKS]}, not {link}")
    return link


def count_union(link: Link, n: int, w, signs, budget: float = DEFAULT_BUDGET) -> int:
    """``#`` of the union of the sign classes ``Pi*_{L,n,l}(w)`` over ``l in signs``."""
    w = _as_word(w)
    _check_signed_link(link)
    signs = frozenset(tuple(int(x) for x in l) for l in signs)
    for l in signs:
        if len(l) != w.t or any(x not in (-1, 1) for x in l):
            raise ValueError(f"sign vector {l} must be a ±1 vector of length {w.t}")
    if not signs:
        return 0
    check_budget(link, n, w.t, budget)
    return _union_count(link, n, w, allowed_table(w.t, signs))


def count_pi_star_signed(link: Link, n: int, w, l, budget: float = DEFAULT_BUDGET) -> CountResult:
    w = _as_word(w)
    l = tuple(int(x) for x in l)
    return CountResult(w, link, n, l, count_union(link, n, w, [l], budget))


@dataclass(frozen=True)
class PEstimate:
    p_hat: float
    residual: float
    grid: tuple[int, ...]
    normalized: tuple[float, ...]


def fit_p(grid, normalized) -> tuple[float, float]:
    """Least-squares fit of ``y = p + c/n``; returns ``(p, rms residual)``."""
    n = np.asarray(grid, dtype=float)
    y = np.asarray(normalized, dtype=float)
    X = np.column_stack([np.ones_like(n), 1.0 / n])
    coef, *_ = np.linalg.lstsq(X, y, rcond=None)
    resid = y - X @ coef
    return float(coef[0]), float(np.sqrt(np.mean(resid**2)))


def estimate_p(link: Link, w, n_grid=DEFAULT_P_GRID, budget: float = DEFAULT_BUDGET) -> PEstimate:
    """Extrapolate ``#Pi*_{L,n}(w) / n^(t+1)`` to ``n -> oo``."""
    w = _as_word(w)
    grid = tuple(sorted(int(n) for n in n_grid))
    if len(grid) < 3:
        raise ValueError("estimate_p needs at least three grid sizes")
    for n in grid:
        check_budget(link, n, w.t, budget)
    return _estimate_p_cached(link, w, grid)


@lru_cache(maxsize=None)
def _estimate_p_cached(link: Link, w: Word, grid: tuple[int, ...]) -> PEstimate:
    norm = tuple(count_pi_star(link, n, w, budget=math.inf).normalized for n in grid)
    p, res = fit_p(grid, norm)
    return PEstimate(p, res, grid, norm)
