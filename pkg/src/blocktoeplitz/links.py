"""Link functions: which matrix positions share a random variable.

Indices are 1-based throughout, as in the usual patterned-matrix notation.
Simple links return an ``int`` or a ``tuple`` label; composite block links
return ``(lag, entry_label)`` with negative lags folded onto positive ones
by transposing the entry coordinates.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

import numpy as np


class Link(enum.Enum):
    SYM_TOEPLITZ = "sym_toeplitz"
    WIGNER = "wigner"
    ASYM_TOEPLITZ = "asym_toeplitz"
    FULL_IID = "full_iid"

    @property
    def symmetric(self) -> bool:
        return self in (Link.SYM_TOEPLITZ, Link.WIGNER)


class Model(enum.Enum):
    TBI = "TBI"
    TBT = "TBT"

    @property
    def entry_link(self) -> Link:
        """Link of the diagonal block A_0, which also governs entry addresses."""
        return Link.WIGNER if self is Model.TBI else Link.SYM_TOEPLITZ

    @property
    def lag_link(self) -> Link:
        """Link of the off-diagonal blocks A_i, i > 0."""
        return Link.FULL_IID if self is Model.TBI else Link.ASYM_TOEPLITZ


@dataclass(frozen=True)
class Composite:
    """Block link of TBI/TBT with ``k`` x ``k`` blocks of size ``n``."""

    model: Model
    k: int
    n: int

    def __post_init__(self):
        if self.k < 1 or self.n < 1:
            raise ValueError(f"block sizes must be positive, got k={self.k}, n={self.n}")

    @property
    def dim(self) -> int:
        return self.n * self.k

    @property
    def symmetric(self) -> bool:
        return True


LinkKind = Union[Link, Composite]


def parse_link(name: str, k: int | None = None, n: int | None = None) -> LinkKind:
    """Parse a CLI-style link name; ``tbi``/``tbt`` need ``k`` and block size ``n``."""
    key = name.strip().lower().replace("-", "_")
    if key in ("tbi", "tbt"):
        if k is None or n is None:
            raise ValueError(f"composite link {name!r} needs both k and n")
        return Composite(Model(key.upper()), k, n)
    try:
        return Link(key)
    except ValueError:
        raise ValueError(f"unknown link {name!r}") from None


def link_dim(link: LinkKind, n: int) -> int:
    if isinstance(link, Composite):
        if n != link.dim:
            raise ValueError(f"composite link has dimension {link.dim}, got n={n}")
    return n


def _simple_label(link: Link, i: int, j: int):
    if link is Link.SYM_TOEPLITZ:
        return abs(i - j)
    if link is Link.WIGNER:
        return (min(i, j), max(i, j))
    if link is Link.ASYM_TOEPLITZ:
        return i - j
    return (i, j)


def link_eval(link: LinkKind, i: int, j: int, n: int):
    """Label of entry ``(i, j)``; equal labels mean identical entries."""
    N = link_dim(link, n)
    if not (1 <= i <= N and 1 <= j <= N):
        raise IndexError(f"index ({i}, {j}) outside 1..{N}")
    if isinstance(link, Link):
        return _simple_label(link, i, j)

    bs = link.n
    lag = (i - 1) // bs - (j - 1) // bs
    p, q = (i - 1) % bs + 1, (j - 1) % bs + 1
    if lag == 0:
        return (0, _simple_label(link.model.entry_link, p, q))
    if lag < 0:
        lag, p, q = -lag, q, p
    return (lag, _simple_label(link.model.lag_link, p, q))


def _simple_codes(link: Link, p: np.ndarray, q: np.ndarray, n: int) -> np.ndarray:
    # p, q are 0-based; codes lie in [0, n*n)
    if link is Link.SYM_TOEPLITZ:
        return np.abs(p - q)
    if link is Link.WIGNER:
        return np.minimum(p, q) * n + np.maximum(p, q)
    if link is Link.ASYM_TOEPLITZ:
        return p - q + n - 1
    return p * n + q


def label_table(link: LinkKind, n: int) -> np.ndarray:
    """Integer code for every entry of the ``n`` x ``n`` matrix.

    ``table[i-1, j-1] == table[r-1, s-1]`` iff ``link_eval`` gives equal labels.
    """
    N = link_dim(link, n)
    r, c = np.meshgrid(np.arange(N, dtype=np.int64), np.arange(N, dtype=np.int64), indexing="ij")
    if isinstance(link, Link):
        return _simple_codes(link, r, c, N)

    bs = link.n
    lag = r // bs - c // bs
    p, q = r % bs, c % bs
    neg = lag < 0
    p, q = np.where(neg, q, p), np.where(neg, p, q)
    entry = np.where(
        lag == 0,
        _simple_codes(link.model.entry_link, p, q, bs),
        _simple_codes(link.model.lag_link, p, q, bs),
    )
    return np.abs(lag) * bs * bs + entry


def property_b_delta(link: Link, n: int) -> int:
    """Largest number of columns in one row that share a label."""
    if not isinstance(link, Link):
        raise TypeError("property_b_delta is defined for simple links only")
    table = label_table(link, n)
    best = 0
    for row in table:
        _, counts = np.unique(row, return_counts=True)
        best = max(best, int(counts.max()))
    return best


def assumption_b_stats(link: Link, n: int) -> tuple[int, int]:
    """``(k_n, alpha_n)``: number of distinct labels and the largest label multiplicity."""
    if not isinstance(link, Link):
        raise TypeError("assumption_b_stats is defined for simple links only")
    _, counts = np.unique(label_table(link, n), return_counts=True)
    return int(counts.size), int(counts.max())
