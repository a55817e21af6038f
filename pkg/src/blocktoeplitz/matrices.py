"""Patterned matrices and the TBI / TBT block ensembles."""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .inputs import InputSpec, sample_input
from .links import Link, Model, link_eval

MAX_DIM = 4096


def n_labels(link: Link, n: int) -> int:
    """Number of input values a patterned matrix of order ``n`` consumes."""
    return {
        Link.SYM_TOEPLITZ: n,
        Link.WIGNER: n * (n + 1) // 2,
        Link.ASYM_TOEPLITZ: 2 * n - 1,
        Link.FULL_IID: n * n,
    }[link]


def _label_index(link: Link, n: int) -> np.ndarray:
    """Position in the input stream of each entry's label (0-based rows/cols)."""
    p, q = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    if link is Link.SYM_TOEPLITZ:
        return np.abs(p - q)
    if link is Link.ASYM_TOEPLITZ:
        return p - q + n - 1
    if link is Link.FULL_IID:
        return p * n + q
    # row-major upper triangle, i <= j
    lo, hi = np.minimum(p, q), np.maximum(p, q)
    return lo * n - lo * (lo - 1) // 2 + (hi - lo)


def build_patterned(link: Link, n: int, source, stream: int = 0, replicate: int = 0) -> np.ndarray:
    """Patterned matrix ``a_ij = x_{L(i,j)}``.

    ``source`` is an :class:`InputSpec` (values come from the given stream) or a
    mapping from labels, as returned by :func:`link_eval`, to values.
    """
    if not isinstance(link, Link):
        raise TypeError("build_patterned takes a simple link; use build_block_matrix for TBI/TBT")
    if isinstance(source, InputSpec):
        x = sample_input(source, stream, replicate).take(n_labels(link, n))
        return x[_label_index(link, n)]
    if isinstance(source, Mapping):
        out = np.empty((n, n))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                out[i - 1, j - 1] = source[link_eval(link, i, j, n)]
        return out
    raise TypeError("source must be an InputSpec or a mapping of labels to values")


@dataclass(frozen=True)
class BlockSpec:
    model: Model
    k: int
    n: int
    input: InputSpec = field(default_factory=InputSpec)

    def __post_init__(self):
        if isinstance(self.model, str):
            object.__setattr__(self, "model", Model(self.model.upper()))
        if self.k < 1 or self.n < 1:
            raise ValueError(f"k and n must be positive, got k={self.k}, n={self.n}")

    @property
    def dim(self) -> int:
        return self.n * self.k


def assemble_blocks(blocks) -> np.ndarray:
    """Block-Toeplitz matrix with block ``(r, c)`` equal to ``A_{r-c}``.

    ``blocks[i]`` is ``A_i`` for ``i >= 0``; ``A_{-i}`` is taken as ``A_i.T``.
    """
    k = len(blocks)
    n = blocks[0].shape[0]
    out = np.empty((n * k, n * k))
    for r in range(k):
        for c in range(k):
            lag = r - c
            blk = blocks[lag] if lag >= 0 else blocks[-lag].T
            out[r * n:(r + 1) * n, c * n:(c + 1) * n] = blk
    return out


def block_sequence(spec: BlockSpec, replicate: int = 0) -> list[np.ndarray]:
    """``[A_0, A_1, ..., A_{k-1}]``; stream label ``i`` feeds ``A_i``."""
    model = spec.model
    blocks = [build_patterned(model.entry_link, spec.n, spec.input, stream=0, replicate=replicate)]
    for lag in range(1, spec.k):
        blocks.append(build_patterned(model.lag_link, spec.n, spec.input, stream=lag, replicate=replicate))
    return blocks


def build_block_matrix(spec: BlockSpec, replicate: int = 0) -> np.ndarray:
    return assemble_blocks(block_sequence(spec, replicate))


def dump_matrix(m: np.ndarray, path) -> None:
    """Plain-text dump: ``N`` on the first line, then ``N`` rows at 17 significant digits."""
    m = np.asarray(m)
    lines = [str(m.shape[0])]
    lines += [" ".join(f"{v:.17g}" for v in row) for row in m]
    Path(path).write_text("\n".join(lines) + "\n")


def load_matrix(path) -> np.ndarray:
    text = Path(path).read_text().split("\n")
    N = int(text[0])
    m = np.array([[float(v) for v in line.split()] for line in text[1:N + 1]])
    if m.shape != (N, N):
        raise ValueError(f"expected {N}x{N} matrix, got shape {m.shape}")
    return m
