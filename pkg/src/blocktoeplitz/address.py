"""Block and entry addresses of circuits over ``1..nk``.

A composite circuit ``pi`` splits into its block address ``pi_b`` (which of
the ``k`` row blocks each vertex lies in) and its entry address ``pi_e`` (the
position inside that block).  This module checks, as exact integer
identities, that composite counts decompose over the fibres of either
address map and that every fibre has the size predicted by the union of
sign classes compatible with its base circuit.

Circuit arrays are 2-D: one row per circuit, columns ``pi(0), ..., pi(2t)``.
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field

import numpy as np

from .counting import count_pi_star, count_pi_star_signed, count_union
from .links import Composite, Link, Model, label_table
from .words import Word, l0


class VerificationError(AssertionError):
    pass


def block_address(pi, n: int) -> np.ndarray:
    return (np.asarray(pi) - 1) // n + 1


def entry_address(pi, n: int) -> np.ndarray:
    pi = np.asarray(pi)
    return pi - (block_address(pi, n) - 1) * n


def compose(pi_b, pi_e, n: int) -> np.ndarray:
    return (np.asarray(pi_b) - 1) * n + np.asarray(pi_e)


def all_closed_circuits(n: int, h: int) -> np.ndarray:
    """Every closed circuit of length ``h`` over ``1..n`` (``n^h`` rows)."""
    head = np.indices((n,) * h, dtype=np.int32).reshape(h, -1).T + 1
    return np.hstack([head, head[:, :1]])


def in_class_mask(circuits: np.ndarray, w: Word, table: np.ndarray) -> np.ndarray:
    """Rows of ``circuits`` lying in ``Pi*(w)`` for the link encoded by ``table``."""
    is_first, _, mate = w.arrays()
    c = circuits - 1
    mask = np.ones(c.shape[0], dtype=bool)
    for i in range(1, len(w) + 1):
        if is_first[i]:
            j = mate[i]
            mask &= table[c[:, i - 1], c[:, i]] == table[c[:, j - 1], c[:, j]]
    return mask


def sign_states(circuits: np.ndarray, w: Word, link: Link) -> np.ndarray:
    """Per-letter sign state of member circuits: 0 both signs, 1 repeat, 2 reverse."""
    is_first, _, mate = w.arrays()
    cols = []
    for i in range(1, len(w) + 1):
        if not is_first[i]:
            continue
        j = mate[i]
        a, b = circuits[:, i - 1], circuits[:, i]
        c, d = circuits[:, j - 1], circuits[:, j]
        if link is Link.SYM_TOEPLITZ:
            both, plus = a == b, (a - b) == (c - d)
        elif link is Link.WIGNER:
            both, plus = a == b, (a == c) & (b == d)
        else:
            raise ValueError(f"no sign classes for {link}")
        cols.append(np.where(both, 0, np.where(plus, 1, 2)))
    return np.stack(cols, axis=1) if cols else np.zeros((circuits.shape[0], 0), dtype=int)


def compatible_signs(states) -> list[tuple[int, ...]]:
    """All ``l`` whose sign class contains a circuit with these letter states."""
    choices = [(-1, 1) if s == 0 else ((1,) if s == 1 else (-1,)) for s in states]
    return list(itertools.product(*choices))


def _row_codes(rows: np.ndarray, base: int) -> np.ndarray:
    codes = np.zeros(rows.shape[0], dtype=np.int64)
    for col in range(rows.shape[1]):
        codes = codes * base + (rows[:, col] - 1)
    return codes


def _class_members(link, n: int, w: Word) -> np.ndarray:
    circuits = all_closed_circuits(n, len(w))
    return circuits[in_class_mask(circuits, w, label_table(link, n))]


def fiber_size(pi_b, w, model, n: int, k: int | None = None) -> int:
    """Number of composite circuits in ``Pi*_{L,nk}(w)`` with block address ``pi_b``.

    Counted directly over all entry circuits and again as the size of the
    union of entry sign classes compatible with ``pi_b``; a mismatch raises
    :class:`VerificationError`.
    """
    w = w if isinstance(w, Word) else Word(str(w))
    model = Model(model) if isinstance(model, str) else model
    pi_b = np.asarray(pi_b, dtype=np.int64)
    if pi_b.shape != (len(w) + 1,) or pi_b[0] != pi_b[-1]:
        raise ValueError("pi_b must be a closed circuit of length 2t")
    k = int(pi_b.max()) if k is None else k
    if not in_class_mask(pi_b[None, :], w, label_table(Link.SYM_TOEPLITZ, k))[0]:
        raise ValueError(f"{pi_b.tolist()} is not in Pi*_(L_T,{k})({w})")

    entries = all_closed_circuits(n, len(w))
    composite = compose(np.broadcast_to(pi_b, entries.shape), entries, n)
    direct = int(in_class_mask(composite, w, label_table(Composite(model, k, n), n * k)).sum())

    signs = compatible_signs(sign_states(pi_b[None, :], w, Link.SYM_TOEPLITZ)[0])
    via_union = count_union(model.entry_link, n, w, signs)
    if direct != via_union:
        raise VerificationError(
            f"fibre over {pi_b.tolist()} ({model.value}, {w}, n={n}): direct {direct} != union {via_union}")
    return direct


@dataclass
class DecompositionReport:
    word: str
    n: int
    k: int
    model: str
    composite_count: int
    enumerated_count: int
    fiber_sum: int
    entry_sum: int
    sandwich: dict
    block_fibers_ok: bool
    entry_fibers_ok: bool
    pushforward_ok: bool
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = self.passed
        return d


def _fibers(base: np.ndarray, base_link: Link, base_size: int, images: np.ndarray,
            other_link: Link, other_size: int, w: Word):
    """Per-base direct fibre sizes against their sign-class union counts."""
    direct = dict(zip(*np.unique(_row_codes(images, base_size), return_counts=True)))
    codes = _row_codes(base, base_size)
    states = sign_states(base, w, base_link)
    cache: dict[tuple, int] = {}
    total, ok = 0, True
    for code, st in zip(codes, map(tuple, states)):
        if st not in cache:
            cache[st] = count_union(other_link, other_size, w, compatible_signs(st))
        total += cache[st]
        ok &= int(direct.get(code, 0)) == cache[st]
    pushed = set(direct) <= set(codes.tolist())
    return total, ok, pushed


def verify_decomposition(w, n: int, k: int, model) -> DecompositionReport:
    """Check the fibre decompositions and the sandwich bounds on one instance."""
    w = w if isinstance(w, Word) else Word(str(w))
    model = Model(model) if isinstance(model, str) else model
    entry_link = model.entry_link
    comp = Composite(model, k, n)

    members = _class_members(comp, n * k, w)
    composite_count = count_pi_star(comp, n * k, w).count
    pb, pe = block_address(members, n), entry_address(members, n)

    blocks = _class_members(Link.SYM_TOEPLITZ, k, w)
    entries = _class_members(entry_link, n, w)
    fiber_sum, block_ok, b_push = _fibers(blocks, Link.SYM_TOEPLITZ, k, pb, entry_link, n, w)
    entry_sum, entry_ok, e_push = _fibers(entries, entry_link, n, pe, Link.SYM_TOEPLITZ, k, w)

    lower = (count_pi_star_signed(entry_link, n, w, l0(w.t)).count
             * count_pi_star_signed(Link.SYM_TOEPLITZ, k, w, l0(w.t)).count)
    upper = count_pi_star(entry_link, n, w).count * count_pi_star(Link.SYM_TOEPLITZ, k, w).count

    failures = []
    if composite_count != len(members):
        failures.append(f"kernel count {composite_count} != enumerated {len(members)}")
    if fiber_sum != composite_count:
        failures.append(f"block fibre sum {fiber_sum} != composite count {composite_count}")
    if entry_sum != composite_count:
        failures.append(f"entry fibre sum {entry_sum} != composite count {composite_count}")
    if not block_ok:
        failures.append("a block fibre differs from its sign-class union")
    if not entry_ok:
        failures.append("an entry fibre differs from its sign-class union")
    if not (b_push and e_push):
        failures.append("an address of a member falls outside its factor class")
    if not lower <= composite_count <= upper:
        failures.append(f"sandwich {lower} <= {composite_count} <= {upper} fails")

    return DecompositionReport(
        word=str(w), n=n, k=k, model=model.value,
        composite_count=composite_count, enumerated_count=int(len(members)),
        fiber_sum=fiber_sum, entry_sum=entry_sum,
        sandwich={"lower": lower, "value": composite_count, "upper": upper},
        block_fibers_ok=block_ok, entry_fibers_ok=entry_ok,
        pushforward_ok=b_push and e_push, failures=failures,
    )


def non_surjective_witness(w, n: int, k: int, model):
    """A pair from the two factor classes whose composition leaves ``Pi*_{L,nk}(w)``."""
    w = w if isinstance(w, Word) else Word(str(w))
    model = Model(model) if isinstance(model, str) else model
    table = label_table(Composite(model, k, n), n * k)
    blocks = _class_members(Link.SYM_TOEPLITZ, k, w)
    entries = _class_members(model.entry_link, n, w)
    for pb in blocks:
        composite = compose(np.broadcast_to(pb, entries.shape), entries, n)
        bad = ~in_class_mask(composite, w, table)
        if bad.any():
            return pb, entries[np.argmax(bad)]
    return None
