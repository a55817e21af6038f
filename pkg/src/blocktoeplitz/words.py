"""Pair-matched words in canonical letter form."""
from __future__ import annotations

import math
import string
from itertools import product
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

MAX_T = 6


@dataclass(frozen=True)
class Word:
    """Pair-matched word such as ``"abab"``; positions are 1-based."""

    letters: str

    def __post_init__(self):
        s = self.letters
        if not s or len(s) % 2:
            raise ValueError(f"word {s!r} must have positive even length")
        seen: dict[str, int] = {}
        nxt = 0
        for ch in s:
            if ch not in seen:
                if ch != string.ascii_lowercase[nxt]:
                    raise ValueError(f"word {s!r} is not in canonical form")
                seen[ch] = 0
                nxt += 1
            seen[ch] += 1
        if any(c != 2 for c in seen.values()):
            raise ValueError(f"word {s!r} is not pair-matched")

    def __str__(self) -> str:
        return self.letters

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def t(self) -> int:
        return len(self.letters) // 2

    @cached_property
    def _encoding(self):
        h = len(self.letters)
        is_first = np.zeros(h + 1, dtype=np.bool_)
        letter = np.full(h + 1, -1, dtype=np.int64)
        mate = np.zeros(h + 1, dtype=np.int64)
        first_at: dict[str, int] = {}
        for pos, ch in enumerate(self.letters, start=1):
            letter[pos] = ord(ch) - ord("a")
            if ch in first_at:
                mate[pos] = first_at[ch]
                mate[first_at[ch]] = pos
            else:
                first_at[ch] = pos
                is_first[pos] = True
        return is_first, letter, mate

    def arrays(self):
        """``(is_first, letter, mate)`` indexed by position 1..2t (slot 0 unused)."""
        return self._encoding


def canonical(letters: str) -> Word:
    """Relabel a pair-matched string so first occurrences are alphabetical."""
    relabel: dict[str, str] = {}
    for ch in letters:
        relabel.setdefault(ch, string.ascii_lowercase[len(relabel)])
    return Word("".join(relabel[ch] for ch in letters))


def n_pair_matched(t: int) -> int:
    return math.factorial(2 * t) // (2**t * math.factorial(t))


@lru_cache(maxsize=None)
def _pairings(t: int) -> tuple[Word, ...]:
    out = []

    def rec(slots: list[str | None], letter: int):
        try:
            i = slots.index(None)
        except ValueError:
            out.append(Word("".join(slots)))
            return
        ch = string.ascii_lowercase[letter]
        slots[i] = ch
        for j in range(i + 1, len(slots)):
            if slots[j] is None:
                slots[j] = ch
                rec(slots, letter + 1)
                slots[j] = None
        slots[i] = None

    rec([None] * (2 * t), 0)
    return tuple(sorted(out, key=lambda w: w.letters))


def enumerate_pair_matched(t: int) -> list[Word]:
    """All pair-matched words of length ``2t``, sorted."""
    if not 1 <= t <= MAX_T:
        raise ValueError(f"t must be in 1..{MAX_T}, got {t}")
    return list(_pairings(t))


def is_catalan(w) -> bool:
    """Reducible to empty by repeatedly deleting adjacent double letters."""
    w = w if isinstance(w, Word) else Word(str(w))
    stack: list[str] = []
    for ch in w.letters:
        if stack and stack[-1] == ch:
            stack.pop()
        else:
            stack.append(ch)
    return not stack


def catalan_words(t: int) -> list[Word]:
    return [w for w in enumerate_pair_matched(t) if is_catalan(w)]


def generating_vertices(w: Word) -> tuple[list[int], dict[int, int]]:
    """Non-zero generating positions ``S`` (ascending) and their partners ``j_i``."""
    is_first, _, mate = w.arrays()
    S = [p for p in range(1, len(w) + 1) if is_first[p]]
    return S, {i: int(mate[i]) for i in S}


def sign_vectors(t: int):
    """All of ``{-1, +1}^t`` in lexicographic order."""
    return list(product((-1, 1), repeat=t))


def l0(t: int) -> tuple[int, ...]:
    return (-1,) * t
