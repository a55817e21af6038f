"""Brute-force reference counts over every closed circuit.

Deliberately naive: scalar ``link_eval`` calls over all ``n^(2t)`` circuits.
It shares no code with the counting kernels and serves as their oracle.
"""
from __future__ import annotations

from itertools import product

from .links import Link, LinkKind, link_eval
from .words import Word, generating_vertices


def closed_circuits(n: int, h: int):
    """Yield every circuit ``(pi(0), ..., pi(h))`` over ``1..n`` with ``pi(0) == pi(h)``."""
    for head in product(range(1, n + 1), repeat=h):
        yield head + (head[0],)


def in_class(link: LinkKind, n: int, w: Word, pi) -> bool:
    S, j = generating_vertices(w)
    return all(
        link_eval(link, pi[i - 1], pi[i], n) == link_eval(link, pi[j[i] - 1], pi[j[i]], n)
        for i in S
    )


def in_signed_class(link: Link, w: Word, pi, l) -> bool:
    S, j = generating_vertices(w)
    for i, sign in zip(S, l):
        a, b = pi[i - 1], pi[i]
        c, d = pi[j[i] - 1], pi[j[i]]
        if link is Link.SYM_TOEPLITZ:
            if a - b != sign * (c - d):
                return False
        elif link is Link.WIGNER:
            if (a, b) != ((c, d) if sign == 1 else (d, c)):
                return False
        else:
            raise ValueError(f"no sign classes for {link}")
    return True


def brute_members(link: LinkKind, n: int, w: Word, l=None) -> set:
    h = len(w)
    if l is None:
        return {pi for pi in closed_circuits(n, h) if in_class(link, n, w, pi)}
    return {pi for pi in closed_circuits(n, h) if in_signed_class(link, w, pi, l)}


def brute_count(link: LinkKind, n: int, w: Word, l=None) -> int:
    return len(brute_members(link, n, w, l))
