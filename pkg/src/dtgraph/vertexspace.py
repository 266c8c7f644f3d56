"""Vertices of G(beta, t): n-subsets of {0, ..., beta - 1} as increasing tuples.

Ranking is colexicographic via the combinatorial number system,
rank(v) = sum over i of C(v[i], i + 1). Colex ranks do not depend on beta,
so they stay stable when beta grows.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator

from .typecore import Vertex, _check_increasing

__all__ = [
    "check_vertex",
    "rank",
    "unrank",
    "iterate_vertices",
    "order_collapse",
    "vertex_count",
]


def check_vertex(v: Vertex, width: int | None = None, beta: int | None = None) -> None:
    """Validate an increasing tuple against an expected width and range."""
    _check_increasing(v, "vertex")
    if width is not None and len(v) != width:
        raise ValueError(f"vertex width {len(v)} does not match expected {width}")
    if beta is not None and v and v[-1] >= beta:
        raise ValueError(f"vertex element {v[-1]} out of range for beta={beta}")


def rank(v: Vertex, n: int | None = None) -> int:
    """Colex rank of an n-subset."""
    check_vertex(v, width=n)
    return sum(comb(x, i + 1) for i, x in enumerate(v))


def unrank(r: int, n: int, beta: int) -> Vertex:
    """Inverse of rank; all elements of the result are below beta."""
    if n < 1:
        raise ValueError(f"width must be positive, got {n}")
    if not 0 <= r < comb(beta, n):
        raise ValueError(f"rank {r} out of range for C({beta},{n}) = {comb(beta, n)}")
    out = []
    rem = r
    for i in range(n, 0, -1):
        # largest x with C(x, i) <= rem
        x = i - 1
        while comb(x + 1, i) <= rem:
            x += 1
        out.append(x)
        rem -= comb(x, i)
    return tuple(reversed(out))


def iterate_vertices(n: int, beta: int) -> Iterator[Vertex]:
    """All n-subsets of {0, ..., beta - 1} in colex rank order.

    Empty when n > beta; C(beta, n) items otherwise.
    """
    if n < 1:
        raise ValueError(f"width must be positive, got {n}")
    if n > beta:
        return
    v = list(range(n))
    while True:
        yield tuple(v)
        # colex successor: bump the lowest position that has room, reset below
        i = 0
        while i < n - 1 and v[i] + 1 == v[i + 1]:
            i += 1
        if v[i] + 1 >= beta and i == n - 1:
            return
        v[i] += 1
        for j in range(i):
            v[j] = j


def order_collapse(vs: Iterable[Vertex]) -> list[Vertex]:
    """Relabel all occurring values onto {0, ..., m - 1}, preserving order.

    Pairwise types only depend on relative order, so they are unchanged.
    Idempotent.
    """
    vs = list(vs)
    for v in vs:
        _check_increasing(v, "vertex")
    mapping = {x: i for i, x in enumerate(sorted({x for v in vs for x in v}))}
    return [tuple(mapping[x] for x in v) for v in vs]


def vertex_count(n: int, beta: int) -> int:
    """C(beta, n): the number of vertices of G(beta, t) at width n."""
    return comb(beta, n)
