"""The implicit graph G(beta, t).

Vertices are the n-subsets of {0, ..., beta - 1} where n is the width of t;
two subsets are joined when they are disjoint and their interleaving type is
t or its dual. The graph is never materialized as a matrix: everything runs
off adjacency tests and lazy neighbor enumeration.

Neighbor enumeration by gap decomposition. Fix a vertex a and ask for the b
with type(a, b) = w. The word w prescribes, for each gap of a (below a(0),
strictly between consecutive elements, and above a(n-1)), exactly how many
elements of b land in that gap: the count of ones between consecutive zeros
of w. Neighbors are therefore the product of independent per-gap choices,
which this module enumerates lazily (in lexicographic order of the resulting
tuples), counts exactly, and samples uniformly without enumeration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb
from random import Random
from typing import Iterator

from .errors import BudgetError
from .typecore import TypePattern, Vertex, _dual_word, _merged_word
from .vertexspace import check_vertex, iterate_vertices, rank, vertex_count

__all__ = [
    "DEFAULT_BUDGET",
    "GraphSpec",
    "adjacent",
    "neighbors",
    "neighbor_count",
    "sample_neighbor",
    "edges",
    "edge_count",
    "export_lines",
]

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class GraphSpec:
    """The pair (beta, t) defining G(beta, t)."""

    beta: int
    pattern: TypePattern

    def __post_init__(self):
        if self.beta < 1:
            raise ValueError(f"beta must be a positive natural, got {self.beta}")

    @property
    def width(self) -> int:
        return self.pattern.width


@lru_cache(maxsize=None)
def _slot_counts(word: tuple[int, ...]) -> tuple[int, ...]:
    """counts[k] = how many b-elements the word puts into the k-th gap of a.

    Gap 0 lies below a(0), gap k (1 <= k <= n-1) between a(k-1) and a(k),
    gap n above a(n-1).
    """
    counts = [0]
    for bit in word:
        if bit == 0:
            counts.append(0)
        else:
            counts[-1] += 1
    return tuple(counts)


def _gaps(a: Vertex, beta: int) -> list[tuple[int, int]]:
    """Half-open value ranges [lo, hi) of the n + 1 gaps of a inside beta."""
    bounds = [(0, a[0])]
    bounds.extend((a[k - 1] + 1, a[k]) for k in range(1, len(a)))
    bounds.append((a[-1] + 1, beta))
    return bounds


def _iter_for_word(a: Vertex, word: tuple[int, ...], beta: int) -> Iterator[Vertex]:
    counts = _slot_counts(word)
    choices = []
    for (lo, hi), c in zip(_gaps(a, beta), counts):
        if c == 0:
            continue
        if hi - lo < c:
            return
        choices.append(combinations(range(lo, hi), c))
    for parts in product(*choices):
        b: tuple[int, ...] = ()
        for part in parts:
            b += part
        yield b


def _count_for_word(a: Vertex, word: tuple[int, ...], beta: int) -> int:
    total = 1
    for (lo, hi), c in zip(_gaps(a, beta), _slot_counts(word)):
        if c:
            total *= comb(hi - lo, c)
            if total == 0:
                return 0
    return total


def _sample_for_word(a: Vertex, word: tuple[int, ...], beta: int, rng: Random) -> Vertex:
    """One neighbor, uniform over all of them. The per-gap choices are
    independent, so sampling each gap uniformly is uniform overall."""
    b: tuple[int, ...] = ()
    for (lo, hi), c in zip(_gaps(a, beta), _slot_counts(word)):
        if c:
            b += tuple(sorted(rng.sample(range(lo, hi), c)))
    return b


def _words_for(g: GraphSpec, direction: str) -> list[tuple[int, ...]]:
    if direction == "up":
        return [g.pattern.word]
    if direction == "down":
        return [_dual_word(g.pattern.word)]
    if direction == "both":
        return [g.pattern.word, _dual_word(g.pattern.word)]
    raise ValueError(f"direction must be 'up', 'down' or 'both', got {direction!r}")


def adjacent(g: GraphSpec, a: Vertex, b: Vertex) -> bool:
    """True iff a and b are disjoint and realize t or its dual.

    Symmetric and irreflexive. Raises ValueError on width or range
    violations; overlapping pairs simply return False.
    """
    check_vertex(a, width=g.width, beta=g.beta)
    check_vertex(b, width=g.width, beta=g.beta)
    word = _merged_word(a, b)
    return word is not None and (word == g.pattern.word or word == _dual_word(g.pattern.word))


def neighbors(g: GraphSpec, a: Vertex, direction: str = "both") -> Iterator[Vertex]:
    """All b with type(a, b) = t ("up"), = dual(t) ("down"), or either.

    Yields lazily, in lexicographic order of b within each direction; "both"
    yields the up stream then the down stream. The two streams are disjoint
    because no pair realizes both t and its complement.
    """
    check_vertex(a, width=g.width, beta=g.beta)
    for word in _words_for(g, direction):
        yield from _iter_for_word(a, word, g.beta)


def neighbor_count(g: GraphSpec, a: Vertex, direction: str = "both") -> int:
    """Exact neighbor count without enumeration."""
    check_vertex(a, width=g.width, beta=g.beta)
    return sum(_count_for_word(a, word, g.beta) for word in _words_for(g, direction))


def sample_neighbor(g: GraphSpec, a: Vertex, rng: Random, direction: str = "both") -> Vertex | None:
    """A uniformly random neighbor of a, or None if it has none."""
    check_vertex(a, width=g.width, beta=g.beta)
    words = _words_for(g, direction)
    counts = [_count_for_word(a, word, g.beta) for word in words]
    total = sum(counts)
    if total == 0:
        return None
    pick = rng.randrange(total)
    for word, c in zip(words, counts):
        if pick < c:
            return _sample_for_word(a, word, g.beta, rng)
        pick -= c
    raise AssertionError("unreachable")


def edges(g: GraphSpec) -> Iterator[tuple[Vertex, Vertex]]:
    """Every unordered edge exactly once, smaller colex rank first.

    Each edge {a, b} has exactly one orientation realizing t itself, so
    iterating vertices in colex order and enumerating up-neighbors visits
    each edge once.
    """
    n = g.width
    for a in iterate_vertices(n, g.beta):
        ra = rank(a)
        for b in _iter_for_word(a, g.pattern.word, g.beta):
            if ra <= rank(b):
                yield a, b
            else:
                yield b, a


def edge_count(g: GraphSpec) -> int:
    """|E(G(beta, t))| = C(beta, 2n): every 2n-subset splits into exactly one
    ordered pair realizing t, whatever t is."""
    return comb(g.beta, 2 * g.width)


def export_lines(g: GraphSpec, fmt: str, budget: int = DEFAULT_BUDGET) -> Iterator[str]:
    """Serialize the edge set, one line at a time (no trailing newlines).

    dimacs: "p edge <numVertices> <numEdges>" then "e <u> <v>" with 1-based
    colex ranks. jsonl: one object {"a": [...], "b": [...]} per edge, the
    smaller-rank endpoint under "a". Refuses oversized graphs.
    """
    n_vertices = vertex_count(g.width, g.beta)
    if n_vertices > budget:
        raise BudgetError(
            f"export of C({g.beta},{g.width}) = {n_vertices} vertices exceeds budget {budget}"
        )
    if fmt == "dimacs":
        yield f"p edge {n_vertices} {edge_count(g)}"
        for a, b in edges(g):
            yield f"e {rank(a) + 1} {rank(b) + 1}"
    elif fmt == "jsonl":
        for a, b in edges(g):
            yield json.dumps({"a": list(a), "b": list(b)}, separators=(",", ":"))
    else:
        raise ValueError(f"format must be 'dimacs' or 'jsonl', got {fmt!r}")
