"""Interleaving types of disjoint set pairs.

A type of width n is a balanced binary word of length 2n: exactly n zeros
and n ones. Two disjoint n-sets of naturals realize the type t when, reading
their union in increasing order, the elements of the first set sit exactly at
the zero positions of t and the elements of the second at the one positions.
Swapping the two sets complements the word, which is the dual type.

The canonical family t(n, s), for 1 <= s < n, is the word made of s zeros,
then n - s copies of "01", then s ones. For example the width-5 member with
s = 2 is 0001010111.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "TypePattern",
    "parse_type",
    "canonical_type",
    "dual",
    "type_of",
    "canonical_params",
]

Vertex = tuple[int, ...]


@dataclass(frozen=True)
class TypePattern:
    """A balanced binary word of length 2n, bit i in {0, 1}."""

    word: tuple[int, ...]

    def __post_init__(self):
        if len(self.word) == 0 or len(self.word) % 2 != 0:
            raise ValueError(f"type word must have positive even length, got {len(self.word)}")
        ones = sum(self.word)
        if ones * 2 != len(self.word):
            raise ValueError(
                f"type word must be balanced: {len(self.word) - ones} zeros vs {ones} ones"
            )

    @property
    def width(self) -> int:
        return len(self.word) // 2

    def __str__(self) -> str:
        return "".join("01"[b] for b in self.word)


def parse_type(text: str) -> TypePattern:
    """Parse a binary string such as "0011" into a TypePattern.

    Raises ValueError, with distinct messages, for illegal characters, odd
    length, and unbalanced zero/one counts.
    """
    bad = set(text) - {"0", "1"}
    if bad:
        raise ValueError(f"type word may contain only '0' and '1', got {sorted(bad)!r}")
    return TypePattern(tuple(1 if ch == "1" else 0 for ch in text))


def canonical_type(n: int, s: int) -> TypePattern:
    """The canonical type of width n: s zeros, n - s copies of "01", s ones."""
    if not 1 <= s < n:
        raise ValueError(f"canonical type needs 1 <= s < n, got n={n}, s={s}")
    word = (0,) * s + (0, 1) * (n - s) + (1,) * s
    return TypePattern(word)


def dual(t: TypePattern) -> TypePattern:
    """Bitwise complement: the type seen from the other side of the pair."""
    return TypePattern(_dual_word(t.word))


@lru_cache(maxsize=None)
def _dual_word(word: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(1 - b for b in word)


def _check_increasing(v: Vertex, name: str) -> None:
    if any(v[i] >= v[i + 1] for i in range(len(v) - 1)) or (v and v[0] < 0):
        raise ValueError(f"{name} must be a strictly increasing tuple of naturals, got {v}")


def _merged_word(a: Vertex, b: Vertex) -> tuple[int, ...] | None:
    """Merge two increasing tuples; bit i marks which side the i-th smallest
    element of the union came from. None when the tuples intersect."""
    n = len(a)
    word = []
    i = j = 0
    while i < n and j < n:
        if a[i] == b[j]:
            return None
        if a[i] < b[j]:
            word.append(0)
            i += 1
        else:
            word.append(1)
            j += 1
    word.extend([0] * (n - i))
    word.extend([1] * (n - j))
    return tuple(word)


def type_of(a: Vertex, b: Vertex) -> TypePattern | None:
    """The type realized by the ordered pair (a, b), or None if they intersect.

    Both arguments must be strictly increasing tuples of the same width.
    The result only depends on the relative order of the union, so any
    order-preserving relabeling of the elements leaves it unchanged.
    """
    if len(a) != len(b):
        raise ValueError(f"width mismatch: {len(a)} vs {len(b)}")
    if len(a) == 0:
        raise ValueError("width must be positive")
    _check_increasing(a, "a")
    _check_increasing(b, "b")
    word = _merged_word(a, b)
    return None if word is None else TypePattern(word)


def canonical_params(t: TypePattern) -> tuple[int, int] | None:
    """Recover (n, s) if t is a canonical type, else None."""
    n = t.width
    for s in range(1, n):
        if t.word == (0,) * s + (0, 1) * (n - s) + (1,) * s:
            return n, s
    return None
