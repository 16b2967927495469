"""Compositions, partitions and the orders used on them.

Compositions are tuples of positive integers; a composition of ``n`` is
identified with its descent set, the set of proper partial sums.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence


class Composition(tuple):
    """Immutable tuple of positive integers.

    Equality and hashing are those of the underlying tuple, so a
    composition and the plain tuple of its parts are interchangeable as
    dictionary keys.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"composition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self)})"

    def __str__(self) -> str:
        return format_index(self)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        return cls(parse_index(text))


class Partition(Composition):
    """Weakly decreasing composition."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        for a, b in zip(self, self[1:]):
            if a < b:
                raise ValueError(f"partition parts must weakly decrease, got {tuple(self)}")
        return self


def is_composition(seq: Sequence[int]) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in seq)


def is_partition(seq: Sequence[int]) -> bool:
    return is_composition(seq) and all(a >= b for a, b in zip(seq, seq[1:]))


def as_composition(entries: Iterable[int]) -> Composition:
    """Convert an integer tuple to a composition; all entries must be positive."""
    return Composition(entries)


def parse_index(text: str) -> tuple[int, ...]:
    """Parse ``"2,3"`` (or ``"[2,3]"``) into ``(2, 3)``; ``""`` is the empty tuple."""
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1].strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse index {text!r}") from None


def format_index(index: Sequence[int]) -> str:
    return ",".join(str(p) for p in index)


def format_subset(subset: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(subset)) + "}"


def compositions_of(n: int) -> list[Composition]:
    """All compositions of ``n`` in lexicographic order (one, empty, for n = 0)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Composition(c) for c in _compositions(n)]


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = [Partition(p) for p in _partitions(n, n if max_part is None else max_part)]
    out.sort()
    return out


def _partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def descent_set(alpha: Sequence[int]) -> frozenset[int]:
    """Proper partial sums of ``alpha``: D([4,4,2,7]) = {4, 8, 10}."""
    out = set()
    total = 0
    for p in alpha[:-1]:
        total += p
        out.add(total)
    return frozenset(out)


descent_bijection = descent_set


def composition_of_subset(subset: Iterable[int], n: int) -> Composition:
    """Inverse of :func:`descent_set` for compositions of ``n``."""
    points = sorted(set(subset))
    if n < 0:
        raise ValueError("n must be non-negative")
    for s in points:
        if not 1 <= s <= n - 1:
            raise ValueError(f"subset element {s} outside {{1,...,{n - 1}}}")
    if n == 0:
        return Composition()
    cuts = [0] + points + [n]
    return Composition(b - a for a, b in zip(cuts, cuts[1:]))


def refinement_leq(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """True iff ``alpha`` refines ``beta``, i.e. D(beta) is a subset of D(alpha)."""
    if sum(alpha) != sum(beta):
        raise ValueError("refinement order compares compositions of equal size")
    return descent_set(beta) <= descent_set(alpha)


def coarsenings(alpha: Sequence[int]) -> list[Composition]:
    """All beta >= alpha in refinement order, lexicographically sorted."""
    n = sum(alpha)
    d = sorted(descent_set(alpha))
    out = [composition_of_subset(s, n) for k in range(len(d) + 1) for s in combinations(d, k)]
    out.sort()
    return out


def refinements(alpha: Sequence[int]) -> list[Composition]:
    """All beta <= alpha in refinement order, lexicographically sorted."""
    out: list[Composition] = []

    def split(i: int, acc: tuple[int, ...]) -> None:
        if i == len(alpha):
            out.append(Composition(acc))
            return
        for piece in _compositions(alpha[i]):
            split(i + 1, acc + piece)

    split(0, ())
    out.sort()
    return out


def lex_leq(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    return tuple(alpha) <= tuple(beta)


def pieri_successors(alpha: Sequence[int], s: int) -> list[Composition]:
    """All beta with alpha ⊂_s beta: grow existing rows, add at most one new row."""
    if s < 1:
        raise ValueError("s must be positive")
    alpha = tuple(alpha)
    out = []

    def grow(i: int, left: int, acc: tuple[int, ...]) -> None:
        if i == len(alpha):
            out.append(Composition(acc + ((left,) if left else ())))
            return
        for extra in range(left + 1):
            grow(i + 1, left - extra, acc + (alpha[i] + extra,))

    grow(0, s, ())
    out.sort()
    return out


def sort_partition(entries: Iterable[int]) -> Partition:
    """Multiset-sort positive entries into a partition."""
    return Partition(sorted(entries, reverse=True))


def rearrangements(lam: Sequence[int]) -> list[Composition]:
    """Distinct orderings of the parts of ``lam``, lexicographically sorted."""
    parts = sorted(lam)
    out: list[Composition] = []

    def build(pool: list[int], acc: tuple[int, ...]) -> None:
        if not pool:
            out.append(Composition(acc))
            return
        seen = set()
        for i, p in enumerate(pool):
            if p in seen:
                continue
            seen.add(p)
            build(pool[:i] + pool[i + 1:], acc + (p,))

    build(parts, ())
    return out
