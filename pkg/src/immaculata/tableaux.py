"""Immaculate tableaux: enumeration, descents, skew fillings and LR counts.

An immaculate tableau of shape ``alpha`` has weakly increasing rows and a
strictly increasing first column; no other column is constrained.
Tableaux are stored as tuples of rows, first row on top.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .compositions import Composition, composition_of_subset, is_partition

Row = tuple[int, ...]


@dataclass(frozen=True)
class ImmaculateTableau:
    rows: tuple[Row, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    @property
    def shape(self) -> Composition:
        return Composition(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def content(self) -> tuple[int, ...]:
        """Occurrence counts of 1, 2, ..., max entry."""
        return word_content([x for r in self.rows for x in r])

    def is_valid(self) -> bool:
        if any(len(r) == 0 for r in self.rows):
            return False
        if any(x < 1 for r in self.rows for x in r):
            return False
        if any(a > b for r in self.rows for a, b in zip(r, r[1:])):
            return False
        firsts = [r[0] for r in self.rows]
        return all(a < b for a, b in zip(firsts, firsts[1:]))

    def is_standard(self) -> bool:
        entries = sorted(x for r in self.rows for x in r)
        return entries == list(range(1, len(entries) + 1))

    def to_json_obj(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def render(self) -> str:
        width = max((len(str(x)) for r in self.rows for x in r), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows)


@dataclass(frozen=True)
class SkewShape:
    """Cells of ``outer`` not in ``inner``; rows matched by index from the top."""

    inner: Composition
    outer: Composition

    def __post_init__(self):
        inner, outer = Composition(self.inner), Composition(self.outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "outer", outer)
        if not skew_contains(inner, outer):
            raise ValueError(f"{list(inner)} is not contained in {list(outer)}")

    def row_lengths(self) -> tuple[int, ...]:
        """Number of skew cells in each row of ``outer``."""
        return tuple(b - (self.inner[i] if i < len(self.inner) else 0) for i, b in enumerate(self.outer))

    @property
    def size(self) -> int:
        return sum(self.row_lengths())


def skew_contains(inner: Sequence[int], outer: Sequence[int]) -> bool:
    return len(inner) <= len(outer) and all(a <= b for a, b in zip(inner, outer))


@dataclass(frozen=True)
class SkewImmaculateTableau:
    shape: SkewShape
    rows: tuple[Row, ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != self.shape.row_lengths():
            raise ValueError("row fillings do not match the skew shape")

    def is_valid(self) -> bool:
        if any(a > b for r in self.rows for a, b in zip(r, r[1:])):
            return False
        firsts = [r[0] for r in self.rows[len(self.shape.inner):]]
        return all(a < b for a, b in zip(firsts, firsts[1:]))

    def render(self) -> str:
        lines = []
        for i, r in enumerate(self.rows):
            k = self.shape.inner[i] if i < len(self.shape.inner) else 0
            lines.append(" ".join(["."] * k + [str(x) for x in r]))
        return "\n".join(lines)


# words

def reading_word(t) -> tuple[int, ...]:
    """Right to left within each row, top row first."""
    return tuple(x for r in t.rows for x in reversed(r))


def word_content(word: Sequence[int]) -> tuple[int, ...]:
    if not word:
        return ()
    counts = [0] * max(word)
    for x in word:
        counts[x - 1] += 1
    return tuple(counts)


def is_yamanouchi(word: Sequence[int]) -> bool:
    seen: Counter = Counter()
    for x in word:
        seen[x] += 1
        if x > 1 and seen[x] > seen[x - 1]:
            return False
    return True


# straight tableaux

def _increasing_rows(counts: list[int], length: Optional[int], low: int) -> Iterator[Row]:
    """Weakly increasing rows drawn from the multiset ``counts`` (value v has
    counts[v-1] copies) using values >= low, in lexicographic order.

    ``length=None`` yields every length, shortest prefix first.
    """
    n = len(counts)

    def build(v: int, left: Optional[int], acc: Row) -> Iterator[Row]:
        if left == 0:
            yield acc
            return
        if left is None:
            yield acc
        for w in range(v, n + 1):
            if counts[w - 1]:
                counts[w - 1] -= 1
                yield from build(w, None if left is None else left - 1, acc + (w,))
                counts[w - 1] += 1

    yield from build(low, length, ())


def iter_immaculate_tableaux(content: Sequence[int], shape: Optional[Sequence[int]] = None) -> Iterator[ImmaculateTableau]:
    """Immaculate tableaux of the given content, in row-reading lexicographic order.

    With ``shape=None`` every shape is produced.  Each row starts with the
    smallest value not yet placed and must use up all its copies, otherwise
    the first column could not strictly increase below it.
    """
    counts = [int(c) for c in content]
    if any(c < 0 for c in counts):
        raise ValueError("content entries must be non-negative")
    if shape is not None:
        shape = tuple(shape)
        if any(p < 1 for p in shape):
            raise ValueError("shape must be a composition")
        if sum(shape) != sum(counts):
            raise ValueError(f"shape size {sum(shape)} does not match content size {sum(counts)}")
    total = sum(counts)

    def place(i: int, placed: int, rows: tuple[Row, ...]) -> Iterator[ImmaculateTableau]:
        if placed == total:
            if shape is None or i == len(shape):
                yield ImmaculateTableau(rows)
            return
        if shape is not None and i == len(shape):
            return
        v = next(k for k, c in enumerate(counts, 1) if c)
        copies = counts[v - 1]
        length = None if shape is None else shape[i] - copies
        if length is not None and length < 0:
            return
        counts[v - 1] = 0
        for tail in _increasing_rows(counts, length, v + 1):
            row = (v,) * copies + tail
            yield from place(i + 1, placed + len(row), rows + (row,))
        counts[v - 1] = copies

    yield from place(0, 0, ())


def enumerate_immaculate_tableaux(shape: Sequence[int], content: Sequence[int]) -> list[ImmaculateTableau]:
    return list(iter_immaculate_tableaux(content, shape))


def kostka_immaculate(shape: Sequence[int], content: Sequence[int]) -> int:
    """K_{shape,content}: number of immaculate tableaux."""
    return sum(1 for _ in iter_immaculate_tableaux(content, shape))


@lru_cache(maxsize=None)
def _kostka_column(content: tuple[int, ...]) -> tuple[tuple[Composition, int], ...]:
    tally = Counter(t.shape for t in iter_immaculate_tableaux(content))
    return tuple(sorted(tally.items()))


def kostka_by_shape(content: Sequence[int]) -> dict[Composition, int]:
    """{shape: K_{shape,content}} over all shapes with a nonzero count."""
    return dict(_kostka_column(tuple(int(c) for c in content)))


def standard_immaculate_tableaux(shape: Sequence[int]) -> list[ImmaculateTableau]:
    n = sum(shape)
    return enumerate_immaculate_tableaux(shape, [1] * n)


@lru_cache(maxsize=None)
def _standard_of_size(n: int) -> tuple[ImmaculateTableau, ...]:
    return tuple(iter_immaculate_tableaux([1] * n))


def standard_tableaux_of_size(n: int) -> tuple[ImmaculateTableau, ...]:
    """Every standard immaculate tableau with ``n`` cells (there are Bell(n))."""
    return _standard_of_size(n)


def descent_set_of_tableau(t: ImmaculateTableau) -> frozenset[int]:
    row_of = {x: i for i, r in enumerate(t.rows) for x in r}
    n = len(row_of)
    return frozenset(i for i in range(1, n) if row_of[i + 1] > row_of[i])


def descent_composition(t: ImmaculateTableau) -> Composition:
    if not t.is_standard():
        raise ValueError("descent composition needs a standard tableau")
    return composition_of_subset(descent_set_of_tableau(t), t.size)


@lru_cache(maxsize=None)
def _descent_table(n: int) -> tuple[tuple[tuple[Composition, Composition], int], ...]:
    tally = Counter((t.shape, descent_composition(t)) for t in _standard_of_size(n))
    return tuple(sorted(tally.items()))


def descent_table(n: int) -> dict[tuple[Composition, Composition], int]:
    """{(shape, descent composition): L_{shape,descent}} for size ``n``."""
    return dict(_descent_table(n))


def l_coefficient(shape: Sequence[int], descent: Sequence[int]) -> int:
    return sum(1 for t in standard_immaculate_tableaux(shape) if descent_composition(t) == tuple(descent))


# skew tableaux and the LR rule

def iter_lr_tableaux(inner: Sequence[int], lam: Sequence[int], outer: Optional[Sequence[int]] = None) -> Iterator[SkewImmaculateTableau]:
    """Skew immaculate tableaux on outer minus inner whose reading word is
    Yamanouchi of content ``lam``.  ``outer=None`` ranges over all outers.
    """
    inner = Composition(inner)
    if not is_partition(tuple(lam)):
        raise ValueError(f"{list(lam)} is not a partition")
    counts = list(lam)
    total = sum(counts)
    if outer is not None:
        outer = Composition(outer)
        if sum(outer) != sum(inner) + total:
            raise ValueError("outer size must equal inner size plus content size")
        if not skew_contains(inner, outer):
            return
    k = len(inner)
    seen = [0] * (len(counts) + 2)

    def push(row: Row) -> bool:
        """Append reversed row to the reading word; False if not Yamanouchi."""
        ok = True
        for x in reversed(row):
            seen[x] += 1
            if x > 1 and seen[x] > seen[x - 1]:
                ok = False
        return ok

    def pop(row: Row) -> None:
        for x in row:
            seen[x] -= 1

    def place(i: int, placed: int, last_first: int, rows: tuple[Row, ...], lengths: tuple[int, ...]):
        if i >= k and placed == total:
            if outer is None or i == len(outer):
                yield SkewImmaculateTableau(SkewShape(inner, Composition(lengths)), rows)
            return
        if outer is not None and i == len(outer):
            return
        if i < k:
            length = None if outer is None else outer[i] - inner[i]
            for row in _increasing_rows(counts, length, 1):
                if push(row):
                    yield from place(i + 1, placed + len(row), last_first, rows + (row,), lengths + (inner[i] + len(row),))
                pop(row)
            return
        v = next(j for j, c in enumerate(counts, 1) if c)
        if v <= last_first:
            return
        copies = counts[v - 1]
        length = None if outer is None else outer[i] - copies
        if length is not None and length < 0:
            return
        counts[v - 1] = 0
        for tail in _increasing_rows(counts, length, v + 1):
            row = (v,) * copies + tail
            if push(row):
                yield from place(i + 1, placed + len(row), v, rows + (row,), lengths + (len(row),))
            pop(row)
        counts[v - 1] = copies

    yield from place(0, 0, 0, (), ())


def lr_coefficient(alpha: Sequence[int], lam: Sequence[int], beta: Sequence[int]) -> int:
    """c_{alpha,lam}^beta; zero when beta does not contain alpha."""
    if sum(beta) != sum(alpha) + sum(lam):
        raise ValueError("|beta| must equal |alpha| + |lam|")
    return sum(1 for _ in iter_lr_tableaux(alpha, lam, beta))


def lr_coefficients(alpha: Sequence[int], lam: Sequence[int]) -> dict[Composition, int]:
    """{beta: c_{alpha,lam}^beta} over all beta with a nonzero coefficient."""
    tally = Counter(t.shape.outer for t in iter_lr_tableaux(alpha, lam))
    return dict(sorted(tally.items()))
