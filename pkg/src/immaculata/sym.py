"""Symmetric functions, only as far as the immaculate theory needs them.

Schur functions indexed by arbitrary integer tuples are expanded through
the Jacobi-Trudi determinant in complete homogeneous functions ``h``, with
``h_0 = 1`` and ``h_{-m} = 0``.  Power sums ``p`` carry rational
coefficients; all other bases stay integral.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from ._combination import Index, LinearCombination
from .compositions import Partition, partitions_of, sort_partition
from . import nsym


class SymElement(LinearCombination):
    BASES = ("h", "s", "p", "m")

    __slots__ = ()

    def _check_index(self, basis, index):
        return Partition(index)

    def _product(self, other):
        if self.basis not in ("h", "p"):
            raise ValueError(f"products are computed in the h or p basis, not {self.basis}")
        acc: dict[Index, object] = {}
        for a, x in self.items():
            for b, y in other.items():
                key = sort_partition(a + b)
                acc[key] = acc.get(key, 0) + x * y
        return SymElement(self.basis, acc)


def h(*index: int) -> SymElement:
    return SymElement("h", {sort_partition(index): 1})


def p(*index: int) -> SymElement:
    return SymElement("p", {sort_partition(index): 1})


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def schur_straighten(alpha: Sequence[int]) -> tuple[int, Partition] | None:
    """s_alpha = sign * s_lam, or None when s_alpha = 0.

    Sorting the shifted entries alpha_i - i decreasingly gives the
    permutation; a repeated shifted entry or a negative resulting part
    means zero, and zero parts are dropped.
    """
    alpha = tuple(alpha)
    shifted = [a - i for i, a in enumerate(alpha, 1)]
    if len(set(shifted)) != len(shifted):
        return None
    order = sorted(range(len(alpha)), key=lambda j: -shifted[j])
    parts = [shifted[j] + i for i, j in enumerate(order, 1)]
    if parts and parts[-1] < 0:
        return None
    return _sign(order), Partition(x for x in parts if x)


@lru_cache(maxsize=None)
def _schur_to_h(alpha: tuple[int, ...]) -> SymElement:
    ell = len(alpha)
    acc: dict[Index, int] = {}
    for perm in permutations(range(ell)):
        entries = [alpha[i] + perm[i] - i for i in range(ell)]
        if any(x < 0 for x in entries):
            continue
        key = sort_partition(x for x in entries if x)
        acc[key] = acc.get(key, 0) + _sign(perm)
    return SymElement("h", acc)


def schur_to_h(alpha: Sequence[int]) -> SymElement:
    """det | h_{alpha_i + j - i} | expanded in the h basis."""
    return _schur_to_h(tuple(int(x) for x in alpha))


def s_to_h(f: SymElement) -> SymElement:
    if f.basis != "s":
        raise ValueError("expected an element in the s basis")
    return f.map_terms("h", schur_to_h)


def forgetful(f: "nsym.NSymElement") -> SymElement:
    """chi: NSym -> Sym, H_alpha -> h_{alpha_1} h_{alpha_2} ..."""
    f = nsym.change_basis(f, "H")
    acc: dict[Index, int] = {}
    for alpha, c in f.items():
        key = sort_partition(alpha)
        acc[key] = acc.get(key, 0) + c
    return SymElement("h", acc)


@lru_cache(maxsize=None)
def _h_single_in_p(n: int) -> SymElement:
    # n h_n = sum_{k=1}^{n} p_k h_{n-k}
    if n == 0:
        return SymElement("p", {(): 1})
    out = SymElement("p")
    for k in range(1, n + 1):
        out = out + p(k) * _h_single_in_p(n - k)
    return out * Fraction(1, n)


def h_to_p(f: SymElement) -> SymElement:
    """Expand an h-basis element in power sums (rational coefficients)."""
    if f.basis != "h":
        raise ValueError("expected an element in the h basis")

    def one(lam):
        out = SymElement("p", {(): 1})
        for part in lam:
            out = out * _h_single_in_p(part)
        return out

    return f.map_terms("p", one)


def _count_matrices(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """Non-negative integer matrices with the given row and column sums."""

    @lru_cache(maxsize=None)
    def fill(i: int, capacity: tuple[int, ...]) -> int:
        if i == len(rows):
            return 1 if not any(capacity) else 0
        total = 0
        for split in _splits(rows[i], capacity):
            total += fill(i + 1, tuple(c - s for c, s in zip(capacity, split)))
        return total

    return fill(0, cols)


def _splits(n: int, capacity: tuple[int, ...]):
    if not capacity:
        if n == 0:
            yield ()
        return
    for first in range(min(n, capacity[0]) + 1):
        for rest in _splits(n - first, capacity[1:]):
            yield (first,) + rest


def h_to_m(f: SymElement) -> SymElement:
    """Monomial expansion: [m_nu] h_mu counts matrices with row sums mu, column sums nu."""
    if f.basis != "h":
        raise ValueError("expected an element in the h basis")

    def one(mu):
        n = sum(mu)
        return SymElement("m", {nu: _count_matrices(tuple(mu), tuple(nu)) for nu in partitions_of(n)})

    return f.map_terms("m", one)
