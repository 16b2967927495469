"""Noncommutative symmetric functions.

Elements live in one of four bases: complete homogeneous ``H``, ribbon
``R``, noncommutative power sums ``Psi`` and immaculate ``S``.  ``H``
multiplies by concatenating indices.  Immaculate functions are built by
noncommutative Bernstein operators and may be indexed by arbitrary integer
tuples; every other basis is indexed by compositions.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from . import tableaux
from ._combination import Index, LinearCombination
from .compositions import Composition, coarsenings, is_partition, pieri_successors


class NSymElement(LinearCombination):
    BASES = ("H", "R", "Psi", "S")
    LATEX = {"H": "H", "R": "R", "Psi": r"\Psi", "S": r"\mathfrak{S}"}

    __slots__ = ()

    def _check_index(self, basis, index):
        if basis == "S":
            return tuple(int(x) for x in index)
        return Composition(index)

    def _product(self, other):
        if self.basis != "H":
            raise ValueError(f"products are computed in the H basis, not {self.basis}")
        return h_multiply(self, other)

    def is_composition_indexed(self) -> bool:
        return all(x > 0 for index in self for x in index)


def H(*index: int) -> NSymElement:
    return NSymElement.basis_element("H", index)


def R(*index: int) -> NSymElement:
    return NSymElement.basis_element("R", index)


def Psi(*index: int) -> NSymElement:
    return NSymElement.basis_element("Psi", index)


def S(*index: int) -> NSymElement:
    return NSymElement.basis_element("S", index)


ONE = H()


def normalize_h_index(entries: Iterable[int]) -> Composition | None:
    """Apply H_0 = 1 and H_{-r} = 0 to an integer tuple.

    Zero entries are deleted; any negative entry kills the term (None).
    """
    out = []
    for x in entries:
        if x < 0:
            return None
        if x:
            out.append(x)
    return Composition(out)


def _h_from(pairs: Iterable[tuple[Sequence[int], int]]) -> NSymElement:
    acc: dict[Index, int] = {}
    for entries, c in pairs:
        key = normalize_h_index(entries)
        if key is not None:
            acc[key] = acc.get(key, 0) + c
    return NSymElement("H", acc)


def _require(f: NSymElement, basis: str) -> None:
    if not isinstance(f, NSymElement) or f.basis != basis:
        raise ValueError(f"expected an NSym element in basis {basis}")


def h_multiply(a: NSymElement, b: NSymElement) -> NSymElement:
    _require(a, "H")
    _require(b, "H")
    acc: dict[Index, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            acc[i + j] = acc.get(i + j, 0) + x * y
    return NSymElement("H", acc)


# ribbons

def ribbon_to_h(alpha: Sequence[int]) -> NSymElement:
    """R_alpha as the signed sum of H_beta over coarsenings beta of alpha."""
    alpha = Composition(alpha)
    return NSymElement("H", {b: (-1) ** (len(alpha) - len(b)) for b in coarsenings(alpha)})


def h_to_ribbon(alpha: Sequence[int]) -> NSymElement:
    return NSymElement("R", {b: 1 for b in coarsenings(Composition(alpha))})


# power sums

@lru_cache(maxsize=None)
def _psi_single(k: int) -> NSymElement:
    # k H_k = sum_{j=0}^{k-1} H_j Psi_{k-j}
    out = NSymElement("H", {(k,): k})
    for j in range(1, k):
        out = out - h_multiply(H(j), _psi_single(k - j))
    return out


def psi_to_h(k: int | Sequence[int]) -> NSymElement:
    """Psi_k in the H basis; a composition gives the product Psi_{a1} Psi_{a2} ..."""
    if isinstance(k, int):
        if k < 1:
            raise ValueError("Psi_k needs k >= 1")
        return _psi_single(k)
    out = ONE
    for part in Composition(k):
        out = h_multiply(out, _psi_single(part))
    return out


# perp operators and Bernstein operators

def _perp_on_index(gamma: Index, beta: Index) -> Iterable[tuple[int, ...]]:
    k = len(gamma)
    for positions in combinations(range(len(beta)), k):
        if all(beta[j] >= g for j, g in zip(positions, gamma)):
            rest = list(beta)
            for j, g in zip(positions, gamma):
                rest[j] -= g
            yield tuple(rest)


def monomial_perp(gamma: Sequence[int], f: NSymElement) -> NSymElement:
    """M_gamma^perp acting on ``f`` (H basis).

    Removes the parts of gamma from an increasing choice of positions of
    each index, dropping parts that become zero.
    """
    _require(f, "H")
    gamma = tuple(Composition(gamma))
    if not gamma:
        return f
    return _h_from((rest, c) for beta, c in f.items() for rest in _perp_on_index(gamma, beta))


def bernstein_apply(m: int, f: NSymElement) -> NSymElement:
    """B_m f = sum_i (-1)^i H_{m+i} (F_{1^i})^perp f, for f in the H basis."""
    _require(f, "H")
    top = max((sum(k) for k in f), default=0)
    pairs = []
    for i in range(top + 1):
        if m + i < 0:
            continue
        lowered = monomial_perp((1,) * i, f)
        sign = -1 if i % 2 else 1
        for beta, c in lowered.items():
            pairs.append(((m + i,) + beta, sign * c))
    return _h_from(pairs)


@lru_cache(maxsize=None)
def _immaculate_to_h(alpha: tuple[int, ...]) -> NSymElement:
    if not alpha:
        return ONE
    return bernstein_apply(alpha[0], _immaculate_to_h(alpha[1:]))


def immaculate_to_h(alpha: Sequence[int]) -> NSymElement:
    """S_alpha = B_{a1} B_{a2} ... B_{am}(1) for any integer tuple alpha."""
    return _immaculate_to_h(tuple(int(x) for x in alpha))


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def jacobi_trudi_h(alpha: Sequence[int]) -> NSymElement:
    """Noncommutative Jacobi-Trudi expansion: sum over sigma of
    sign(sigma) H_{alpha_1+sigma_1-1, ..., alpha_m+sigma_m-m}."""
    alpha = Composition(alpha)
    m = len(alpha)
    pairs = []
    for perm in permutations(range(1, m + 1)):
        pairs.append((tuple(a + s - i for i, (a, s) in enumerate(zip(alpha, perm), 1)), _sign(perm)))
    return _h_from(pairs)


# immaculate expansions

def h_to_immaculate(beta: Sequence[int]) -> NSymElement:
    """H_beta = sum_alpha K_{alpha,beta} S_alpha, from immaculate tableau counts."""
    beta = Composition(beta)
    return NSymElement("S", tableaux.kostka_by_shape(beta))


def ribbon_to_immaculate(beta: Sequence[int]) -> NSymElement:
    """R_beta = sum_alpha L_{alpha,beta} S_alpha."""
    beta = Composition(beta)
    table = tableaux.descent_table(sum(beta))
    return NSymElement("S", {shape: c for (shape, d), c in table.items() if d == beta})


def h_to_s(f: NSymElement) -> NSymElement:
    """Rewrite an H-basis element in the immaculate basis."""
    _require(f, "H")
    return f.map_terms("S", h_to_immaculate)


def normalize_immaculate(f: NSymElement) -> NSymElement:
    """Re-express an S element with integer-tuple indices over compositions."""
    _require(f, "S")
    if f.is_composition_indexed():
        return f
    return h_to_s(f.map_terms("H", immaculate_to_h))


# product rules

def pieri_multiply(alpha: Sequence[int], s: int) -> NSymElement:
    """S_alpha H_s as the multiplicity-free sum over alpha ⊂_s beta."""
    return NSymElement("S", {beta: 1 for beta in pieri_successors(Composition(alpha), s)})


def lr_multiply(alpha: Sequence[int], lam: Sequence[int]) -> NSymElement:
    """S_alpha S_lam for a partition lam, via Yamanouchi skew tableaux."""
    if not is_partition(tuple(lam)):
        raise ValueError(f"{list(lam)} is not a partition")
    return NSymElement("S", tableaux.lr_coefficients(Composition(alpha), lam))


def mn_multiply(alpha: Sequence[int], k: int, normalize: bool = False) -> NSymElement:
    """S_alpha Psi_k: add k to one part of alpha padded with k zeros.

    Without ``normalize`` the result keeps zero-padded indices.
    """
    alpha = tuple(Composition(alpha))
    if k < 1:
        raise ValueError("k must be positive")
    indices = [alpha[:j] + (alpha[j] + k,) + alpha[j + 1:] for j in range(len(alpha))]
    indices += [alpha + (0,) * j + (k,) for j in range(k)]
    out = NSymElement("S", [(index, 1) for index in indices])
    return normalize_immaculate(out) if normalize else out


# basis changes

def _to_h(f: NSymElement) -> NSymElement:
    if f.basis == "H":
        return f
    if f.basis == "R":
        return f.map_terms("H", ribbon_to_h)
    if f.basis == "Psi":
        return f.map_terms("H", psi_to_h)
    return f.map_terms("H", immaculate_to_h)


def change_basis(f: NSymElement, target: str) -> NSymElement:
    """Convert between H, R, Psi and S, routing through H.

    Nothing converts into Psi except Psi itself.
    """
    if target not in NSymElement.BASES:
        raise ValueError(f"no conversion path to unknown basis {target!r}")
    if f.basis == target:
        return f
    if target == "Psi":
        raise ValueError(f"no conversion path from {f.basis} to Psi")
    h = _to_h(f)
    if target == "H":
        return h
    if target == "R":
        return h.map_terms("R", h_to_ribbon)
    return h_to_s(h)
