"""Quasi-symmetric functions and the pairing with NSym.

Bases: monomial ``M``, fundamental ``F`` and dual immaculate ``Sstar``.
Only ``M`` carries a product (the quasi-shuffle); ``Sstar`` elements are
converted to ``M`` or ``F`` on demand.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from . import nsym, sym, tableaux
from ._combination import Index, LinearCombination
from .compositions import Composition, Partition, compositions_of, rearrangements, refinements


class QSymElement(LinearCombination):
    BASES = ("M", "F", "Sstar")
    LATEX = {"M": "M", "F": "F", "Sstar": r"\mathfrak{S}^*"}

    __slots__ = ()

    def _check_index(self, basis, index):
        return Composition(index)

    def _product(self, other):
        if self.basis != "M":
            raise ValueError(f"products are computed in the M basis, not {self.basis}")
        acc: dict[Index, int] = {}
        for a, x in self.items():
            for b, y in other.items():
                for k, v in quasi_shuffle(a, b).items():
                    acc[k] = acc.get(k, 0) + x * y * v
        return QSymElement("M", acc)


def M(*index: int) -> QSymElement:
    return QSymElement.basis_element("M", index)


def F(*index: int) -> QSymElement:
    return QSymElement.basis_element("F", index)


def Sstar(*index: int) -> QSymElement:
    return QSymElement.basis_element("Sstar", index)


@lru_cache(maxsize=None)
def _quasi_shuffle(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[Index, int], ...]:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict[Index, int] = {}
    for head, rest_a, rest_b in ((a[0], a[1:], b), (b[0], a, b[1:]), (a[0] + b[0], a[1:], b[1:])):
        for word, c in _quasi_shuffle(rest_a, rest_b):
            key = (head,) + word
            acc[key] = acc.get(key, 0) + c
    return tuple(sorted(acc.items()))


def quasi_shuffle(alpha: Sequence[int], beta: Sequence[int]) -> QSymElement:
    """M_alpha M_beta: interleavings of the parts, where one part of each
    may merge into their sum."""
    return QSymElement("M", dict(_quasi_shuffle(tuple(Composition(alpha)), tuple(Composition(beta)))))


def fundamental_to_monomial(alpha: Sequence[int]) -> QSymElement:
    return QSymElement("M", {b: 1 for b in refinements(Composition(alpha))})


def monomial_to_fundamental(alpha: Sequence[int]) -> QSymElement:
    alpha = Composition(alpha)
    return QSymElement("F", {b: (-1) ** (len(b) - len(alpha)) for b in refinements(alpha)})


@lru_cache(maxsize=None)
def _dual_immaculate_to_monomial(alpha: tuple[int, ...]) -> QSymElement:
    return QSymElement("M", {b: tableaux.kostka_immaculate(alpha, b) for b in compositions_of(sum(alpha))})


def dual_immaculate_to_monomial(alpha: Sequence[int]) -> QSymElement:
    """Sstar_alpha = sum_beta K_{alpha,beta} M_beta."""
    return _dual_immaculate_to_monomial(tuple(Composition(alpha)))


def dual_immaculate_to_fundamental(alpha: Sequence[int]) -> QSymElement:
    """Sstar_alpha = sum_beta L_{alpha,beta} F_beta."""
    alpha = Composition(alpha)
    acc: dict[Index, int] = {}
    for t in tableaux.standard_immaculate_tableaux(alpha):
        d = tableaux.descent_composition(t)
        acc[d] = acc.get(d, 0) + 1
    return QSymElement("F", acc)


def monomial_to_dual_immaculate(g: QSymElement) -> QSymElement:
    """Back-substitution against the unitriangular monomial expansion.

    The lexicographically largest index of ``Sstar_alpha`` in ``M`` is
    ``alpha`` itself with coefficient 1.
    """
    if g.basis != "M":
        raise ValueError("expected an element in the M basis")
    remaining = dict(g.items())
    out: dict[Index, int] = {}
    while remaining:
        top = max(remaining)
        c = remaining[top]
        out[top] = c
        for k, v in dual_immaculate_to_monomial(top).items():
            left = remaining.get(k, 0) - c * v
            if left:
                remaining[k] = left
            else:
                remaining.pop(k, None)
    return QSymElement("Sstar", out)


def change_basis(g: QSymElement, target: str) -> QSymElement:
    if target not in QSymElement.BASES:
        raise ValueError(f"no conversion path to unknown basis {target!r}")
    if g.basis == target:
        return g
    if g.basis == "Sstar" and target == "F":
        return g.map_terms("F", dual_immaculate_to_fundamental)
    if g.basis == "M":
        m = g
    elif g.basis == "F":
        m = g.map_terms("M", fundamental_to_monomial)
    else:
        m = g.map_terms("M", dual_immaculate_to_monomial)
    if target == "M":
        return m
    if target == "F":
        return m.map_terms("F", monomial_to_fundamental)
    return monomial_to_dual_immaculate(m)


def pairing(f: "nsym.NSymElement", g: QSymElement, route: str = "HM") -> int:
    """<f, g> with <H_a, M_b> = delta (route "HM") or <R_a, F_b> = delta ("RF")."""
    if route == "HM":
        left, right = nsym.change_basis(f, "H"), change_basis(g, "M")
    elif route == "RF":
        left, right = nsym.change_basis(f, "R"), change_basis(g, "F")
    else:
        raise ValueError(f"unknown pairing route {route!r}")
    return sum(c * right[k] for k, c in left.items())


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def schur_permutations(lam: Sequence[int]) -> list[tuple[int, ...]]:
    """Permutations sigma (1-based) with lam_{sigma_i} + i - sigma_i > 0 for all i.

    Positions are filled left to right and infeasible prefixes are cut.
    """
    k = len(lam)
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], unused: frozenset[int]) -> None:
        i = len(prefix) + 1
        if i > k:
            out.append(prefix)
            return
        for s in sorted(unused):
            if lam[s - 1] + i - s > 0:
                extend(prefix + (s,), unused - {s})

    extend((), frozenset(range(1, k + 1)))
    return out


def schur_to_dual_immaculate(lam: Sequence[int]) -> QSymElement:
    """s_lam = sum_sigma sign(sigma) Sstar_{(lam_{sigma_i} + i - sigma_i)_i}."""
    lam = Partition(lam)
    acc: dict[Index, int] = {}
    for perm in schur_permutations(lam):
        index = tuple(lam[s - 1] + i - s for i, s in enumerate(perm, 1))
        acc[index] = acc.get(index, 0) + _sign(perm)
    return QSymElement("Sstar", acc)


def monomial_symmetric_embed(lam: Sequence[int]) -> QSymElement:
    """m_lam = sum of M_alpha over the distinct rearrangements alpha of lam."""
    return QSymElement("M", {a: 1 for a in rearrangements(Partition(lam))})


def embed_symmetric(f: "sym.SymElement") -> QSymElement:
    """Include Sym in QSym: s goes to Sstar by the signed sum above, m and h go to M."""
    if f.basis == "s":
        return _linear(f, "Sstar", schur_to_dual_immaculate)
    if f.basis == "h":
        f = sym.h_to_m(f)
    if f.basis != "m":
        raise ValueError(f"no conversion path from Sym basis {f.basis} to QSym")
    return _linear(f, "M", monomial_symmetric_embed)


def _linear(f, basis, fn) -> QSymElement:
    acc: dict[Index, int] = {}
    for index, c in f.items():
        for k, v in fn(index).items():
            acc[k] = acc.get(k, 0) + c * v
    return QSymElement(basis, acc)
