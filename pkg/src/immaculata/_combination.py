"""Basis-tagged sparse linear combinations with exact coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Any, Iterable, Iterator, Mapping

from .compositions import format_index

Index = tuple[int, ...]


class LinearCombination:
    """Finite formal sum ``sum c_I B_I`` over one basis ``B``.

    Subclasses fix the admissible basis names (``BASES``), validate index
    keys (``_check_index``) and may define a product (``_product``).
    Instances are immutable; zero coefficients are never stored.
    """

    BASES: tuple[str, ...] = ()
    LATEX: Mapping[str, str] = {}

    __slots__ = ("_basis", "_terms", "_hash")

    def __init__(self, basis: str, terms: Mapping[Index, Any] | Iterable[tuple[Index, Any]] = ()):
        if basis not in self.BASES:
            raise ValueError(f"unknown basis {basis!r} for {type(self).__name__}; expected one of {self.BASES}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Index, Any] = {}
        for index, coeff in items:
            key = self._check_index(basis, tuple(index))
            acc[key] = acc.get(key, 0) + coeff
        self._basis = basis
        self._terms = MappingProxyType({k: _tidy(v) for k, v in sorted(acc.items()) if v != 0})
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, basis: str):
        return cls(basis)

    @classmethod
    def basis_element(cls, basis: str, index: Iterable[int]):
        return cls(basis, {tuple(index): 1})

    def _check_index(self, basis: str, index: Index) -> Index:
        return index

    def _new(self, terms):
        return type(self)(self._basis, terms)

    # mapping-like access

    @property
    def basis(self) -> str:
        return self._basis

    @property
    def terms(self) -> Mapping[Index, Any]:
        return self._terms

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[Index]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, index: Iterable[int]):
        return self._terms.get(tuple(index), 0)

    coefficient = __getitem__

    @property
    def degree(self) -> int | None:
        """Common size of all indices; None for a mixed-degree element."""
        sizes = {sum(k) for k in self._terms}
        if not sizes:
            return 0
        return sizes.pop() if len(sizes) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.degree is not None

    # arithmetic

    def _same(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other._basis != self._basis:
            raise ValueError(f"basis mismatch: {self._basis} vs {other._basis}")

    def __add__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        self._same(other)
        return self._new(list(self.items()) + list(other.items()))

    def __sub__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        self._same(other)
        return self._new(list(self.items()) + [(k, -v) for k, v in other.items()])

    def __neg__(self):
        return self._new({k: -v for k, v in self.items()})

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self._new({k: v * other for k, v in self.items()})
        if isinstance(other, LinearCombination):
            self._same(other)
            return self._product(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self._new({k: other * v for k, v in self.items()})
        return NotImplemented

    def _product(self, other):
        raise ValueError(f"no product defined in basis {self._basis}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return type(other) is type(self) and self._basis == other._basis and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, self._basis, tuple(self._terms.items())))
        return self._hash

    def map_terms(self, basis: str, fn) -> "LinearCombination":
        """Linear extension of ``fn(index) -> element in basis``."""
        acc: dict[Index, Any] = {}
        for index, c in self.items():
            image = fn(index)
            if image.basis != basis:
                raise ValueError(f"expected image in basis {basis}, got {image.basis}")
            for k, v in image.items():
                acc[k] = acc.get(k, 0) + c * v
        return type(self)(basis, acc)

    # rendering

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._basis!r}, {dict(self._terms)!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Render as ``H[2,3] - 2*H[3,2]``."""
        if not self._terms:
            return "0"
        pieces = []
        for index, c in self.items():
            mag = abs(c)
            body = f"{self._basis}[{format_index(index)}]"
            if mag != 1:
                body = f"{mag}*{body}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        symbol = self.LATEX.get(self._basis, self._basis)
        pieces = []
        for index, c in self.items():
            mag = abs(c)
            sub = ",".join(str(p) for p in index)
            if isinstance(mag, Fraction) and mag.denominator != 1:
                coeff = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            else:
                coeff = "" if mag == 1 else str(mag)
            body = f"{coeff}{symbol}_{{{sub}}}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def to_json_obj(self) -> dict:
        return {
            "basis": self._basis,
            "terms": [{"index": list(k), "coeff": str(v)} for k, v in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "LinearCombination":
        return cls(obj["basis"], [(tuple(t["index"]), _parse_coeff(t["coeff"])) for t in obj["terms"]])

    @classmethod
    def from_json(cls, text: str) -> "LinearCombination":
        return cls.from_json_obj(json.loads(text))


def _tidy(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def _parse_coeff(text: str):
    value = Fraction(text)
    return int(value) if value.denominator == 1 else value
