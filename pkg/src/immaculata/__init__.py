"""Immaculate basis of the noncommutative symmetric functions, its dual
basis in the quasi-symmetric functions, and the rules relating them to
classical bases."""

from .compositions import Composition, Partition, compositions_of, partitions_of
from .nsym import NSymElement, change_basis, immaculate_to_h, jacobi_trudi_h
from .qsym import QSymElement, pairing
from .sym import SymElement, forgetful, schur_to_h
from .tableaux import ImmaculateTableau, SkewImmaculateTableau, SkewShape

__all__ = [
    "Composition",
    "ImmaculateTableau",
    "NSymElement",
    "Partition",
    "QSymElement",
    "SkewImmaculateTableau",
    "SkewShape",
    "SymElement",
    "change_basis",
    "compositions_of",
    "forgetful",
    "immaculate_to_h",
    "jacobi_trudi_h",
    "pairing",
    "partitions_of",
    "schur_to_h",
]

__version__ = "0.1.0"
