"""Exact computations in Birman-Murakami-Wenzl, Hecke and Brauer algebras."""

from .coeff import RingElem, Specialization, loop_value, qint, specialize, ybracket
from .young import Partition, StdTableau, UpDownTableau, parse_partition, parse_path
from .tangle import KERNEL, TangleWord, close_trace, enumerate_basis, parse_word
from .bmw import AlgElem
from .hecke import HeckeElem, young_idem
from .idem import MatrixUnitDB, feasibility, matrix_units, qdim, qdim_wenzl, section, ytilde
from .brauer import integer_trace_check, phi

__version__ = "0.1.0"

__all__ = [
    "RingElem",
    "Specialization",
    "loop_value",
    "qint",
    "specialize",
    "ybracket",
    "Partition",
    "StdTableau",
    "UpDownTableau",
    "parse_partition",
    "parse_path",
    "KERNEL",
    "TangleWord",
    "close_trace",
    "enumerate_basis",
    "parse_word",
    "AlgElem",
    "HeckeElem",
    "young_idem",
    "MatrixUnitDB",
    "feasibility",
    "matrix_units",
    "qdim",
    "qdim_wenzl",
    "section",
    "ytilde",
    "integer_trace_check",
    "phi",
]
