"""Vandermonde b-functions - exact b-functions of braid and Coxeter arrangements."""

__version__ = "1.0.0"

from .cache import BFunctionCache, CacheFormatError
from .config import Config
from .coxeter import CoxeterDatum, UnknownCoxeterTypeError, budur_check, degrees, opdam_bg
from .engine import BFunctionEngine, BFunctionReport
from .factored import FactoredBPoly, affine_substitute, divides, is_symmetric_about, lcm, product
from .invariants import InvariantSuite, run_invariant_suite
from .lemmas import LemmaVerifier, verify_all
from .partitions import IntegerPartition, SetPartition, integer_partitions, set_partitions
from .sympoly import PolyMatrix, SymbolAlgebra
from .weyl_oracle import BernsteinOracle, OracleResult, WeylOperator, verify_conjecture_small

__all__ = [
    'BFunctionCache',
    'CacheFormatError',
    'Config',
    'CoxeterDatum',
    'UnknownCoxeterTypeError',
    'budur_check',
    'degrees',
    'opdam_bg',
    'BFunctionEngine',
    'BFunctionReport',
    'FactoredBPoly',
    'affine_substitute',
    'divides',
    'is_symmetric_about',
    'lcm',
    'product',
    'InvariantSuite',
    'run_invariant_suite',
    'LemmaVerifier',
    'verify_all',
    'IntegerPartition',
    'SetPartition',
    'integer_partitions',
    'set_partitions',
    'PolyMatrix',
    'SymbolAlgebra',
    'BernsteinOracle',
    'OracleResult',
    'WeylOperator',
    'verify_conjecture_small',
]
