"""Rees algebras, Hasse-derivative Diff-closures, singular loci, and
integral-closure probes over exact fields."""

from ._core import (
    Algebra,
    AlgebraFileError,
    Poly,
    PolyParseError,
    Ring,
    equal_closure_probe,
    main_theorem_check,
    parse_algebra_file,
)

__all__ = [
    "Algebra",
    "AlgebraFileError",
    "Poly",
    "PolyParseError",
    "Ring",
    "equal_closure_probe",
    "main_theorem_check",
    "parse_algebra_file",
]
