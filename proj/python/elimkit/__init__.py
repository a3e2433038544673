"""Exact elimination toolkit: resultants, discriminants, reduced variants.

Thin wrapper around the compiled _elimkit module. Polynomials are passed as
strings in the x0, x1, ... grammar and rationals come back as "p/q" strings.
"""

try:
    from ._elimkit import (
        ComputationError,
        PreconditionError,
        discriminant,
        enumerative_table,
        parse_roundtrip,
        project,
        reduced_discriminant,
        reduced_resultant,
        resultant,
        run_suite,
        salmon_check,
        suite_names,
    )
except ImportError:  # build-tree layout: the module sits next to the package
    from _elimkit import (
        ComputationError,
        PreconditionError,
        discriminant,
        enumerative_table,
        parse_roundtrip,
        project,
        reduced_discriminant,
        reduced_resultant,
        resultant,
        run_suite,
        salmon_check,
        suite_names,
    )

__version__ = "0.1.0"

__all__ = [
    "ComputationError",
    "PreconditionError",
    "discriminant",
    "enumerative_table",
    "parse_roundtrip",
    "project",
    "reduced_discriminant",
    "reduced_resultant",
    "resultant",
    "run_suite",
    "salmon_check",
    "suite_names",
    "__version__",
]
