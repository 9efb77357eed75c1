"""Spatial model checking over closure models and images.

Points are integer ids; point sets are sorted lists of ids. Formulas may be
passed as text or as parsed ``Formula`` objects.
"""

from ._slcs import (
    Error,
    Formula,
    Image,
    LoadError,
    Model,
    ParseError,
    SemanticError,
    UniverseMismatch,
    boundary,
    boundary_minus,
    boundary_plus,
    check,
    check_stats,
    closure,
    desugar,
    formula_size,
    image_to_model,
    interior,
    is_core,
    is_idempotent,
    load_model,
    minimal_neighbourhood,
    model_from_edges,
    parse,
    read_image,
    result_json,
    run_script,
    write_image,
)

__all__ = [
    "Error",
    "Formula",
    "Image",
    "LoadError",
    "Model",
    "ParseError",
    "SemanticError",
    "UniverseMismatch",
    "boundary",
    "boundary_minus",
    "boundary_plus",
    "check",
    "check_stats",
    "closure",
    "desugar",
    "formula_size",
    "image_to_model",
    "interior",
    "is_core",
    "is_idempotent",
    "load_model",
    "minimal_neighbourhood",
    "model_from_edges",
    "parse",
    "read_image",
    "result_json",
    "run_script",
    "write_image",
]
