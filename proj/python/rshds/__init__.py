"""Constructions and certificates for relative skew Hadamard difference sets."""

import json

from ._core import (
    BudgetExceeded,
    PreconditionError,
    construct,
    group_order,
    hadamard_matrix,
    m_bound,
    multiply,
    parameter_formulas,
    search,
    hyperplane_matching,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "PreconditionError",
    "certify",
    "construct",
    "group_order",
    "hadamard_matrix",
    "m_bound",
    "multiply",
    "parameter_formulas",
    "screen",
    "search",
    "hyperplane_matching",
]


def certify(spec, elements, subgroup="distinguished", checks=()):
    """Run certificates; returns a list of report dicts in fixed check order."""
    return json.loads(_core.certify_json(spec, list(elements), subgroup, list(checks)))


def screen(spec, h, subgroup=""):
    """Structural tests T1-T4 as a report dict."""
    return json.loads(_core.screen_json(spec, h, subgroup))
