"""Milnor numbers, Newton polygons and jumps of isolated plane singularities.

Polynomials are passed as text, e.g. ``"x^4+y^4+a*x^2*y^2"``; symbols other
than the variables must be declared with ``params=[...]``.
"""

from ._milnorkit import (
    MilnorError,
    colength,
    jump,
    milnor,
    milnor_report,
    newton,
    newton_number,
    nondegenerate,
    reduce,
    render_svg,
    search,
    suspend,
    verify_paper,
    versal_basis,
)

__version__ = "0.1.0"

__all__ = [
    "MilnorError",
    "colength",
    "jump",
    "milnor",
    "milnor_report",
    "newton",
    "newton_number",
    "nondegenerate",
    "reduce",
    "render_svg",
    "search",
    "suspend",
    "verify_paper",
    "versal_basis",
]
