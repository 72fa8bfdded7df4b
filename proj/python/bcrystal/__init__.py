"""Branched crystals for quantized sl2 category O.

Thin bindings over the C++ core: elements and expressions travel as text
("V(3):b2", "T(2):b(1) (x) V(1):b0"), decompositions come back as dicts.
"""

from ._core import (
    ParseError,
    WindowExhausted,
    above_branch_point,
    character,
    check_axioms,
    decompose,
    dual,
    e_step,
    enumerate_elements,
    epsilon,
    f_step,
    graph_dot,
    head_of,
    is_branch_point,
    module_tensor,
    oracle_decompose,
    phi,
    psi,
    rules,
    verify,
    weight,
)

__all__ = [
    "ParseError",
    "WindowExhausted",
    "above_branch_point",
    "character",
    "check_axioms",
    "decompose",
    "dual",
    "e_step",
    "enumerate_elements",
    "epsilon",
    "f_step",
    "graph_dot",
    "head_of",
    "is_branch_point",
    "module_tensor",
    "oracle_decompose",
    "phi",
    "psi",
    "rules",
    "verify",
    "weight",
]
