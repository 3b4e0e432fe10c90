"""Incidence algebras of finite preorders over finite rings."""

import json

from ._incalg import (
    Algebra,
    ConnectivityError,
    Function,
    GuardExceeded,
    IncompatibleError,
    InputError,
    NonUnitError,
    ParseError,
    Preorder,
    Ring,
    SupportError,
    WeightSystem,
    connected_posets,
    convolve,
    enumerate_inner,
    enumerate_mult,
    generate_preorders,
    hadamard,
    invert,
    run,
    verify_structure_json,
)


def verify_structure(preorder, ring):
    """Structure report for all weight systems on the instance, as a dict."""
    return json.loads(verify_structure_json(preorder, ring))


__all__ = [
    "Algebra",
    "ConnectivityError",
    "Function",
    "GuardExceeded",
    "IncompatibleError",
    "InputError",
    "NonUnitError",
    "ParseError",
    "Preorder",
    "Ring",
    "SupportError",
    "WeightSystem",
    "connected_posets",
    "convolve",
    "enumerate_inner",
    "enumerate_mult",
    "generate_preorders",
    "hadamard",
    "invert",
    "run",
    "verify_structure",
]
