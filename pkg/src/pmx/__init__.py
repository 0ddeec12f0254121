"""Voltage operations on premaniplexes.

Submodules: ``racg`` (monodromy words), ``premaniplex`` (graphs),
``symmetry`` (automorphisms and quotients), ``voltage`` (operators and
products), ``catalog`` (named operators and samples), ``io`` and ``cli``.
"""

from .premaniplex import MapSpec, Premaniplex, RootedPremaniplex, flag_graph_from_map, validate
from .racg import GroupWord, normalize
from .voltage import (
    FinVoltagePremaniplex,
    VoltageOperator,
    apply,
    compose,
    derived_graph,
    mix,
    validate_operator,
)

__all__ = [
    "FinVoltagePremaniplex",
    "GroupWord",
    "MapSpec",
    "Premaniplex",
    "RootedPremaniplex",
    "VoltageOperator",
    "apply",
    "compose",
    "derived_graph",
    "flag_graph_from_map",
    "mix",
    "normalize",
    "validate",
    "validate_operator",
]

__version__ = "0.1.0"
