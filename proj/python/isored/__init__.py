"""Isospectral reductions of weighted digraphs.

Weights are rational functions in lambda with Gaussian-rational
coefficients. Graphs are built from (from, to, weight) triples or read from
the JSON format used by the ``isored`` command-line tool.

>>> import isored
>>> g = isored.Graph(["a", "b"], [("a", "b", 1), ("b", "a", "2")])
>>> str(isored.reduce(g, ["a"]).weight("a", "a"))
'2/l'
"""

from ._isored import (
    Graph,
    InputError,
    IsoredError,
    PreconditionError,
    Weight,
    bas,
    bas_equivalent,
    char_det,
    expand,
    forbidden_set,
    format_weight,
    in_g_pi,
    is_structural_set,
    isomorphism,
    laplacian,
    parse_weight,
    reduce,
    reduce_sequence,
    reduce_to,
    scc,
    scc_filter,
    spectrum,
    verify,
    weightset,
)

__all__ = [
    "Graph",
    "InputError",
    "IsoredError",
    "PreconditionError",
    "Weight",
    "bas",
    "bas_equivalent",
    "char_det",
    "expand",
    "forbidden_set",
    "format_weight",
    "in_g_pi",
    "is_structural_set",
    "isomorphism",
    "laplacian",
    "parse_weight",
    "reduce",
    "reduce_sequence",
    "reduce_to",
    "scc",
    "scc_filter",
    "spectrum",
    "verify",
    "weightset",
]
__version__ = "0.1.0"
