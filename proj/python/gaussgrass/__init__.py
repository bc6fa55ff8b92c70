"""Exact expanding/shrinking maps and Gauss-map diagnostics for families of
planes in projective space, over QQ or GF(p).

The heavy lifting lives in the compiled extension; families are passed as the
same text format the ``gauss-grass`` CLI reads.
"""

try:
    from ._gaussgrass import *  # noqa: F401,F403  (installed package layout)
    from ._gaussgrass import __doc__ as _core_doc  # noqa: F401
except ImportError:  # build-tree layout: extension on PYTHONPATH
    from _gaussgrass import *  # noqa: F401,F403

__all__ = [
    "parse_family",
    "expand",
    "shrink",
    "gauss",
    "dual",
    "conormal",
    "analyze",
    "curve",
    "iterate",
    "maxdev",
    "subst",
    "MathError",
    "InputError",
]
