"""Rank competing setups by stochastic multi-dimensional relative efficiency."""

try:
    from ._effrank import *  # noqa: F401,F403
except ImportError:  # build-tree layout: extension sits next to the package
    from _effrank import *  # noqa: F401,F403
