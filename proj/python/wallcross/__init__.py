"""Exact motivic invariants of rank-2 Bradlow-Higgs moduli spaces."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
