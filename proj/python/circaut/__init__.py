"""Automorphisms of circulant (di)graphs that respect generator partitions."""

from ._circaut import *  # noqa: F401,F403
from ._circaut import __doc__  # noqa: F401
