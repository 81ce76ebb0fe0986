"""Python bindings for the gdsdual C++ library."""

from ._gdsdual import *  # noqa: F401,F403
from ._gdsdual import __doc__  # noqa: F401

__version__ = "0.1.0"
