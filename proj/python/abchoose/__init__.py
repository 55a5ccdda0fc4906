"""Exact b-fold list coloring: solver, gadgets, certificates.

Everything is implemented in the C++ core and exposed through the
`_abchoose` extension module; this package just re-exports it.
"""

from ._abchoose import *  # noqa: F401,F403
from ._abchoose import __doc__ as _core_doc  # noqa: F401

__version__ = "1.0.0"
