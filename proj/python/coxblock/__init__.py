"""Exact combinatorics of the unipotent block of GL_d under the Coxeter congruence.

The native module exposes the subset calculus (descents, partitions, the
degree function), Grothendieck-group classes and the decomposition matrix,
the effective transfer, Weil-Deligne string objects, the bigraded cohomology
model with its Lefschetz data and verifier, Ext/Euler bookkeeping, and the
(q, ell, d) parameter checks.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _native_doc  # noqa: F401

__version__ = "0.1.0"
