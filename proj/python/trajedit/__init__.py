"""Trajectory editing, residual supervision, failure detection and the
peg-in-hole correction loop (python bindings over the C++ core)."""

from ._core import *  # noqa: F401,F403
