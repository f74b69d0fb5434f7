"""Exact solver for spinor field equations with torsion and flux forms.

The heavy lifting happens in the compiled extension; this package re-exports
its operations.
"""

from ._core import (  # noqa: F401
    __version__,
    conventions,
    rref,
    run_scenario,
    solve,
    verify,
)

__all__ = ["run_scenario", "verify", "conventions", "rref", "solve", "__version__"]
