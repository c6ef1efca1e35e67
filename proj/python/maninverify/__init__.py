"""Verification engine for multiparameter Manin matrix identities.

The compiled extension carries the actual engine; this package re-exports
its surface: parameter `Session`s with the epsilon/mu sign calculus and
quantum minors, plus `run_suites` over the full identity catalogue.
"""

try:  # installed wheel: extension lives inside the package
    from ._maninverify import (
        GuardExceeded,
        MathError,
        Session,
        catalogue,
        default_prime,
        run_suites,
    )
except ImportError:  # build tree: extension on PYTHONPATH
    from _maninverify import (
        GuardExceeded,
        MathError,
        Session,
        catalogue,
        default_prime,
        run_suites,
    )

__all__ = [
    "Session",
    "catalogue",
    "run_suites",
    "default_prime",
    "MathError",
    "GuardExceeded",
]
