"""Exact-arithmetic toolkit for stratifying systems induced by tau-rigid modules.

The heavy lifting happens in the C++ extension ``stratkit._core``; this
package re-exports its entry points.  Reports come back as plain dicts
mirroring the JSON emitted by the command-line tool.
"""

from stratkit._core import (
    __version__,
    algebra_check,
    module_check,
    selftest,
    selftest_text,
    smith,
    stratify,
    tau,
)

__all__ = [
    "__version__",
    "algebra_check",
    "module_check",
    "selftest",
    "selftest_text",
    "smith",
    "stratify",
    "tau",
]
