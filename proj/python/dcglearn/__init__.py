"""DCG utility learning toolkit.

Thin wrapper around the compiled core: ranking encodings, coherency checks,
preference fitting, rank-one factorization and the simulation harness.
"""

try:
    from ._dcglearn import *  # noqa: F401,F403
    from ._dcglearn import __doc__ as _core_doc  # noqa: F401
except ImportError:  # running against a bare build tree
    from _dcglearn import *  # noqa: F401,F403
