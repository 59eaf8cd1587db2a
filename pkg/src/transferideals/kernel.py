"""Selects the compiled kernel when available, else the pure-Python one.

Set TIL_PURE_PYTHON=1 to force the fallback (used by the benchmark and
by tests that compare the two implementations).
"""

import os

if os.environ.get("TIL_PURE_PYTHON"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

KERNEL_NAME = _impl.KERNEL_NAME
exp_add = _impl.exp_add
exp_sub = _impl.exp_sub
exp_divides = _impl.exp_divides
exp_lcm = _impl.exp_lcm
exp_deg = _impl.exp_deg
grevlex_key = _impl.grevlex_key
addmul_terms = _impl.addmul_terms
