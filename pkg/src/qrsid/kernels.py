"""Select the compiled kernels when available, else the pure-Python ones.

Set ``QRSID_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("QRSID_PURE_PYTHON", "") not in ("", "0"):
    from ._pykernels import div_binomial, inv_unit, mul_binomial, mul_trunc
else:
    try:
        from ._ckernels import div_binomial, inv_unit, mul_binomial, mul_trunc

        BACKEND = "cython"
    except ImportError:
        from ._pykernels import div_binomial, inv_unit, mul_binomial, mul_trunc

__all__ = ["BACKEND", "div_binomial", "inv_unit", "mul_binomial", "mul_trunc"]
