"""Select the polynomial kernel backend at import time.

The compiled extension is used when it was built; setting
``QHERMITE_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("QHERMITE_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = kernels.NAME
mul = kernels.mul
divexact = kernels.divexact
