"""Select the polynomial kernel backend at import time.

The compiled ``_kernels`` extension is used when it was built; otherwise the
pure-Python ``_kernels_py`` is used.  Setting ``HORADAM_GF_PURE=1`` forces the
pure-Python backend.
"""

import os

if os.environ.get("HORADAM_GF_PURE", "") not in ("", "0"):
    from . import _kernels_py as backend
else:
    try:
        from . import _kernels as backend
    except ImportError:
        from . import _kernels_py as backend

IMPL = backend.IMPL
NVARS = backend.NVARS
MAX_EXP = backend.MAX_EXP
pack = backend.pack
unpack = backend.unpack
add = backend.add
sub = backend.sub
scale = backend.scale
mul = backend.mul
mul_sub = backend.mul_sub
exact_div = backend.exact_div
series_div = backend.series_div
