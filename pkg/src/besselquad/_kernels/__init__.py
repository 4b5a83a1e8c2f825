"""Backend selection for the hot evaluation kernels.

The compiled Cython module is preferred when it has been built; the
pure-Python twin is the fallback.  ``BESSELQUAD_BACKEND=python`` forces
the fallback, ``BESSELQUAD_BACKEND=compiled`` makes a missing extension
a hard error (useful in CI and benchmarks).
"""

import os

from . import pykernels

_requested = os.environ.get("BESSELQUAD_BACKEND", "").strip().lower()

if _requested == "python":
    impl = pykernels
else:
    try:
        from . import _ckernels as impl
    except ImportError:
        if _requested == "compiled":
            raise
        impl = pykernels

BACKEND = impl.BACKEND_NAME

series_batch_into = impl.series_batch_into
comp_sum = impl.comp_sum
