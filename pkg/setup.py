"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a pure-Python twin
of every kernel lives in besselquad._kernels.pykernels and is selected at
import time when the compiled module is missing).  Set
BESSELQUAD_PURE_PYTHON=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("BESSELQUAD_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "besselquad._kernels._ckernels",
                    ["src/besselquad/_kernels/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
