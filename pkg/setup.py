"""Build the optional compiled kernel extension.

The package works without it (a pure-Python kernel module is selected at
import time), so a failed extension build only costs speed. Set
RECTDEL_SKIP_EXT=1 to skip the extension on purpose.
"""

import os
import sys

from setuptools import setup

ext_modules = []
if os.environ.get("RECTDEL_SKIP_EXT") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "rectdel.kernels._fast",
                    sources=["src/rectdel/kernels/_fast.pyx"],
                    include_dirs=[np.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "language_level": "3",
            },
        )
    except Exception as exc:  # pragma: no cover - build environment dependent
        sys.stderr.write(f"rectdel: skipping compiled kernels ({exc})\n")
        ext_modules = []

setup(ext_modules=ext_modules)
