from setuptools import Extension, setup

import numpy

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "motionsimp._kernels._ckernels",
                ["src/motionsimp/_kernels/_ckernels.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ]
    )
except ImportError:
    # Pure-Python fallback kernels are selected at import time, so the
    # package stays installable without a compiler toolchain.
    extensions = []

setup(ext_modules=extensions)
