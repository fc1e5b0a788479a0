# Builds the optional compiled kernel core. The package works without it
# (a NumPy fallback is selected at import), so a failed extension build is
# not fatal for development; `pip install -e . --no-build-isolation` will
# compile it when Cython and a C compiler are present.

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "bevdistill.kernels._native",
                ["src/bevdistill/kernels/_native.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
else:
    extensions = []

setup(ext_modules=extensions)
