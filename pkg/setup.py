"""Builds the optional compiled quadrature core.

If Cython (or a C compiler) is unavailable the build proceeds without the
extension; the package then runs on the pure-NumPy fallback selected at
import time.
"""

from setuptools import setup

try:
    import numpy as np
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/wigbarrier/_core.pyx",
        compiler_directives={"language_level": "3"},
    )
    include_dirs = [np.get_include()]
except ImportError:
    ext_modules = []
    include_dirs = []

setup(ext_modules=ext_modules, include_dirs=include_dirs)
