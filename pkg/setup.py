"""Build script.

The compiled kernel extension is optional: if Cython (or a C compiler) is
unavailable the package installs anyway and falls back to the numpy
implementations in blrings._kernels_py at import time.
"""
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("blrings._kernels_c", ["src/blrings/_kernels_c.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-env dependent
    print(f"blrings: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
