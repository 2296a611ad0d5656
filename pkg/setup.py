"""Build the optional Cython enumeration kernel.

The package works without it; ``uudd.kernels`` falls back to the pure-Python
implementation when the compiled module is missing.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("UUDD_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("uudd._kernels", ["src/uudd/_kernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3",
                                 "boundscheck": False,
                                 "wraparound": False},
        )

setup(ext_modules=ext_modules)
