"""Build hook for the optional compiled word kernel.

The package is fully functional without the extension: `coxrank.kernels`
falls back to the pure-Python twin when the import fails, so a missing
compiler or Cython only costs speed.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/coxrank/_kernel.pyx"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
