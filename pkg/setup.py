"""Build shim: compiles the optional Cython kernel when possible.

Set HOPFTWIST_NO_EXT=1 to skip compilation; the package then runs on the
pure-Python kernel. Cython is only needed at build time.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("HOPFTWIST_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hopftwist/_kernel/_ckernel.pyx"],
            language_level=3,
        )
    except Exception:
        # no Cython available: fall back to the pure kernel silently
        ext_modules = []

setup(ext_modules=ext_modules)
