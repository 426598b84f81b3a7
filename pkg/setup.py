"""Build script: compiles the optional Cython kernel module.

The package works without the compiled extension (a pure-Python twin of the
kernels is selected at import time), so a failed extension build only costs
speed.  Set WEYLOPS_NO_EXT=1 to skip the extension entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("WEYLOPS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/weylops/_kernels_cy.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
