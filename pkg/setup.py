"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python kernel with the
same API is selected at import time), so a failed compile is not fatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/transferideals/_kernel_cy.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"transferideals: skipping Cython kernel build ({exc})")

setup(ext_modules=ext_modules)
