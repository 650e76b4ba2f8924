import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("EGY_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("egy._kernels._core_cy", ["src/egy/_kernels/_core_cy.pyx"])],
            language_level=3,
        )
    except ImportError:
        # Pure-Python fallback kernels are always available; the compiled
        # core is an optional accelerator.
        ext_modules = []

setup(ext_modules=ext_modules)
