"""Build script for the optional compiled Jacobi kernel.

The package is pure Python except for ``lambda_cdp._jacobi``, which is
generated from ``_jacobi.pyx`` when Cython and a C toolchain are available.
Set LAMBDA_CDP_NO_EXTENSION=1 to skip the extension entirely; the library
then selects the pure-Python kernel at import time.
"""

import os

from setuptools import Extension, setup


def extension_modules():
    if os.environ.get("LAMBDA_CDP_NO_EXTENSION") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "lambda_cdp._jacobi",
        ["src/lambda_cdp/_jacobi.pyx"],
        # -ffp-contract=off keeps the compiled arithmetic identical to the
        # pure-Python kernel (no FMA contraction), so the two backends agree
        # bit for bit on most platforms.
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extension_modules())
