"""Builds the optional compiled kernel; package metadata lives in pyproject.toml.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed compile only costs speed.
"""

import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None and os.path.exists("src/graphsplice/_kernels/_speed.pyx"):
    extensions = cythonize(
        [
            Extension(
                "graphsplice._kernels._speed",
                ["src/graphsplice/_kernels/_speed.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    extensions = []

setup(ext_modules=extensions)
