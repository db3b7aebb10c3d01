"""Build script: compiles the optional Cython eigensolver kernel.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed compile downgrades to a warning instead of
aborting the install.
"""

import warnings

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "qesolver._core",
                ["src/qesolver/_core.pyx"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    warnings.warn(f"Cython kernel not built ({exc}); using pure-Python backend")

setup(ext_modules=ext_modules)
