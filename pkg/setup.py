"""Build script for the optional compiled kernels.

The package works without the extension (pure-Python fallback), so a
missing compiler or Cython only produces a warning.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "okplanar._speedups",
                ["src/okplanar/_speedups.pyx"],
                include_dirs=[np.get_include()],
            )
        ],
        language_level=3,
    )
except ImportError:  # pragma: no cover - build-time only
    print("warning: Cython/numpy unavailable, building pure-Python package")

setup(ext_modules=ext_modules)
