"""Build the optional compiled skein kernel.

If Cython or a C compiler is missing the package still installs and the
pure-Python kernel is used.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("BMW_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("bmwskein._skein", ["src/bmwskein/_skein.pyx"], extra_compile_args=["-O3"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
