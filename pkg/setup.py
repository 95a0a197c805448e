"""Build the optional Cython kernels; the package falls back to pure Python without them."""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("RHOCALC_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("rhocalc._ckernels", ["src/rhocalc/_ckernels.pyx"])],
            compiler_directives={"language_level": 3},
        )

setup(ext_modules=ext_modules)
