"""Build script for the optional compiled kernel extension.

The package works without the extension (a numpy fallback is selected at
import time), so the extension is marked optional: a missing compiler or
Cython downgrades the install to the fallback instead of failing it.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "likelabel._kernels",
        ["src/likelabel/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        optional=True,
    )
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
