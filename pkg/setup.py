"""Build script: compiles the Cython numeric core when possible.

The extension is marked optional; if Cython or a C compiler is missing the
package installs anyway and falls back to the pure-numpy kernels at import
time (see airylab._kernels).
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "airylab._kernels._core",
        sources=["src/airylab/_kernels/_core.pyx"],
        extra_compile_args=["-O3"],
    )
    ext.optional = True
    ext_modules = cythonize([ext], language_level=3)
except ImportError:
    pass

setup(ext_modules=ext_modules)
