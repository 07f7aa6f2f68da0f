import os

from setuptools import setup

# The compiled kernel is an optional speedup: if Cython or a C compiler is
# missing the package installs pure-Python and selects the fallback at import.
ext_modules = []
if os.environ.get("COEXSIM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "coexsim._kernels",
                    ["src/coexsim/_kernels.pyx"],
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
