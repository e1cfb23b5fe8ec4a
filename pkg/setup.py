import os

from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure-Python
# implementations in coclusteval._kernels.pure when the extension is absent.
# Set COCLUSTEVAL_NO_EXT=1 to skip building it entirely.
ext_modules = []
if os.environ.get("COCLUSTEVAL_NO_EXT") != "1":
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "coclusteval._kernels._native",
                ["src/coclusteval/_kernels/_native.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
