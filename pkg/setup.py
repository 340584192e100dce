import os

from setuptools import Extension, setup

# CACTUSDOODLE_PURE=1 skips the compiled kernel; the package then runs
# on the pure Python fallback selected in cactusdoodle._kernel.
ext_modules = []
if not os.environ.get("CACTUSDOODLE_PURE"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("cactusdoodle._canon", ["src/cactusdoodle/_canon.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
