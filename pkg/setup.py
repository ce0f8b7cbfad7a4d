"""Build script: compile the optional speedup extension, fall back to pure Python."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/catschett/_speedups.pyx",
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "language_level": "3",
        },
    )
except Exception as exc:  # no Cython or no compiler: pure-Python install still works
    print(f"skipping compiled speedups ({exc}); using pure-Python kernels")

setup(ext_modules=ext_modules)
