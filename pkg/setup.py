import os

from setuptools import Extension, setup

# The compiled kernels are an optimization, not a requirement: if Cython is
# missing (or APLAND_SKIP_CYTHON is set) the package installs pure-Python and
# apland.kernels falls back at import time.
ext_modules = []
if not os.environ.get("APLAND_SKIP_CYTHON"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "apland.kernels._speedups",
                    ["src/apland/kernels/_speedups.pyx"],
                    # -ffp-contract=off: no FMA contraction, results must match
                    # the pure backend bit for bit.
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            language_level=3,
        )

setup(ext_modules=ext_modules)
