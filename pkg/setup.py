"""Build script: compiles the Monte Carlo fading kernel when Cython is available.

The package works without the extension (a numpy fallback is selected at
import time), so any build failure here is non-fatal.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("AOI_UAV_SIM_PUREPY") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "aoi_uav_sim._mc_ext",
                    ["src/aoi_uav_sim/_mc_ext.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "initializedcheck": False,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
