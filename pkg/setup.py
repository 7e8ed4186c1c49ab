"""Build script for the optional compiled recurrence kernels.

The package works without the extension: ``smilansky.kernels`` falls back to
pure-Python loops when the compiled module is absent (``optional=True`` keeps
a failed compile from aborting the install).
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "smilansky.kernels._cyloops",
                ["src/smilansky/kernels/_cyloops.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
