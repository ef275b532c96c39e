import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/reflarr/_speedups.pyx"],
        compiler_directives={"language_level": 3},
    )
except Exception as exc:  # pure-Python fallback is always available
    print(f"reflarr: building without compiled kernel ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
