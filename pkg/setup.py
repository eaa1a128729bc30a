from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python fallback backend is selected at import time, so a build
    # without Cython still yields a working package.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("triodot._core", ["src/triodot/_core.pyx"])],
        language_level="3",
    )

setup(ext_modules=ext_modules)
