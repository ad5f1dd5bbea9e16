from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    # optional=True: a missing GMP toolchain degrades to the pure-Python backend
    ext = Extension(
        "fedscore._modmath",
        ["src/fedscore/_modmath.pyx"],
        libraries=["gmp"],
        optional=True,
    )
    ext_modules = cythonize([ext], language_level=3)

setup(ext_modules=ext_modules)
