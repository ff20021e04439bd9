from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        ["src/horadam_gf/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
