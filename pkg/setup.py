from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # build without the extension; the pure-Python kernels take over
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("fpure_lab._kernels", ["src/fpure_lab/_kernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
