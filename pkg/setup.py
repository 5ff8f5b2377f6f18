from Cython.Build import cythonize
from setuptools import Extension, setup

setup(
    ext_modules=cythonize(
        [Extension("qcongr._kernel", ["src/qcongr/_kernel.pyx"])],
        language_level=3,
    )
)
