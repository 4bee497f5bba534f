import numpy
from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [
            Extension(
                "zetalab._kernels",
                ["src/zetalab/_kernels.pyx"],
                extra_compile_args=["-O3", "-ffast-math", "-fopenmp"],
                extra_link_args=["-fopenmp"],
                include_dirs=[numpy.get_include()],
            )
        ],
        language_level=3,
    )
)
