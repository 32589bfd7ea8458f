from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "canonset._cdcl",
        ["src/canonset/_cdcl.pyx"],
        language="c++",
        extra_compile_args=["-O2", "-std=c++17"],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
