"""Build the optional Cython kernels. If compilation fails the package
still installs and falls back to the pure-Python kernels at import."""
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as e:  # no compiler, no Cython, ...
            print(f"warning: skipping compiled kernels ({e})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as e:
            print(f"warning: failed to build {ext.name} ({e})", file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension
    ext = Extension(
        "monomialx._ckernels",
        ["src/monomialx/_ckernels.pyx"],
        language="c++",
        extra_compile_args=["-O2"],
    )
    return cythonize([ext], language_level=3, quiet=True)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
