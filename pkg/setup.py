"""Build script for the optional compiled correlation kernel.

The extension accelerates the exhaustive pair scan; the package works
without it (an FFT-based fallback is selected at import). Compilation is
attempted with OpenMP first, then without, and a failed build downgrades
to a pure-Python install instead of failing.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            print(f"warning: skipping compiled kernel ({exc}); using the FFT fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception:
            if "-fopenmp" not in ext.extra_compile_args:
                raise
            print("warning: OpenMP unavailable, rebuilding the kernel single-threaded")
            ext.extra_compile_args = [a for a in ext.extra_compile_args if a != "-fopenmp"]
            ext.extra_link_args = [a for a in ext.extra_link_args if a != "-fopenmp"]
            super().build_extension(ext)


def extensions():
    if cythonize is None or os.environ.get("SEQFAM_NO_EXT"):
        return []
    ext = Extension(
        "seqfam._corrkernel",
        sources=["src/seqfam/_corrkernel.pyx"],
        extra_compile_args=["-O3", "-fopenmp"],
        extra_link_args=["-fopenmp"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
