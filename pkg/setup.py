"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a NumPy fallback with
identical numerical semantics is selected at import), so a failed compile
downgrades to a warning instead of aborting the install.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError


class OptionalBuildExt(build_ext):
    """Build the extension if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            warnings.warn(f"compiled kernels unavailable, using pure-Python fallback: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            warnings.warn(f"compiled kernels unavailable, using pure-Python fallback: {exc}")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not installed; building without compiled kernels")
        return []
    from setuptools.extension import Extension

    ext = Extension(
        "monotonia._kernels",
        sources=["src/monotonia/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
