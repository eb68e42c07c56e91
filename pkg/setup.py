import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the Cython kernel if possible; the package falls back to the
    pure-Python implementation when the extension is missing."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing etc.
            warnings.warn(f"skipping compiled kernel ({exc}); pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping {ext.name} ({exc}); pure-Python fallback will be used")


try:
    from pathlib import Path

    from Cython.Build import cythonize

    pyx = Path(__file__).parent / "src" / "tripower" / "_kernel.pyx"
    if pyx.exists():
        ext_modules = cythonize(
            [
                Extension(
                    "tripower._kernel",
                    ["src/tripower/_kernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    else:
        ext_modules = []
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
