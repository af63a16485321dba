"""Build script: compiles the simulation kernels to a C extension.

The kernels live in ``src/affinelab/_kernels.py`` (Cython "pure Python"
style).  At build time that file is copied to ``_kernels_cy.py`` and
cythonized, so the package carries both a compiled core and an importable
pure-Python fallback with identical semantics.  If no C compiler is
available the build degrades to the fallback instead of failing.

Compiler flags: no fast-math and no FP contraction, so the compiled core
stays bit-identical to the interpreted module.
"""

import shutil
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"warning: compiled kernels unavailable ({exc}); "
                  f"using the pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"warning: failed to build {ext.name} ({exc}); "
                  f"using the pure-Python backend")


def make_extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - Cython is a build requirement
        return []
    here = Path(__file__).resolve().parent
    src = here / "src" / "affinelab" / "_kernels.py"
    dst = src.with_name("_kernels_cy.py")
    shutil.copyfile(src, dst)
    ext = Extension(
        "affinelab._kernels_cy",
        [str(dst.relative_to(here))],
        extra_compile_args=["-O2", "-ffp-contract=off"],
    )
    return cythonize(
        [ext],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )


setup(ext_modules=make_extensions(), cmdclass={"build_ext": OptionalBuildExt})
