"""Build script: compiles the optional relation-kernel extension.

The package is pure Python apart from dponiche._kernel, a small Cython
module accelerating the hot adjacency-derivation loop.  If Cython or a C
compiler is unavailable the build falls back to the pure-Python kernel
(dponiche._kernel_py) selected at import time.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible; warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping C extension build ({exc}); "
                  "the pure-Python kernel will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); "
                  "the pure-Python kernel will be used")


ext_modules = []
cmdclass = {}
if not os.environ.get("DPONICHE_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("dponiche._kernel", ["src/dponiche/_kernel.pyx"])],
            language_level=3,
        )
        cmdclass = {"build_ext": OptionalBuildExt}
    except ImportError:
        print("warning: Cython not available; building without the C kernel")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
