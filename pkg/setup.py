"""Build hook for the optional compiled kernels.

The extension is an accelerator only: if Cython or a C compiler is
missing, or the compile fails, the install completes with the
pure-Python backend and the package stays fully functional.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print("compiled kernels skipped (%s); using the pure-Python backend"
              % exc)


def extensions():
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    return cythonize(
        [Extension("nonbond._kernels._speedups",
                   ["src/nonbond/_kernels/_speedups.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
