"""Build script: compiles the normal-ordering kernel when Cython is available.

Without Cython (or a C compiler) the package still installs and uses the
pure-Python kernel.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(["src/xyangian/_rewrite.pyx"], language_level=3, quiet=True)
except ImportError:
    pass


try:
    from setuptools.command.build_ext import build_ext

    class OptionalBuildExt(build_ext):
        """Skip the extension instead of failing when it cannot be compiled."""

        def run(self):
            try:
                super().run()
            except Exception as exc:
                print("warning: compiled kernel not built (%s); using the pure-Python kernel" % exc)

        def build_extension(self, ext):
            try:
                super().build_extension(ext)
            except Exception as exc:
                print("warning: could not build %s (%s)" % (ext.name, exc))

    cmdclass = {"build_ext": OptionalBuildExt}
except ImportError:
    cmdclass = {}

setup(ext_modules=ext_modules, cmdclass=cmdclass)
