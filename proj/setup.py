# Builds the pybind11 extension by delegating to the repository's CMake
# tree, then places the module where setuptools expects it. Keeps pip
# installs (editable included) in sync with the plain CMake build.

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DSIZERAMSEY_BUILD_TESTS=OFF",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "-j"],
            check=True,
        )

        # pybind11_add_module drops the library under <build>/python/sizeramsey.
        staged = sorted((build_dir / "python" / "sizeramsey").glob("_core.*"))
        if not staged:
            raise RuntimeError("CMake build produced no _core module")
        target = Path(self.get_ext_fullpath(ext.name))
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(staged[0], target)


setup(
    packages=["sizeramsey"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("sizeramsey._core")],
    cmdclass={"build_ext": CMakeBuild},
)
