"""Build the _fusionrank extension through CMake.

The extension target lives in the top-level CMakeLists.txt; this shim
configures a CMake build tree inside setuptools' temp directory, builds
only the Python module, and copies the resulting library to wherever
setuptools expects the extension.
"""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        source_dir = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                f"-DPython3_EXECUTABLE={sys.executable}",
                "-DCMAKE_BUILD_TYPE=Release",
                "-DFUSIONRANK_BUILD_CLI=OFF",
                "-DFUSIONRANK_BUILD_TESTS=OFF",
                "-DFUSIONRANK_BUILD_PYTHON=ON",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_fusionrank"],
            check=True,
        )

        built = sorted((build_dir / "python" / "fusionrank").glob("_fusionrank.*"))
        if not built:
            raise RuntimeError("CMake did not produce the _fusionrank extension")
        target = Path(self.get_ext_fullpath(ext.name))
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[-1], target)


setup(
    ext_modules=[CMakeExtension("fusionrank._fusionrank")],
    cmdclass={"build_ext": CMakeBuild},
)
