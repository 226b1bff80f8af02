from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core_sources = sorted(p for p in glob("src/*.cpp") if not p.endswith("cli_main.cpp"))

setup(
    ext_modules=[
        Pybind11Extension(
            "infchar._core",
            sources=core_sources + ["bindings/module.cpp"],
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
