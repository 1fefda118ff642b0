from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "covertroute._core",
    sources=[
        "src/scenario.cpp",
        "src/covertness.cpp",
        "src/allocation.cpp",
        "src/routing.cpp",
        "src/sweep.cpp",
        "src/verify.cpp",
        "src/python/module.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
