from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "coxblock._core",
    sources=[
        "bindings/module.cpp",
        "src/combinatorics.cpp",
        "src/grothendieck.cpp",
        "src/jacquet_langlands.cpp",
        "src/weil_deligne.cpp",
        "src/cohomology.cpp",
        "src/ext_spectral.cpp",
        "src/arithmetic.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
