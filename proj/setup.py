from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "fairdiv._fairdiv",
    sources=[
        "python/bindings.cpp",
        "src/valuation.cpp",
        "src/instance.cpp",
        "src/partition.cpp",
        "src/fairness.cpp",
        "src/search.cpp",
        "src/algorithms.cpp",
        "src/json_io.cpp",
        "src/oracle.cpp",
        "src/harness.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(
    name="fairdiv",
    version="0.1.0",
    description="Exact fair-division toolkit: partition solvers, fairness "
    "checkers, allocation algorithms",
    packages=["fairdiv"],
    package_dir={"": "python"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
    python_requires=">=3.9",
)
