from setuptools import setup, find_packages

with open("requirements.txt") as f:
    install_requires = f.read().splitlines()

with open("requirements_test.txt") as f:
    tests_require = f.read().splitlines()

setup(
    name="fano-lines",                    # package name
    version="0.1.0",                      # initial version
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    install_requires=install_requires,    # runtime dependencies from requirements.txt
    extras_require={"test": tests_require},
    description="Exact counts of lines on generic hypersurfaces and complete intersections",
    python_requires=">=3.10",             # int.bit_count
)
