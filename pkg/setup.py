import setuptools

import symrmt

tests_require = [
    "flake8 >=3.4.1, <4.0",
    "hypothesis >=3.66.0, <4.0.0",
    "mypy >= 0.610",
]

install_requires = [
    "numpy >=1.17, <2.0",
    "sympy >=1.5, <2.0",
    "tabulate >= 0.8",
]

setuptools.setup(
    name="symrmt",
    version=symrmt.__version__,
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    entry_points={"console_scripts": ["symrmt = symrmt.__main__:main"]},
    author="Nathaniel Knight",
    author_email="nknight@cfenet.ubc.ca",
    description=(
        "Exact trace, Schur and characteristic-polynomial moments of "
        "unitary random matrix ensembles"
    ),
    license="Apache2",
    python_requires=">=3.8,<4",
    test_suite="tests",
    install_requires=install_requires,
    extras_require={"tests": tests_require},
)
