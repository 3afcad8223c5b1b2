#!/usr/bin/env python

"""
Install unruhcoh with pip:
    pip install .

For developers:
    cd ./unruhcoh
    pip install -e .[tests]
    pytest tests
"""

import re
from setuptools import setup

# parse version from init.py
with open("unruhcoh/__init__.py") as init:
    CUR_VERSION = re.search(
        r"^__version__ = ['\"]([^'\"]*)['\"]",
        init.read(),
        re.M,
    ).group(1)

# setup installation
setup(
    name="unruhcoh",
    packages=[
        "unruhcoh",
        "unruhcoh.fock",
        "unruhcoh.states",
        "unruhcoh.coherence",
        "unruhcoh.analytic",
        "unruhcoh.sweeps",
    ],
    version=CUR_VERSION,
    install_requires=[
        "numpy",
        "scipy",
        "pandas",
        "typer",
        "loguru",
    ],
    extras_require={
        "tests": ["pytest", "hypothesis"],
    },
    entry_points={
        'console_scripts': ['unruhcoh = unruhcoh.__main__:app']},
    license='GPL',
    classifiers=[
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
    ],
)
