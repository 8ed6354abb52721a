#!/usr/bin/env python

from setuptools import find_packages
from setuptools import setup

requirements = ["numpy", "yacs", "tqdm"]

setup(
    name="probclone",
    version="0.1",
    description="Probabilistic cloning machines for linearly independent pure states",
    packages=find_packages(exclude=("configs", "tests",)),
    install_requires=requirements,
    extras_require={"test": ["pytest>=7"]},
    entry_points={
        "console_scripts": ["probclone=probclone.engine.commands:main"],
    },
    python_requires=">=3.7",
)
