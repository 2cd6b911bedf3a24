#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Standard library
from setuptools import setup, find_packages


# List of packages
pkgs = find_packages(exclude=["test", "test.*"])
pkgs.remove("tiler.clidoc")

# Create the build
setup(
    name="tiler",
    packages=pkgs,
    install_requires=[
        "PyYAML",
        "numpy",
    ],
    extras_require={
        "test": [
            "pytest",
            "pytest-cov",
        ],
    },
    description="Edge-matched periodic, Penrose, and fractal tilings",
    entry_points={
        "console_scripts": [
            "tiler=tiler.cli:main",
        ]
    },
    version="1.0.0")
