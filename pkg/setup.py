#!/usr/bin/env python3
# threearc - setup.py
# Revision: 1.0.0

from setuptools import setup, find_packages

setup(
    name="threearc",
    version="1.0.0",
    description="Certified Hamilton cycles and paths in 3-arc graphs",
    author="ThinGuy",
    author_email="your.email@example.com",
    url="https://github.com/ThinGuy/threearc",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    include_package_data=True,
    install_requires=[
        "networkx>=2.6",
        "pyyaml",
    ],
    extras_require={
        "test": ["pytest"],
    },
    entry_points={
        "console_scripts": [
            "threearc=threearc.main:main",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
)
