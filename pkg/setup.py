#!/usr/bin/env python3
"""
Setup script for ksetlab - k-sets and concave chains in exact arithmetic
"""

from setuptools import setup, find_packages

setup(
    name="ksetlab",
    version="0.1.0",
    description="k-sets, dual line arrangements, k-levels and concave chains in exact rational arithmetic",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.8",
    install_requires=[
        "zencfg>=0.1.0",
        "jinja2>=3.1.0",
    ],
    extras_require={
        "test": ["pytest", "pytest-cov", "hypothesis", "beautifulsoup4"],
    },
    entry_points={
        "console_scripts": [
            "ksetlab=ksetlab.cli:cli",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords=["computational-geometry", "k-sets", "arrangements", "duality", "zencfg"],
)
