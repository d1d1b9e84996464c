from setuptools import setup, find_packages

setup(
    name="larch",
    version="0.3.0",
    packages=find_packages(exclude=["tests"]),
    entry_points={"console_scripts": ["larch=larch.cli:main"]},
)
