from setuptools import setup, find_packages

setup(
    name="norsil",
    packages=find_packages(),
    entry_points={"console_scripts": ["norsil=main:main"]},
)
