from setuptools import setup, find_packages

setup(
    name="miven",
    packages=find_packages(),
    entry_points={"console_scripts": ["miven=miven.run:main"]},
)
