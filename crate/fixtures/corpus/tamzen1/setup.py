from setuptools import setup, find_packages

setup(
    name="tamzen",
    packages=find_packages(),
    entry_points={"console_scripts": ["tamzen=tamzen.run:main"]},
)
