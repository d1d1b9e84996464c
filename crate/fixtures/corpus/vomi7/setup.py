from setuptools import setup, find_packages

setup(
    name="vomi",
    packages=find_packages(),
    entry_points={"console_scripts": ["vomi=vomi.__main__:main"]},
)
