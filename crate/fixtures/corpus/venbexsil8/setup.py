from setuptools import setup, find_packages

setup(
    name="venbexsil",
    packages=find_packages(),
    entry_points={"console_scripts": ["venbexsil=venbexsil.main:main"]},
)
