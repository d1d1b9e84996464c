from setuptools import setup, find_packages

setup(
    name="norquillo",
    packages=find_packages(),
    entry_points={"console_scripts": ["norquillo=norquillo.__main__:main"]},
)
