from setuptools import setup

setup(name="vonorvo", packages=["vonorvo"])
