from setuptools import setup

setup(name="lovo", packages=["lovo"])
