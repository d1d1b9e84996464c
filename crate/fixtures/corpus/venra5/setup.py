from setuptools import setup

setup(name="venra", packages=["venra"])
