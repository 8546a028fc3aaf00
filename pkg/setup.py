import os
from setuptools import setup


def getPackages(base):
    packages = []

    for directory, _, files in os.walk(base):
        if '__init__.py' in files:
            packages.append(directory.replace(os.sep, '.'))

    return packages


setup(
    name='twistab',
    version='0.1.0',
    description='Exact combinatorics of weighted twisted stable maps to BG',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Framework :: Twisted'
    ],
    license='APL2',
    long_description=open('README.rst').read(),
    packages=getPackages('twistab'),
    install_requires=[
        'Twisted >= 18.0.0',
        'mock >= 2.0',
        'sympy >= 1.14',
        'networkx >= 2.5',
        'constantly >= 15.1'
    ],
    entry_points={
        'console_scripts': ['twistab = twistab.cli:main'],
    },
)
