from setuptools import setup
import sys

assert sys.version_info.major == 3 and sys.version_info.minor >= 7, \
    "asm3 is designed to work with Python 3.7 and greater. " \
    + "Please install it before proceeding."

setup(
    name='asm3',
    packages=['asm3', 'asm3.core', 'utils'],
    version="0.0.1",
    install_requires=[
        'numpy',
        'sympy',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': ['asm3=asm3.cli:main'],
    },
    description="Exact 3-enumerated refined alternating sign matrix counts",
)
