"""Python setup script for rookpy"""

from setuptools import setup

VERSION='0.1.0'

setup (
    name='rookpy',
    version=VERSION,
    description='Triplet arithmetic for the single-diagonal rook monoid M_n',
    keywords=[ 'semigroup', 'rook monoid', 'inverse semigroup', 'nilpotent' ],
    classifiers=[
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.6',
    packages=['rookpy'],
    install_requires=['numpy'],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': [
            'rooktool=rookpy.rooktool:main',
        ]
    }
)
