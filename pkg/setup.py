#!/usr/bin/env python3
"""
UniRat Setup Script
Installs the approximation library and the unirat command
"""

from setuptools import find_packages, setup


def read_requirements(path='requirements.txt'):
    with open(path, encoding='utf-8') as f:
        lines = (line.split('#')[0].strip() for line in f)
        return [line for line in lines if line and not line.startswith(('pytest',))]


setup(
    name='unirat',
    version='1.0.0',
    description='Unitary best and Chebyshev rational approximation to exp(i*omega*x) on [-1, 1]',
    packages=find_packages(include=['approximation', 'analysis', 'cli']),
    python_requires='>=3.9',
    install_requires=read_requirements(),
    extras_require={'test': ['pytest>=7.0.0', 'pytest-cov>=4.0.0']},
    entry_points={'console_scripts': ['unirat=cli.main:main']},
)
