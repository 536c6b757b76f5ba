#!/usr/bin/env python
# -*- coding: utf-8 -*-

import re

from setuptools import find_packages, setup

with open('abhomotopy/__init__.py', 'r', encoding='utf-8') as f:
    about = dict(re.findall(r"^__(\w+)__ = '([^']*)'", f.read(), re.MULTILINE))

with open('requirements.txt', 'r') as f:
    requirements = [line.strip() for line in f if line.strip() and line.strip() not in ('pytest', 'hypothesis')]

setup(
    name=about['title'],
    version=about['version'],
    description=about['description'],
    author=about['author'],
    license=about['license'],
    packages=find_packages(exclude=['tests']),
    py_modules=['main'],
    install_requires=requirements,
    extras_require={'test': ['pytest', 'hypothesis']},
    entry_points={'console_scripts': ['abhomotopy=main:main']},
    python_requires='>=3.7',
)
