"""
 Setup tools configuration for installing this package
"""
from setuptools import setup, find_packages

setup(
    name='tarski_search',
    version='0.1',
    description='Query-model experiments for Tarski fixed point search on '
    'the k-dimensional grid',
    license='MIT',
    packages=find_packages(exclude=['tests']),
    python_requires='>=3.9',
    install_requires=['numpy', 'tqdm'],
    extras_require={'test': ['pytest', 'hypothesis']},
    entry_points={
        'console_scripts': ['tarski-search=tarski_search.cli:main'],
    },
)
