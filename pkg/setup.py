from setuptools import setup, find_packages

setup(
    name="two-photon-tc",
    version="0.1",
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=[
        'numpy>=1.21.0',
        'scipy>=1.6.0',
        'pandas>=1.5.0',
        'pyyaml>=5.4.0',
        'python-dotenv>=0.19.0',
    ],
    entry_points={
        'console_scripts': [
            'tc-entangle=cavity.cli:main',
        ],
    },
)
