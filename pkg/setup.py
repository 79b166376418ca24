from setuptools import setup, find_packages

with open('README.md') as f:
    readme = f.read()

with open('requirements.txt') as f:
    required = f.read().splitlines()

setup(
    name='parapy',
    version='0.1.0',
    description='Parabose Python -- exact covariant Green ansatz for osp(1|2n)',
    long_description=readme,
    packages=find_packages(exclude=('tests', 'docs', 'examples')),
    install_requires=required,
    entry_points={'console_scripts': ['parapy=parapy.cli:main']}
)
