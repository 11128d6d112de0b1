from setuptools import setup, find_packages

setup(
    name='davenport-library',
    version='1.0.0',
    description='Small and large Davenport constants of finite groups',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests']),
    package_data={'davenport_library': ['data/*.json']},
    python_requires='>=3.8',
    install_requires=[
        'numpy',
        'sympy',
        'networkx',
        'tqdm',
    ],
    entry_points={
        'console_scripts': ['dav=davenport_library.cli:main'],
    },
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
    ],
)
