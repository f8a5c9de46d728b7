#!/usr/bin/env python
# -*- coding: utf-8 -*-

import sys
from setuptools import setup, find_packages

# To prevent importing about and thereby breaking the coverage info we use this
# exec hack
about = {}
with open('lptsp/__about__.py') as fp:
    exec(fp.read(), about)


install_requires = [
    'numpy>=1.17',
    'networkx>=2.6',
]

tests_require = [
    'pyyaml',
    'pytest',
    'pytest-cov',
    'pytest-flake8',
    'flake8',
]

docs_require = [
    'sphinx>=1.7.2',
]


if sys.argv[-1] == 'info':
    for k, v in about.items():
        print('%s: %s' % (k, v))
    sys.exit()

if __name__ == '__main__':
    with open('README.rst') as fh:
        readme = fh.read()

    with open('docs/history.rst') as fh:
        # skip the label and title, keep the release notes
        history = fh.read().split('=======\n', 2)[-1]

    setup(
        name=about['__package_name__'],
        version=about['__version__'],
        author=about['__author__'],
        author_email=about['__email__'],
        description=about['__description__'],
        url=about['__url__'],
        license=about['__license__'],
        keywords='L(p)-labeling, L(2,1)-labeling, TSP, Held-Karp, Christofides',
        packages=find_packages(exclude=['docs', 'lptsp_tests']),
        long_description=readme + '\n\nChangelog\n---------\n' + history,
        long_description_content_type='text/x-rst',
        include_package_data=True,
        install_requires=install_requires,
        tests_require=tests_require,
        python_requires='>=3.7',
        zip_safe=False,
        entry_points={
            'console_scripts': [
                'lptsp = lptsp.cli:main',
            ],
        },
        extras_require={
            'docs': docs_require,
            'tests': tests_require,
        },
        classifiers=[
            'Development Status :: 4 - Beta',
            'Environment :: Console',
            'Intended Audience :: Science/Research',
            'License :: OSI Approved :: BSD License',
            'Natural Language :: English',
            'Programming Language :: Python :: 3',
            'Programming Language :: Python :: 3.7',
            'Programming Language :: Python :: 3.8',
            'Programming Language :: Python :: 3.9',
            'Programming Language :: Python :: 3.10',
            'Topic :: Scientific/Engineering :: Mathematics',
        ],
    )
