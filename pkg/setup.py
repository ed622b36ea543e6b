# Copyright 2026 The pylsa authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http: //www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND,
# either express or implied. See the License for the specific
# language governing permissions and limitations under the License.

import os
import codecs
from setuptools import setup, find_packages

source_location = os.path.abspath(os.path.dirname(__file__))


def get_version():
    with open(os.path.join(source_location, "VERSION")) as version:
        return version.readline().strip()


def get_long_description():
    with codecs.open(os.path.join(source_location, "README.rst"), 'r', 'utf-8') as readme:
        return readme.read()

setup(
    name="pylsa",
    version=get_version(),
    license="Apache License Version 2.0",
    description="Learning static analysis rules for MiniJS from examples",
    include_package_data=True,
    package_data={"pylsa": ["corpus/*/*.mini"]},
    long_description=get_long_description(),
    packages=find_packages(exclude=("tests", "tests.*",)),
    install_requires=[
        "numpy>=1.17",
    ],
    entry_points={
        "console_scripts": [
            "pylsa = pylsa.cli:main",
        ],
    },
    python_requires=">=3.7",
    zip_safe=False,
    classifiers=[  # http://pypi.python.org/pypi?%3Aaction=list_classifiers
        'Development Status :: 4 - Beta',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Software Development :: Compilers',
        'Topic :: Software Development :: Quality Assurance',
    ]
)
