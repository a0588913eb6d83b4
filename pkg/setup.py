#!/usr/bin/env python
#
# Copyright (C) 2026 The mnesordb developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
"""Setup script for mnesordb.

"""

from setuptools import setup

long_description = """
The "mnesordb" python module implements bitrops and mnesor spaces over small,
finite models.  Union, intersection and selection of keyed tables are
expressed as the operations of a mnesor space, and a checker tests the
algebraic properties of each model exhaustively (or on a seeded random
sample), reporting counterexamples for any which fail.

A command line tool, "mnesordb", evaluates queries over CSV tables, lists the
absorption witnesses for a pair of tables, and runs the checker.

"""

setup(name = "mnesordb",
      version = "0.1.0", # update this in mnesordb/__init__.py, too.
      author = "The mnesordb developers",
      description = "Bitrops, mnesor spaces and set operations on keyed tables",
      long_description = long_description,
      classifiers = [
          'Development Status :: 3 - Alpha',
          'Intended Audience :: Developers',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: MIT License',
          'Programming Language :: Python :: 3',
          'Topic :: Database',
          'Topic :: Scientific/Engineering :: Mathematics',
          'Operating System :: OS Independent',
      ],
      license = 'MIT',
      platforms = 'Any',

      packages = ['mnesordb', 'mnesordb.unittests'],
      package_dir = {'mnesordb': 'mnesordb'},
      package_data = {
          'mnesordb': ['doctests/*.txt'],
          'mnesordb.unittests': ['testdata/*.csv'],
      },
      python_requires = '>=3.7',
      extras_require = {
          'test': ['hypothesis'],
          'docs': ['docutils'],
      },
      entry_points = {
          'console_scripts': [
              'mnesordb = mnesordb.cli:run_from_commandline',
          ],
      },
      test_suite = "test.make_all_suite",
      )
