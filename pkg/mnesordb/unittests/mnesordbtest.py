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
r"""mnesordbtest.py: Framework for mnesordb unittests.

Unittests should just start with "from .mnesordbtest import *", which will
provide a convenient environment for writing tests of mnesordb features.

"""
__docformat__ = "restructuredtext en"

import io
import os
import shutil
import sys
import tempfile
import unittest

# Ensure that mnesordb is on the path, when run uninstalled.
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '../..'))
import mnesordb
from mnesordb import relalg
from mnesordb import cli

class TestCase(unittest.TestCase):
    """Base class of mnesordb unittests.

    """
    def setUp(self):
        """Set up environment for a unittest.

        This should not normally be implemented in subclasses - instead,
        implement the pre_test() method, which is called by this method after
        performing the standard test setup process.

        """
        self.tempdir = tempfile.mkdtemp()
        self.datadir = os.path.join(os.path.dirname(__file__), 'testdata')
        self.pre_test()

    def tearDown(self):
        """Clean up after a unittest.

        This should not normally be implemented in subclasses - instead,
        implement the post_test() method, which is called by this method before
        performing the standard cleanup process.

        """
        self.post_test()
        shutil.rmtree(self.tempdir)

    def pre_test(self):
        """Prepare for a test.  This is called before a test is started, but
        after the standard setup process.

        This is intended to be overridden by subclasses when special setup is
        required for a test.

        """
        pass

    def post_test(self):
        """Cleanup after a test.  This is called after a test finishes, but
        before the standard cleanup process.

        This is intended to be overridden by subclasses when special cleanup is
        required for a test.

        """
        pass

    def datafile(self, filename):
        """Get the path of a fixture file.

        """
        return os.path.join(self.datadir, filename)

    def tempfile(self, filename, contents):
        """Write a file in the temporary directory, returning its path.

        """
        path = os.path.join(self.tempdir, filename)
        with io.open(path, 'w', encoding='utf-8', newline='') as fd:
            fd.write(contents)
        return path

    def membership(self):
        """Load the fixture membership file.

        """
        return relalg.load_membership(self.datafile('membership.csv'))

    def fixture_table(self, env, name):
        """Load one of the fixture tables.

        """
        return relalg.load_table(self.datafile(name + '.csv'), env)

    def run_cli(self, *argv):
        """Run the command line interface.

        Returns a tuple (exit status, stdout text, stderr text).

        """
        stdout = io.StringIO()
        stderr = io.StringIO()
        status = cli.main(list(argv), stdout=stdout, stderr=stderr)
        return status, stdout.getvalue(), stderr.getvalue()


main = unittest.main
