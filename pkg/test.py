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
r"""test.py: Run a set of tests with doctest and unittest.

The list of modules to test is specified at the top of the file, in the
MODNAMES variable.

Other files containing documentation to be tested is listed in the OTHER_FILES
variable.

A subset of the modules can be tested by specifying a list of module names on
the command line.

"""
__docformat__ = "restructuredtext en"

#######################
# Begin configuration #
#######################

# List the modules to test with doctest (please keep this list in alphabetical
# order, for ease of maintenance).
MODNAMES = (
    'mnesordb',
    'mnesordb.bitrop',
    'mnesordb.checker',
    'mnesordb.cli',
    'mnesordb.errors',
    'mnesordb.granularexpr',
    'mnesordb.laws',
    'mnesordb.mnesor',
    'mnesordb.queryexpr',
    'mnesordb.relalg',
)

# List the documentation files which should be valid doctest inputs
OTHER_FILES = (
    'docs/introduction.rst',
    'docs/axioms.rst',
)

########################
# End of configuration #
########################

import doctest
import os
import sys
import unittest

def canonical_path(path):
    return os.path.normcase(os.path.normpath(os.path.realpath(path)))

def get_topdir():
    return canonical_path(os.path.dirname(__file__))

def get_fixture_path(filename):
    """Get the path of one of the unittest fixture files.

    """
    return os.path.join(get_topdir(), 'mnesordb', 'unittests', 'testdata',
                        filename)

def setup_test(dtobj):
    """Give each doctest the fixture lookup and the package.

    """
    import mnesordb
    dtobj.globs['get_fixture_path'] = get_fixture_path
    dtobj.globs['mnesordb'] = mnesordb

def teardown_test(dtobj):
    dtobj.globs.clear()

def create_docfile_suite(path, globs):
    """Create a suite of tests from a text file containing doctests.

    """
    return doctest.DocFileSuite(path,
                                module_relative=False,
                                globs=globs,
                                setUp=setup_test,
                                tearDown=teardown_test,
                                )

def module_globs(mod):
    """Get the public names of a module, so doctest files for it can be
    written as if they were entries in the module's __test__ dictionary.

    """
    return dict((key, val) for key, val in mod.__dict__.items()
                if not key.startswith('__'))

def find_unittests(testdir):
    """Find all files containing unit tests under a top directory.

    """
    unittests = []
    for root, dirnames, filenames in os.walk(testdir):
        if 'testdata' in dirnames:
            dirnames.remove('testdata')
        for filename in filenames:
            if filename in ("__init__.py", "mnesordbtest.py"):
                continue
            if filename.endswith(".py"):
                filepath = os.path.join(root, filename)
                unittests.append(filepath[len(testdir)+1:])
    return sorted(unittests)

def make_suite(modnames, other_files):
    topdir = get_topdir()
    if topdir not in sys.path:
        sys.path.insert(0, topdir)
    suite = unittest.TestSuite()

    # Module doctests, and doctests/<module>_doctestN.txt beside them.
    for modname in modnames:
        mod = __import__(modname, None, None, [''])
        suite.addTest(doctest.DocTestSuite(mod, setUp=setup_test,
                                           tearDown=teardown_test))
        modpath = os.path.join(topdir, *(modname.split('.')))
        if os.path.isdir(modpath):
            modpath = os.path.join(modpath, '__init__')
        moddir, modfilename = os.path.split(modpath)
        pattern = os.path.join(moddir, "doctests",
                               modfilename + '_doctest%d.txt')
        num = 1
        while os.path.exists(pattern % num):
            suite.addTest(create_docfile_suite(pattern % num,
                                               module_globs(mod)))
            num += 1

    # Other files with doctests in them.
    for file in other_files:
        suite.addTest(create_docfile_suite(os.path.join(topdir, file), {}))

    # Unittests.
    loader = unittest.TestLoader()
    for testpath in find_unittests(os.path.join(topdir, "mnesordb",
                                                "unittests")):
        modpath = "mnesordb.unittests." + testpath.replace(os.sep, '.')[:-3]
        try:
            mod = __import__(modpath, None, None, [''])
        except ImportError as e:
            print("Skipping test module %s (%s)" % (modpath, str(e)))
            continue
        suite.addTest(loader.loadTestsFromModule(mod))

    return suite

def run_tests(modnames, other_files, specific_mods):
    """Run tests on the specified modules.

    Returns True if all the tests passed.

    """
    if specific_mods:
        for arg in specific_mods:
            if arg not in modnames:
                print("Module `%s' not known" % arg)
                sys.exit(1)
        modnames = specific_mods

    suite = make_suite(modnames, other_files)
    result = unittest.TextTestRunner().run(suite)
    return result.wasSuccessful()

def make_all_suite():
    return make_suite(MODNAMES, OTHER_FILES)

if __name__ == '__main__':
    sys.exit(0 if run_tests(MODNAMES, OTHER_FILES, sys.argv[1:]) else 1)
