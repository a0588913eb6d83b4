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
from .mnesordbtest import *
import json

class TestEval(TestCase):
    def pre_test(self):
        self.options = ['-m', self.datafile('membership.csv')]
        for name in ('a', 'b', 'x', 'y', 'europe', 'capitals'):
            self.options.extend(['-t', '%s=%s' % (name,
                                                  self.datafile(name + '.csv'))])

    def eval(self, query, *extra):
        return self.run_cli('eval', query, *(self.options + list(extra)))

    def test_union(self):
        self.assertEqual(self.eval('a + b'),
                         (0, "key\nFrance\nGermany\nSweden\n", ''))

    def test_intersection(self):
        self.assertEqual(self.eval('x & y'), (0, "key\nGermany\n", ''))

    def test_selection(self):
        self.assertEqual(self.eval('europe[NATO]'),
                         (0, "key\nDenmark\nFrance\nGermany\n", ''))
        status, out, err = self.eval('europe[NATO] + europe[!NATO]')
        self.assertEqual(out, "key\nDenmark\nFrance\nGermany\nSweden\n")

    def test_attributes(self):
        self.assertEqual(self.eval('capitals[EU]'), (0,
            "key,capital,population\n"
            "France,Paris,68\n"
            "Germany,Berlin,\n"
            "Sweden,Stockholm,10.5\n", ''))

    def test_intersection_attributes(self):
        """Tables with different columns intersect in either order, keeping
        the attribute values.

        """
        expected = (0, "key,capital,population\n"
                    "Germany,Berlin,\n"
                    "Sweden,Stockholm,10.5\n", '')
        self.assertEqual(self.eval('a & capitals'), expected)
        self.assertEqual(self.eval('capitals & a'), expected)

    def test_parse_error(self):
        status, out, err = self.eval('a +')
        self.assertEqual(status, 1)
        self.assertEqual(out, '')
        self.assertEqual(err, "mnesordb: syntax error at position 3: "
                         "expected '(' or identifier, found end of input\n")

    def test_unknown_names(self):
        status, out, err = self.eval('a + nowhere')
        self.assertEqual(status, 2)
        self.assertTrue("unknown table 'nowhere'" in err)
        status, out, err = self.eval('a[OECD]')
        self.assertEqual(status, 2)
        self.assertTrue("unknown organisation 'OECD'" in err)

    def test_data_errors(self):
        status, out, err = self.eval('a + bad', '-t',
                                     'bad=%s' % self.datafile('unknown_key.csv'))
        self.assertEqual(status, 3)
        self.assertTrue("unknown_key.csv:3: key 'Norway'" in err)
        status, out, err = self.eval('capitals & conflict', '-t',
                                     'conflict=%s' %
                                     self.datafile('capitals_conflict.csv'))
        self.assertEqual((status, out), (3, ''))
        self.assertTrue("key 'Germany', attribute 'capital'" in err)
        status, out, err = self.run_cli(
            'eval', 'a', '-m', self.datafile('bad_cell.csv'),
            '-t', 'a=%s' % self.datafile('a.csv'))
        self.assertEqual(status, 3)
        self.assertTrue('bad_cell.csv:2:' in err)

    def test_usage_errors(self):
        self.assertEqual(self.run_cli('eval', 'a')[0], 1)
        self.assertEqual(self.eval('a', 'b')[0], 1)
        self.assertEqual(self.run_cli('eval', 'a', '-t', 'a')[0], 1)


class TestWitnesses(TestCase):
    def test_witnesses(self):
        status, out, err = self.run_cli(
            'witnesses', 'x', 'y',
            '--membership', self.datafile('membership.csv'),
            '--table', 'x=%s' % self.datafile('x.csv'),
            '--table', 'y=%s' % self.datafile('y.csv'))
        self.assertEqual(status, 0)
        self.assertEqual(out,
                         "witness,organisations,intersection\n"
                         "Germany;Denmark,,Germany\n"
                         "Germany;Denmark;France,NATO,Germany\n"
                         "Germany;Denmark;Australia,,Germany\n"
                         "Germany;Denmark;France;Australia,,Germany\n")

    def test_unbound(self):
        status, out, err = self.run_cli(
            'witnesses', 'x', 'z', '-m', self.datafile('membership.csv'),
            '-t', 'x=%s' % self.datafile('x.csv'))
        self.assertEqual(status, 2)


class TestAxioms(TestCase):
    def axioms(self, *args):
        status, out, err = self.run_cli('axioms', *args)
        report = json.loads(out) if out else None
        return status, report, err

    def test_relation(self):
        status, report, err = self.axioms('--model', 'relation',
                                          '--only', 'space')
        self.assertEqual(status, 0)
        self.assertEqual(report['parameters']['universe'], 3)
        for prop in report['properties']:
            self.assertEqual(prop['status'], 'PASS')

    def test_cancellation(self):
        """Cancellation fails on subsets, with the least counterexample.

        """
        status, report, err = self.axioms('--model', 'subset',
                                          '--only', 'cancellation')
        self.assertEqual(status, 4)
        prop = report['properties'][0]
        self.assertEqual(prop['label'], 'cancellation')
        self.assertEqual(prop['status'], 'FAIL')
        self.assertEqual(prop['counterexample']['bindings'],
                         {'lambda': '{}', 'mu': '{a}', 'x': '{}'})

    def test_minplus(self):
        status, report, err = self.axioms('--model', 'minplus',
                                          '--range', '-1..1')
        self.assertEqual(status, 0)
        self.assertEqual(report['parameters']['range'], [-1, 1])
        statuses = dict((prop['label'], prop['status'])
                        for prop in report['properties'])
        self.assertEqual(statuses['bitrop-absorption'], 'RESTRICTED')

    def test_extended(self):
        status, report, err = self.axioms('--model', 'extended-minplus',
                                          '--only', 'space-absorption')
        self.assertEqual(status, 4)
        self.assertEqual(report['properties'][0]['counterexample']['bindings'],
                         {'x': 'identity', 'y': '-6'})

    def test_limit(self):
        status, report, err = self.axioms('--model', 'subset',
                                          '--limit', '10')
        self.assertEqual((status, report), (5, None))
        self.assertTrue('2889' in err)

    def test_random(self):
        status, report, err = self.axioms('--model', 'relation',
                                          '--universe', '8',
                                          '--random', '200', '--seed', '3',
                                          '--only', 'oracles')
        self.assertEqual(status, 0)
        self.assertEqual(report['parameters']['cases'], 200)
        self.assertEqual(report['properties'][0]['cases'], 200)

    def test_deterministic(self):
        """Repeated runs give byte-identical reports.

        """
        first = self.run_cli('axioms', '--model', 'truncated-tropical')
        second = self.run_cli('axioms', '--model', 'truncated-tropical')
        self.assertEqual(first, second)
        self.assertEqual(first[0], 0)

    def test_bad_options(self):
        self.assertEqual(self.axioms()[0], 1)
        self.assertEqual(self.axioms('--model', 'lattice')[0], 1)
        self.assertEqual(self.axioms('--model', 'subset',
                                     '--range', '0..1')[0], 1)
        self.assertEqual(self.axioms('--model', 'minplus',
                                     '--range', '1..')[0], 1)
        self.assertEqual(self.axioms('--model', 'subset',
                                     '--only', 'nothing')[0], 1)
        self.assertEqual(self.axioms('--model', 'subset',
                                     '--only', 'space')[0], 1)


class TestGeneral(TestCase):
    def test_help(self):
        status, out, err = self.run_cli('--help')
        self.assertEqual(status, 0)
        self.assertTrue(out.startswith('Usage: mnesordb'))

    def test_bad_command(self):
        status, out, err = self.run_cli('frobnicate')
        self.assertEqual(status, 1)
        self.assertTrue("unknown command 'frobnicate'" in err)
        self.assertEqual(self.run_cli()[0], 1)
        self.assertEqual(self.run_cli('axioms', '--bogus')[0], 1)

    def test_verbose(self):
        """Progress is logged to stderr only when asked for.

        """
        args = ['eval', 'a', '-m', self.datafile('membership.csv'),
                '-t', 'a=%s' % self.datafile('a.csv')]
        status, out, err = self.run_cli(*args)
        self.assertEqual((status, err), (0, ''))
        status, out, err = self.run_cli('-v', *args)
        self.assertEqual(status, 0)
        self.assertTrue('mnesordb.relalg: DEBUG: ' in err)
        self.assertEqual(out, "key\nGermany\nSweden\n")

if __name__ == '__main__':
    main()
