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

from mnesordb.bitrop import SubsetBitrop, MinPlusBitrop
from mnesordb.checker import CheckPlan, check_model, run_check, \
     find_all_witnesses, verify_counterexample, universe_keys, build_model, \
     PASS, FAIL, RANDOM
from mnesordb.mnesor import RelationSpace, TruncatedTropicalSpace

class TestCheckModel(TestCase):
    def test_subset_cancellation(self):
        """Cancellation fails for subsets, and the first counterexample is
        the lexicographically least one.

        """
        b = SubsetBitrop(universe_keys(3))
        report = check_model(b, only=['cancellation'])
        self.assertEqual(report.labels(), ['cancellation'])
        result = report['cancellation']
        self.assertEqual(result.status, FAIL)
        self.assertEqual(result.cases, 512)
        self.assertEqual(result.violations, 152)
        c = result.counterexample
        self.assertEqual(c['x'], b.bottom())
        self.assertEqual(c['lambda'], b.bottom())
        self.assertEqual(c['mu'], b.granular_of(['a']))
        self.assertEqual(c.as_dict(), {
            'bindings': {'x': '{}', 'lambda': '{}', 'mu': '{a}'},
            'lhs': '{}',
            'rhs': '{}',
        })

    def test_empty_universe(self):
        """Everything holds over the empty universe.

        """
        report = check_model(SubsetBitrop(()))
        self.assertEqual(report.failures(), [])
        for result in report:
            self.assertEqual(result.status, PASS)

    def test_relation_universe(self):
        report = check_model(RelationSpace(universe_keys(4)), only=['space'])
        self.assertTrue('space-absorption' in report)
        self.assertTrue('oracle-intersect' in report)
        self.assertFalse('oracle-add' in report)
        self.assertFalse('cancellation' in report)
        for result in report:
            self.assertEqual(result.status, PASS, result.label)

    def test_no_applicable_property(self):
        """Space properties don't apply to a bare bitrop.

        """
        self.assertRaises(mnesordb.CheckError, check_model,
                          SubsetBitrop('ab'), only=['space'])
        self.assertRaises(ValueError, check_model, SubsetBitrop('ab'),
                          only=['no-such-property'])

    def test_case_limit(self):
        """The limit applies to the total over all properties.

        """
        b = SubsetBitrop(universe_keys(3))
        try:
            check_model(b, only=['bitrop'], limit=2888)
        except mnesordb.CaseLimitError as e:
            self.assertEqual(e.cases, 2889)
            self.assertEqual(e.limit, 2888)
        else:
            self.fail("expected CaseLimitError")
        report = check_model(b, only=['bitrop'], limit=2889)
        self.assertEqual(sum(result.cases for result in report), 2889)

    def test_workers(self):
        """Spreading a check over processes gives the same report.

        """
        b = SubsetBitrop(universe_keys(3))
        serial = check_model(b, only=['bitrop'])
        parallel = check_model(b, only=['bitrop'], workers=2)
        self.assertEqual(parallel.as_dict(), serial.as_dict())

    def test_json(self):
        """Reports serialise identically on every run.

        """
        first = check_model(MinPlusBitrop(-2, 2)).to_json()
        second = check_model(MinPlusBitrop(-2, 2)).to_json()
        self.assertEqual(first, second)
        parsed = json.loads(first)
        self.assertEqual(parsed['model'], 'minplus')
        self.assertFalse('model' in parsed['parameters'])
        self.assertEqual(first.count('"model"'), 1)
        self.assertEqual(parsed['parameters']['domains'],
                         {'granulars': 5, 'positive': 3})
        statuses = dict((prop['label'], prop['status'])
                        for prop in parsed['properties'])
        self.assertEqual(statuses['bitrop-absorption'], 'RESTRICTED')
        self.assertEqual(statuses['cancellation'], 'PASS')

    def test_random_mode(self):
        """Random checks are repeatable, and sample the requested number of
        cases.

        """
        space = RelationSpace(universe_keys(8))
        report = check_model(space, only=['oracle-intersect', 'add-associative'],
                             mode=RANDOM, cases=1000, seed=7)
        self.assertEqual(report['oracle-intersect'].status, PASS)
        self.assertEqual(report['oracle-intersect'].cases, 1000)
        self.assertEqual(report['add-associative'].status, PASS)
        again = check_model(space,
                            only=['oracle-intersect', 'add-associative'],
                            mode=RANDOM, cases=1000, seed=7)
        self.assertEqual(report.to_json(), again.to_json())
        params = report.as_dict()['parameters']
        self.assertEqual(params['seed'], 7)
        self.assertEqual(params['cases'], 1000)


class TestCheckPlan(TestCase):
    def test_run(self):
        plan = CheckPlan('subset', universe=2, only=['cancellation'])
        report = run_check(plan)
        self.assertEqual(report.as_dict()['model'], 'subset')
        self.assertEqual(report.as_dict()['parameters'], {
            'mode': 'exhaustive',
            'universe': 2,
            'only': ['cancellation'],
            'domains': {'granulars': 4, 'positive': 4},
        })
        self.assertEqual(report.status('cancellation'), FAIL)

    def test_defaults(self):
        plan = CheckPlan('truncated-tropical')
        self.assertEqual(plan.parameters(), [('mode', 'exhaustive'),
                                             ('range', [-6, 0])])
        self.assertEqual(plan.build_model(), TruncatedTropicalSpace(-6))

    def test_bad_plans(self):
        self.assertRaises(ValueError, CheckPlan, 'lattice')
        self.assertRaises(ValueError, CheckPlan, 'subset', mode='sometimes')
        self.assertRaises(ValueError, CheckPlan, 'subset', cases=0)
        self.assertRaises(ValueError, CheckPlan, 'subset', workers=0)
        self.assertRaises(ValueError, CheckPlan, 'subset', only=['nothing'])
        self.assertRaises(ValueError, CheckPlan, 'subset', range=(-1, 1))
        self.assertRaises(ValueError, CheckPlan, 'minplus', universe=3)
        self.assertRaises(ValueError, CheckPlan, 'truncated-tropical',
                          range=(-6, 2))
        self.assertRaises(ValueError, CheckPlan, 'minplus', range=(2, 1))
        self.assertRaises(ValueError, build_model, 'relation', universe=27)


class TestCounterexamples(TestCase):
    def pre_test(self):
        self.b = SubsetBitrop(universe_keys(3))
        report = check_model(self.b, only=['cancellation'])
        self.c = report['cancellation'].counterexample

    def test_verify(self):
        self.assertTrue(verify_counterexample(self.c, self.b))
        self.assertTrue(verify_counterexample(self.c,
                                              SubsetBitrop(('a', 'b', 'c'))))

    def test_tampered(self):
        """Changing a value so the property holds makes verification fail.

        """
        tampered = self.c.replace(mu=self.b.bottom())
        self.assertFalse(verify_counterexample(tampered, self.b))
        self.assertRaises(KeyError, self.c.replace, nu=self.b.bottom())

    def test_stale(self):
        """Values from another model can't be verified.

        """
        self.assertRaises(mnesordb.StaleCounterexampleError,
                          verify_counterexample, self.c,
                          SubsetBitrop(universe_keys(4)))
        self.assertRaises(mnesordb.StaleCounterexampleError,
                          verify_counterexample, self.c, MinPlusBitrop(-1, 1))

    def test_space_bitrop(self):
        """Bitrop counterexamples verify against a space over the same
        universe.

        """
        self.assertTrue(verify_counterexample(self.c,
                                              RelationSpace(universe_keys(3))))


class TestWitnesses(TestCase):
    def pre_test(self):
        self.space = RelationSpace(('Sweden', 'Germany', 'Denmark', 'France',
                                    'Australia'))
        self.b = self.space.bitrop

    def test_all_witnesses(self):
        """Every witness gives the same intersection.

        """
        x = self.space.relation(['Germany', 'Denmark'])
        y = self.space.relation(['Germany', 'Sweden'])
        witnesses = find_all_witnesses(x, y)
        self.assertEqual([self.b.keys_of(w) for w in witnesses], [
            ('Germany', 'Denmark'),
            ('Germany', 'Denmark', 'France'),
            ('Germany', 'Denmark', 'Australia'),
            ('Germany', 'Denmark', 'France', 'Australia'),
        ])
        nato = self.b.granular_of(['Germany', 'Denmark', 'France'])
        self.assertTrue(nato in witnesses)
        for w in witnesses:
            self.assertEqual(y * w, self.space.relation(['Germany']))

    def test_self_witnesses(self):
        x = self.space.relation(['Sweden'])
        witnesses = find_all_witnesses(x, x, self.space)
        self.assertTrue(self.b.tau() in witnesses)
        self.assertEqual(len(witnesses), 16)

if __name__ == '__main__':
    main()
