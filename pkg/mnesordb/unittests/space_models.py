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
from mnesordb.mnesor import RelationSpace, TruncatedTropicalSpace, \
     ExtendedMinPlusSpace, IDENTITY, add, scale, zero, is_prefix, orbit, \
     orbit_witness, absorption_granular, intersect, check_space_axioms

COUNTRIES = ('Sweden', 'Germany', 'Denmark', 'France', 'Australia')

class TestRelationSpace(TestCase):
    def pre_test(self):
        self.space = RelationSpace(COUNTRIES)
        self.b = self.space.bitrop

    def r(self, *rows):
        return self.space.relation(rows)

    def g(self, *keys):
        return self.b.granular_of(keys)

    def test_add(self):
        """Addition is union of rows.

        """
        self.assertEqual(add(self.r('Sweden', 'Germany'),
                             self.r('France', 'Sweden')),
                         self.r('Sweden', 'Germany', 'France'))
        self.assertEqual(add(self.r('Sweden'), zero(self.space)),
                         self.r('Sweden'))
        self.assertEqual(zero(self.space), self.r())
        self.assertEqual(add(zero(self.space), zero(self.space)),
                         zero(self.space))

    def test_merge_attributes(self):
        """Rows sharing a key merge their attributes.

        """
        x = self.r(('Germany', {'capital': 'Berlin'}))
        y = self.r(('Germany', {'population': '84'}), 'France')
        self.assertEqual(str(x + y),
                         '{Germany(capital=Berlin;population=84),France}')
        conflict = self.r(('Germany', {'capital': 'Bonn'}))
        try:
            add(x, conflict)
        except mnesordb.MergeConflictError as e:
            self.assertEqual(e.key, 'Germany')
            self.assertEqual(e.attribute, 'capital')
            self.assertEqual(e.values, ('Berlin', 'Bonn'))
        else:
            self.fail("expected MergeConflictError")

    def test_null_attributes(self):
        """Empty and None attribute values aren't stored.

        """
        self.assertEqual(self.r(('Sweden', {'capital': '', 'x': None})),
                         self.r('Sweden'))

    def test_scale(self):
        """Scaling keeps the rows whose key is in the granular.

        """
        europe = self.r('Sweden', 'Germany', 'Denmark', 'France')
        nato = self.g('Germany', 'Denmark', 'France')
        self.assertEqual(scale(europe, nato),
                         self.r('Germany', 'Denmark', 'France'))
        self.assertEqual(europe * self.b.complement(nato), self.r('Sweden'))
        self.assertEqual(scale(europe, nato) +
                         scale(europe, self.b.complement(nato)), europe)

    def test_prefix(self):
        self.assertTrue(is_prefix(self.r('Sweden'),
                                  self.r('Sweden', 'Germany')))
        self.assertFalse(is_prefix(self.r('France'), self.r('Sweden')))
        x = self.r('Denmark')
        self.assertTrue(is_prefix(x, x))

    def test_orbit_witness(self):
        """The canonical orbit witness is the key set of x.

        """
        self.assertEqual(orbit_witness(self.r('Germany'),
                                       self.r('Germany', 'Sweden')),
                         self.g('Germany'))
        self.assertEqual(orbit_witness(self.r('France'), self.r('Germany')),
                         None)
        x = self.r('Sweden', 'France')
        self.assertEqual(scale(x, orbit_witness(x, x)), x)
        self.assertEqual(scale(x, self.b.tau()), x)

    def test_orbit(self):
        a = self.space.relation(['Sweden', 'Germany'])
        self.assertEqual(set(orbit(a)), set([
            self.r(), self.r('Sweden'), self.r('Germany'),
            self.r('Sweden', 'Germany'),
        ]))
        self.assertEqual(orbit(a)[0], self.r())

    def test_intersect(self):
        """The worked intersection example.

        """
        x = self.r('Germany', 'Denmark')
        y = self.r('Germany', 'Sweden')
        self.assertEqual(absorption_granular(x, y),
                         self.g('Germany', 'Denmark'))
        self.assertEqual(intersect(x, y), self.r('Germany'))
        self.assertEqual(x & y, y & x)
        self.assertEqual(absorption_granular(x, x), self.g('Germany',
                                                           'Denmark'))

    def test_intersect_attributes(self):
        """Rows are intersected by key, keeping the attributes of both sides,
        whichever side carries them.

        """
        plain = self.r('Germany', 'Sweden')
        rich = self.r(('Germany', {'capital': 'Berlin'}), 'France')
        expected = self.r(('Germany', {'capital': 'Berlin'}))
        self.assertEqual(intersect(rich, plain), expected)
        self.assertEqual(intersect(plain, rich), expected)
        # No selection of plain + rich gives plain back.
        self.assertRaises(mnesordb.AbsorptionError, absorption_granular,
                          plain, rich)
        other = self.r(('Germany', {'capital': 'Bonn'}))
        self.assertRaises(mnesordb.MergeConflictError, intersect, rich, other)

    def test_model_mismatch(self):
        other = RelationSpace(COUNTRIES[:3])
        self.assertRaises(mnesordb.ModelMismatchError, add,
                          self.r('Sweden'), other.relation(['Sweden']))
        self.assertRaises(mnesordb.ModelMismatchError, scale,
                          self.r('Sweden'), other.bitrop.tau())

    def test_bad_rows(self):
        self.assertRaises(mnesordb.UnknownKeyError, self.r, 'Norway')
        self.assertRaises(mnesordb.DuplicateKeyError, self.r, 'Sweden',
                          'Sweden')

    def test_axioms(self):
        """Every space property holds, on universes of size 0 to 3.

        """
        for size in range(4):
            space = RelationSpace(COUNTRIES[:size])
            report = check_space_axioms(space, only=['space'])
            for result in report:
                self.assertEqual(result.status, 'PASS',
                                 '%s failed on universe %d' % (result.label,
                                                               size))


class TestTruncatedTropicalSpace(TestCase):
    def pre_test(self):
        self.space = TruncatedTropicalSpace(-6)
        self.m = self.space.mnesor
        self.g = self.space.bitrop.granular

    def test_operations(self):
        self.assertEqual(add(self.m(-3), self.m(-5)), self.m(-5))
        self.assertEqual(scale(self.m(-1), self.g(5)), self.m(0))
        self.assertEqual(scale(self.m(-4), self.g(1)), self.m(-3))
        self.assertEqual(zero(self.space), self.m(0))
        self.assertRaises(mnesordb.OutOfCarrierError, self.m, 1)
        self.assertRaises(mnesordb.OutOfCarrierError, self.m, -7)

    def test_intersect(self):
        """Intersection is the maximum.

        """
        self.assertEqual(intersect(self.m(-3), self.m(-5)), self.m(-3))
        self.assertEqual(intersect(self.m(-5), self.m(-3)), self.m(-3))
        self.assertEqual(absorption_granular(self.m(0), self.m(-4)),
                         self.g(4))

    def test_orbit(self):
        self.assertEqual(orbit(self.m(-2)),
                         [self.m(-2), self.m(-1), self.m(0)])
        self.assertEqual(orbit_witness(self.m(-1), self.m(-3)), self.g(2))
        self.assertEqual(orbit_witness(self.m(-3), self.m(-1)), None)

    def test_axioms(self):
        """Every property holds.

        """
        report = check_space_axioms(self.space)
        for result in report:
            self.assertEqual(result.status, 'PASS', result.label)
        self.assertTrue('oracle-add' in report)
        self.assertTrue('oracle-intersect' in report)


class TestExtendedMinPlusSpace(TestCase):
    def pre_test(self):
        self.space = ExtendedMinPlusSpace(-6, 6)
        self.m = self.space.mnesor

    def test_identity(self):
        identity = zero(self.space)
        self.assertEqual(identity.value, IDENTITY)
        self.assertEqual(str(identity), 'identity')
        self.assertEqual(add(identity, self.m(3)), self.m(3))
        self.assertEqual(scale(identity, self.space.bitrop.granular(-2)),
                         identity)
        self.assertEqual(self.space.carrier_at(self.space.carrier_size() - 1),
                         identity)

    def test_absorption_failure(self):
        """No granular scales a finite value up to the identity.

        """
        self.assertRaises(mnesordb.AbsorptionError, absorption_granular,
                          zero(self.space), self.m(3))
        self.assertRaises(mnesordb.OutOfCarrierError, absorption_granular,
                          self.m(6), self.m(-6))
        self.assertEqual(absorption_granular(self.m(2), self.m(-1)),
                         self.space.bitrop.granular(3))

    def test_axioms(self):
        """The absorption property fails at the identity.

        """
        report = check_space_axioms(self.space, only=['space-absorption'])
        result = report['space-absorption']
        self.assertEqual(result.status, 'FAIL')
        bindings = result.counterexample.as_dict()['bindings']
        self.assertEqual(bindings, {'x': 'identity', 'y': '-6'})
        self.assertTrue(result.skipped > 0)
        self.assertTrue(mnesordb.verify_counterexample(result.counterexample,
                                                       self.space))

if __name__ == '__main__':
    main()
