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
from mnesordb.bitrop import SubsetBitrop, MinPlusBitrop, \
     oplus, otimes, tau, is_positive, bitrop_absorption_witness, \
     check_bitrop_axioms

COUNTRIES = ('Sweden', 'Germany', 'France')

class TestSubsetBitrop(TestCase):
    def pre_test(self):
        self.b = SubsetBitrop(COUNTRIES)

    def g(self, *keys):
        return self.b.granular_of(keys)

    def test_operations(self):
        """Addition is union, multiplication is intersection.

        """
        self.assertEqual(oplus(self.g('Sweden'), self.g('Germany')),
                         self.g('Sweden', 'Germany'))
        self.assertEqual(otimes(self.g('Sweden', 'Germany'),
                                self.g('Germany', 'France')),
                         self.g('Germany'))
        self.assertEqual(tau(self.b), self.g(*COUNTRIES))
        self.assertEqual(self.g('Sweden') + self.g('France'),
                         self.g('France', 'Sweden'))
        self.assertEqual(self.g('Sweden') * self.g('France'), self.b.bottom())

    def test_formatting(self):
        """Granulars format as their keys, in universe order.

        """
        self.assertEqual(str(self.g('France', 'Sweden')), '{Sweden,France}')
        self.assertEqual(str(self.b.bottom()), '{}')
        self.assertEqual(self.b.keys_of(self.g('France', 'Germany')),
                         ('Germany', 'France'))

    def test_positive_cone(self):
        """Every subset is positive.

        """
        self.assertEqual(self.b.positive_size(), 8)
        for g in self.b.carrier():
            self.assertTrue(is_positive(g))

    def test_absorption_witness(self):
        """The least witness for x is x itself.

        """
        x = self.g('Sweden')
        y = self.g('Germany')
        witness = bitrop_absorption_witness(x, y)
        self.assertEqual(witness, x)
        self.assertEqual((x + y) * witness, x)

    def test_complement(self):
        self.assertEqual(self.b.complement(self.g('Germany')),
                         self.g('Sweden', 'France'))
        self.assertEqual(self.b.complement(self.b.bottom()), self.b.tau())

    def test_bad_universe(self):
        """Keys outside the universe, and repeated keys, are rejected.

        """
        self.assertRaises(mnesordb.UnknownKeyError, self.b.granular_of,
                          ['Norway'])
        self.assertRaises(ValueError, SubsetBitrop, ('a', 'b', 'a'))
        self.assertRaises(mnesordb.OutOfCarrierError, self.b.granular, 8)

    def test_model_equality(self):
        """Granulars of equal models combine; others don't.

        """
        other = SubsetBitrop(COUNTRIES)
        self.assertEqual(other, self.b)
        self.assertEqual(self.g('Sweden') + other.granular_of(['France']),
                         self.g('Sweden', 'France'))

        smaller = SubsetBitrop(COUNTRIES[:2])
        self.assertNotEqual(smaller, self.b)
        self.assertRaises(mnesordb.ModelMismatchError, oplus,
                          self.g('Sweden'), smaller.granular_of(['Sweden']))
        self.assertRaises(mnesordb.ModelMismatchError, oplus,
                          self.g('Sweden'), MinPlusBitrop(-1, 1).tau())

    def test_axioms(self):
        """Everything but cancellation holds.

        """
        report = check_bitrop_axioms(self.b)
        self.assertEqual([r.label for r in report.failures()],
                         ['cancellation'])
        for result in report:
            if result.label != 'cancellation':
                self.assertEqual(result.status, 'PASS')
                self.assertEqual(result.skipped, 0)


class TestMinPlusBitrop(TestCase):
    def pre_test(self):
        self.b = MinPlusBitrop(-8, 8)

    def test_operations(self):
        g = self.b.granular
        self.assertEqual(g(3) + g(5), g(3))
        self.assertEqual(g(3) * g(4), g(7))
        self.assertEqual(self.b.tau(), g(0))
        self.assertEqual(str(g(-2)), '-2')

    def test_checked_multiplication(self):
        """Products beyond the range raise rather than wrapping or clamping.

        """
        g = self.b.granular
        self.assertRaises(mnesordb.OutOfCarrierError, otimes, g(6), g(5))
        try:
            otimes(g(-6), g(-5))
        except mnesordb.OutOfCarrierError as e:
            self.assertEqual(e.value, -11)
        else:
            self.fail("expected OutOfCarrierError")

    def test_positive_cone(self):
        g = self.b.granular
        self.assertTrue(is_positive(g(4)))
        self.assertTrue(is_positive(g(0)))
        self.assertFalse(is_positive(g(-2)))
        self.assertEqual([p.value for p in self.b.positive_cone()],
                         list(range(9)))

    def test_absorption_witness(self):
        """The least witness is found by scanning B+ upwards.

        """
        g = self.b.granular
        self.assertEqual(bitrop_absorption_witness(g(5), g(2)), g(3))
        self.assertEqual(bitrop_absorption_witness(g(2), g(5)), g(0))
        self.assertEqual(bitrop_absorption_witness(g(8), g(-8)), None)
        self.assertEqual(self.b.find_absorption_witness(g(8), g(-8)),
                         (None, 16))

    def test_bad_range(self):
        self.assertRaises(ValueError, MinPlusBitrop, 1, 5)
        self.assertRaises(ValueError, MinPlusBitrop, -5, -1)
        self.assertRaises(TypeError, MinPlusBitrop, -1.5, 2)

    def test_axioms(self):
        """Absorption is restricted by the bounds; nothing fails.

        """
        report = check_bitrop_axioms(self.b)
        self.assertEqual(report.failures(), [])
        self.assertEqual(report.status('bitrop-absorption'), 'RESTRICTED')
        self.assertEqual(report.status('cancellation'), 'PASS')
        self.assertEqual(report.status('center-unit'), 'PASS')
        self.assertEqual(report.status('center-idempotent'), 'PASS')
        self.assertEqual(report['bitrop-absorption'].cases, 17 * 17)
        self.assertTrue(report['bitrop-absorption'].skipped > 0)

if __name__ == '__main__':
    main()
