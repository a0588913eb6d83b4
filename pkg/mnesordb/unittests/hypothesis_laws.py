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
import hypothesis
import hypothesis.strategies as strat

from mnesordb.bitrop import SubsetBitrop, MinPlusBitrop
from mnesordb.checker import universe_keys
from mnesordb.mnesor import RelationSpace, TruncatedTropicalSpace

SUBSETS = SubsetBitrop(universe_keys(8))
MINPLUS = MinPlusBitrop(-40, 40)
RELATIONS = RelationSpace(universe_keys(8))
TRUNCATED = TruncatedTropicalSpace(-20)

def masks():
    return strat.integers(min_value=0, max_value=255).map(SUBSETS.granular)

def small_ints():
    # Sums of three stay inside MINPLUS.
    return strat.integers(min_value=-13, max_value=13).map(MINPLUS.granular)

def relations():
    return strat.integers(min_value=0, max_value=255).map(RELATIONS.carrier_at)

def attributed_relations(name):
    rows = strat.dictionaries(strat.sampled_from(RELATIONS.universe),
                              strat.sampled_from(('', 'p', 'q')))
    return rows.map(lambda d: RELATIONS.relation(
        (key, {name: val}) for key, val in d.items()))

def tropicals():
    return strat.integers(min_value=-20, max_value=0).map(TRUNCATED.mnesor)


class TestSubsetLaws(TestCase):
    @hypothesis.given(masks(), masks(), masks())
    def test_distributive(self, a, b, c):
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual((a + b) * c, a * c + b * c)

    @hypothesis.given(masks(), masks())
    def test_absorption(self, x, y):
        alpha = SUBSETS.absorption_witness(x, y)
        self.assertEqual((x + y) * alpha, x)
        self.assertEqual(alpha, x)

    @hypothesis.given(masks())
    def test_center(self, x):
        self.assertEqual(x * SUBSETS.tau(), x)
        self.assertTrue(SUBSETS.is_positive(x))


class TestMinPlusLaws(TestCase):
    @hypothesis.given(small_ints(), small_ints(), small_ints())
    def test_distributive(self, a, b, c):
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual((a * b) * c, a * (b * c))

    @hypothesis.given(small_ints(), small_ints())
    def test_absorption(self, x, y):
        alpha = MINPLUS.absorption_witness(x, y)
        self.assertEqual(alpha.value, x.value - min(x.value, y.value))
        self.assertEqual((x + y) * alpha, x)

    @hypothesis.given(small_ints(), small_ints(), small_ints())
    def test_cancellation(self, x, lam, mu):
        hypothesis.assume(MINPLUS.is_positive(lam) and
                          MINPLUS.is_positive(mu))
        if x * lam == x * mu:
            self.assertEqual(lam, mu)


class TestRelationLaws(TestCase):
    @hypothesis.given(relations(), relations())
    def test_intersection_oracle(self, x, y):
        self.assertEqual((x & y).value, x.value & y.value)
        self.assertEqual(x & y, y & x)

    @hypothesis.given(relations(), relations(), relations())
    def test_lattice(self, x, y, z):
        self.assertEqual((x & y) & z, x & (y & z))
        self.assertEqual(x + (x & y), x)
        self.assertEqual(x & (x + y), x)

    @hypothesis.given(attributed_relations('attr'), relations())
    def test_intersection_by_key(self, x, y):
        result = x & y
        self.assertEqual(result, y & x)
        self.assertEqual(RELATIONS.keys_of(result),
                         tuple(key for key in RELATIONS.keys_of(x)
                               if key in RELATIONS.keys_of(y)))
        self.assertEqual(result, (x + y) * (RELATIONS.keymask(x) *
                                            RELATIONS.keymask(y)))

    @hypothesis.given(attributed_relations('attr'),
                      attributed_relations('other'))
    def test_intersection_commutative(self, x, y):
        """Relations with different attributes intersect in either order.

        """
        self.assertEqual(x & y, y & x)
        self.assertEqual(x + (x & y), x + y * RELATIONS.keymask(x))

    @hypothesis.given(relations(), masks(), masks())
    def test_granular_action(self, x, lam, mu):
        rlam = RELATIONS.bitrop.granular(lam.value)
        rmu = RELATIONS.bitrop.granular(mu.value)
        self.assertEqual((x * rlam) * rmu, x * (rlam * rmu))
        self.assertEqual(x * (rlam + rmu), x * rlam + x * rmu)


class TestTropicalLaws(TestCase):
    @hypothesis.given(tropicals(), tropicals())
    def test_intersection_is_max(self, x, y):
        self.assertEqual((x & y).value, max(x.value, y.value))
        self.assertEqual(x + y, TRUNCATED.mnesor(min(x.value, y.value)))

    @hypothesis.given(tropicals(), tropicals(), tropicals())
    def test_intersection_associative(self, x, y, z):
        self.assertEqual((x & y) & z, x & (y & z))

if __name__ == '__main__':
    main()
