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
import io
import itertools
import random

from mnesordb.granularexpr import parse_granular, eval_granular, Name, \
     Top, Bottom
from mnesordb.relalg import MembershipEnv, make_table, union, intersection, \
     select, read_membership, read_table, load_membership, load_table

FIXTURE_TABLES = ('a', 'australia', 'b', 'capitals', 'capitals_conflict',
                  'europe', 'x', 'y')

def expression_texts(names):
    """Return the literals over `names` (each name and its complement), and
    the meet and join of each pair of distinct literals.

    """
    literals = []
    for name in names:
        literals.extend((name, '!' + name))
    result = list(literals)
    for a, b in itertools.combinations(literals, 2):
        result.append('%s & %s' % (a, b))
        result.append('%s | %s' % (a, b))
    return result

class TestMembership(TestCase):
    def test_load(self):
        env = self.membership()
        self.assertEqual(env.universe, ('Sweden', 'Germany', 'Denmark',
                                        'France', 'Australia'))
        self.assertEqual(env.names(), ('EU', 'NATO'))
        self.assertTrue('NATO' in env)
        self.assertTrue(env.is_key('Australia'))
        self.assertFalse(env.is_key('Norway'))
        self.assertEqual(env.bitrop.keys_of(env.granular('NATO')),
                         ('Germany', 'Denmark', 'France'))

    def test_bad_cell(self):
        path = self.datafile('bad_cell.csv')
        try:
            load_membership(path)
        except mnesordb.BadCellError as e:
            self.assertEqual(e.source, path)
            self.assertEqual(e.line, 2)
        else:
            self.fail("expected BadCellError")

    def test_reserved_name(self):
        """Organisations can't be named after the constants, or anything which
        isn't an identifier.

        """
        for header in ('key,TOP', 'key,EU-27', 'key,1st'):
            fd = io.StringIO(header + '\nSweden,1\n')
            self.assertRaises(mnesordb.MalformedCSVError, read_membership, fd)

    def test_bad_header(self):
        self.assertRaises(mnesordb.MalformedCSVError, load_membership,
                          self.datafile('no_key_column.csv'))
        self.assertRaises(mnesordb.MalformedCSVError, read_membership,
                          io.StringIO(''))
        self.assertRaises(mnesordb.MalformedCSVError, read_membership,
                          io.StringIO('key,EU,EU\nSweden,1,1\n'))

    def test_duplicate_key(self):
        fd = io.StringIO('key,EU\nSweden,1\nSweden,0\n')
        try:
            read_membership(fd, 'members.csv')
        except mnesordb.DuplicateKeyError as e:
            self.assertEqual(str(e), "members.csv:3: key 'Sweden' appears "
                             "more than once")
        else:
            self.fail("expected DuplicateKeyError")

    def test_missing_file(self):
        path = os.path.join(self.tempdir, 'missing.csv')
        try:
            load_membership(path)
        except mnesordb.DataError as e:
            self.assertEqual(e.source, path)
            self.assertEqual(e.line, None)
        else:
            self.fail("expected DataError")


class TestTables(TestCase):
    def pre_test(self):
        self.env = self.membership()

    def table(self, name):
        return self.fixture_table(self.env, name)

    def test_union(self):
        result = union(self.table('a'), self.table('b'))
        self.assertEqual(result.format_csv(), "key\nFrance\nGermany\nSweden\n")
        self.assertEqual(len(result), 3)

    def test_intersection(self):
        result = intersection(self.table('x'), self.table('y'))
        self.assertEqual(result.keys(), ['Germany'])
        self.assertEqual(result, intersection(self.table('y'),
                                              self.table('x')))
        self.assertEqual(len(intersection(self.table('a'),
                                          self.table('australia'))), 0)

    def test_select(self):
        """Selecting by an organisation and by its complement partitions a
        table.

        """
        europe = self.table('europe')
        nato = select(europe, 'NATO', self.env)
        others = select(europe, '!NATO', self.env)
        self.assertEqual(nato.keys(), ['Denmark', 'France', 'Germany'])
        self.assertEqual(others.keys(), ['Sweden'])
        self.assertEqual(union(nato, others), europe)
        self.assertEqual(select(europe, 'TOP', self.env), europe)
        self.assertEqual(len(select(europe, 'BOT', self.env)), 0)

    def test_select_composition(self):
        """Successive selections are selection by the meet, for every fixture
        table and every pair of expressions.

        """
        europe = self.table('europe')
        self.assertEqual(select(select(europe, 'EU', self.env), '!NATO',
                                self.env),
                         select(europe, 'EU & !NATO', self.env))

        exprs = [parse_granular(text) for text in expression_texts(
            ('EU', 'NATO', 'TOP', 'BOT'))]
        self.assertEqual(len(exprs), 64)
        for name in FIXTURE_TABLES:
            t = self.table(name)
            for a, b in itertools.product(exprs, exprs):
                self.assertEqual(select(select(t, a, self.env), b, self.env),
                                 select(t, a & b, self.env),
                                 "%s[%s][%s]" % (name, a, b))

    def test_attributes(self):
        capitals = self.table('capitals')
        self.assertEqual(capitals.attributes, ('capital', 'population'))
        self.assertEqual(capitals.format_csv(),
                         "key,capital,population\n"
                         "France,Paris,68\n"
                         "Germany,Berlin,\n"
                         "Sweden,Stockholm,10.5\n")
        self.assertEqual(capitals.rows()[1], ('Germany',
                                              {'capital': 'Berlin'}))
        merged = union(self.table('europe'), capitals)
        self.assertEqual(merged.attributes, ('capital', 'population'))
        self.assertEqual(merged.rows()[0], ('Denmark', {}))

    def test_merge_conflict(self):
        try:
            union(self.table('capitals'), self.table('capitals_conflict'))
        except mnesordb.MergeConflictError as e:
            self.assertEqual(e.key, 'Germany')
            self.assertEqual(e.attribute, 'capital')
            self.assertEqual(e.values, ('Berlin', 'Bonn'))
        else:
            self.fail("expected MergeConflictError")

    def test_intersection_with_attributes(self):
        """Tables need no common columns to be intersected: rows match by
        key, and keep their attribute values.

        """
        a = self.table('a')
        capitals = self.table('capitals')
        result = intersection(a, capitals)
        self.assertEqual(result, intersection(capitals, a))
        self.assertEqual(result.keys(), ['Germany', 'Sweden'])
        self.assertEqual(result.format_csv(),
                         "key,capital,population\n"
                         "Germany,Berlin,\n"
                         "Sweden,Stockholm,10.5\n")
        self.assertRaises(mnesordb.MergeConflictError, intersection,
                          capitals, self.table('capitals_conflict'))

    def test_table_errors(self):
        for name, exc, line in (
            ('duplicate_key.csv', mnesordb.DuplicateKeyError, 4),
            ('unknown_key.csv', mnesordb.UnknownKeyError, 3),
            ('no_key_column.csv', mnesordb.MalformedCSVError, 1),
        ):
            path = self.datafile(name)
            try:
                load_table(path, self.env)
            except exc as e:
                self.assertEqual(e.source, path)
                self.assertEqual(e.line, line)
            else:
                self.fail("expected %s for %s" % (exc.__name__, name))

    def test_ragged_row(self):
        path = self.tempfile('ragged.csv', 'key,capital\nSweden\n')
        try:
            load_table(path, self.env)
        except mnesordb.MalformedCSVError as e:
            self.assertEqual(e.line, 2)
            self.assertEqual(str(e), "%s:2: expected 2 cells, got 1" % path)
        else:
            self.fail("expected MalformedCSVError")

    def test_not_utf8(self):
        path = os.path.join(self.tempdir, 'latin1.csv')
        with open(path, 'wb') as fd:
            fd.write(b'key,capital\nSweden,G\xf6teborg\n')
        self.assertRaises(mnesordb.MalformedCSVError, load_table, path,
                          self.env)

    def test_blank_lines(self):
        table = read_table(io.StringIO('key\n\nSweden\n\n'), self.env)
        self.assertEqual(table.keys(), ['Sweden'])


class TestRandomTables(TestCase):
    """Check the table operations against set operations on their keys.

    """
    def pre_test(self):
        universe = ['k%d' % i for i in range(8)]
        self.env = MembershipEnv(universe, [
            ('Even', universe[::2]),
            ('Low', universe[:4]),
        ])
        self.rng = random.Random(1234)

    def random_keys(self):
        return set(key for key in self.env.universe
                   if self.rng.random() < 0.5)

    def random_expr(self, depth=2):
        """Build a random granular expression over the organisations and the
        constants.

        """
        choice = self.rng.randrange(6 if depth else 3)
        if choice == 0:
            return Name(self.rng.choice(self.env.names()))
        if choice == 1:
            return Top()
        if choice == 2:
            return Bottom()
        if choice == 3:
            return ~self.random_expr(depth - 1)
        if choice == 4:
            return self.random_expr(depth - 1) & self.random_expr(depth - 1)
        return self.random_expr(depth - 1) | self.random_expr(depth - 1)

    def expr_keys(self, expr):
        return set(self.env.bitrop.keys_of(eval_granular(expr, self.env)))

    def test_random_composition(self):
        for _ in range(1000):
            keys = self.random_keys()
            t = make_table(self.env, keys)
            a = self.random_expr()
            b = self.random_expr()
            composed = select(select(t, a, self.env), b, self.env)
            self.assertEqual(composed, select(t, a & b, self.env),
                             "[%s][%s]" % (a, b))
            self.assertEqual(set(composed.keys()),
                             keys & self.expr_keys(a) & self.expr_keys(b))

    def test_against_sets(self):
        for _ in range(1000):
            k1 = self.random_keys()
            k2 = self.random_keys()
            t1 = make_table(self.env, k1)
            t2 = make_table(self.env, k2)
            self.assertEqual(set(union(t1, t2).keys()), k1 | k2)
            self.assertEqual(set(intersection(t1, t2).keys()), k1 & k2)
            even = set(self.env.universe[::2])
            low = set(self.env.universe[:4])
            self.assertEqual(set(select(t1, 'Even & !Low', self.env).keys()),
                             k1 & even - low)
            self.assertEqual(select(select(t1, 'Even', self.env), 'Low',
                                    self.env),
                             select(t1, 'Even & Low', self.env))

if __name__ == '__main__':
    main()
