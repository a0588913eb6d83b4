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
from mnesordb.granularexpr import Name
from mnesordb.queryexpr import parse_query, QueryExpr, TableRef, Union, \
     Intersection, Selection

class TestQueryParse(TestCase):
    def test_precedence(self):
        """Selection binds tightest, then intersection, then union.

        """
        self.assertEqual(parse_query('a + b & c[EU]'),
                         Union(TableRef('a'),
                               Intersection(TableRef('b'),
                                            Selection(TableRef('c'),
                                                      Name('EU')))))
        self.assertEqual(parse_query('(a + b)[NATO][EU]'),
                         Selection(Selection(Union(TableRef('a'),
                                                   TableRef('b')),
                                             Name('NATO')),
                                   Name('EU')))
        # Binary operators associate to the left.
        a, b, c = TableRef('a'), TableRef('b'), TableRef('c')
        self.assertEqual(parse_query('a + b + c'), Union(Union(a, b), c))
        self.assertEqual(parse_query('a & b & c'),
                         Intersection(Intersection(a, b), c))

    def test_format(self):
        for text in ('a + b + c',
                     'a + (b + c)',
                     '(a + b) & c',
                     'a & b[EU | NATO]',
                     '(a & b)[!EU]',
                     'europe[NATO] + europe[!NATO]'):
            self.assertEqual(str(parse_query(text)), text)

    def test_names(self):
        q = parse_query('(a + b)[NATO] & a[EU & !NATO]')
        self.assertEqual(q.table_names(), set(('a', 'b')))
        self.assertEqual(q.organisation_names(), set(('EU', 'NATO')))

    def test_compose(self):
        a, b, c = TableRef('a'), TableRef('b'), TableRef('c')
        self.assertEqual(QueryExpr.compose(QueryExpr.OP_UNION, [a, None, b, c]),
                         parse_query('a + b + c'))
        self.assertEqual(QueryExpr.compose(QueryExpr.OP_INTERSECTION, [a]), a)
        self.assertEqual(a & b[Name('EU')], parse_query('a & b[EU]'))
        self.assertRaises(ValueError, QueryExpr.compose, QueryExpr.OP_UNION,
                          [None])
        self.assertRaises(ValueError, QueryExpr.compose, '-', [a, b])
        self.assertRaises(TypeError, lambda: a['EU'])

    def parse_error(self, text):
        try:
            parse_query(text)
        except mnesordb.ParseError as e:
            return e
        self.fail("expected ParseError for %r" % text)

    def test_errors(self):
        e = self.parse_error('a b')
        self.assertEqual((e.position, e.expected),
                         (2, ("'&'", "'+'", "'['", 'end of input')))
        e = self.parse_error('a[EU')
        self.assertEqual((e.position, e.expected),
                         (4, ("'&'", "']'", "'|'")))
        e = self.parse_error('(a')
        self.assertEqual((e.position, e.expected),
                         (2, ("'&'", "')'", "'+'", "'['")))
        e = self.parse_error('+a')
        self.assertEqual((e.position, e.expected, e.found),
                         (0, ("'('", 'identifier'), "'+'"))
        e = self.parse_error('a[]')
        self.assertEqual((e.position, e.found), (2, "']'"))


class TestQueryEvaluate(TestCase):
    def pre_test(self):
        self.env = self.membership()
        self.tables = dict((name, self.fixture_table(self.env, name))
                           for name in ('a', 'b', 'x', 'y', 'europe'))

    def run_query(self, text):
        return parse_query(text).evaluate(self.tables, self.env)

    def test_evaluate(self):
        self.assertEqual(self.run_query('a + b').keys(),
                         ['France', 'Germany', 'Sweden'])
        self.assertEqual(self.run_query('x & y').keys(), ['Germany'])
        self.assertEqual(self.run_query('europe[NATO] + europe[!NATO]'),
                         self.tables['europe'])
        self.assertEqual(self.run_query('(a + b)[NATO]').keys(),
                         ['France', 'Germany'])
        self.assertEqual(self.run_query('(a + b) & europe[EU & !NATO]').keys(),
                         ['Sweden'])

    def test_unknown_names(self):
        try:
            self.run_query('a + z')
        except mnesordb.ResolutionError as e:
            self.assertEqual(e.name, 'z')
            self.assertEqual(e.known, ('a', 'b', 'europe', 'x', 'y'))
        else:
            self.fail("expected ResolutionError")
        self.assertRaises(mnesordb.ResolutionError, self.run_query, 'a[G7]')

if __name__ == '__main__':
    main()
