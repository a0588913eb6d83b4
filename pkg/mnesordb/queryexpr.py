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
r"""queryexpr.py: Query expressions over named tables.

A query combines tables with union (`+`), intersection (`&`) and selection
(a granular expression in square brackets, after a table or parenthesised
query).  Selection binds tightest, then intersection, then union::

    union        := intersection ('+' intersection)*
    intersection := postfix ('&' postfix)*
    postfix      := primary ('[' granular ']')*
    primary      := NAME | '(' union ')'

For example, `europe[NATO] + europe[!NATO]` is the union of the members of
`europe` which are in NATO with those which aren't.

Queries can also be built directly:

>>> q = TableRef('europe')[Name('NATO')] + TableRef('europe')[~Name('NATO')]
>>> q == parse_query('europe[NATO] + europe[!NATO]')
True
>>> print(q)
europe[NATO] + europe[!NATO]

"""
__docformat__ = "restructuredtext en"

from . import errors
from . import relalg
from .granularexpr import GranularExpr, GranularParser, Name

class QueryExpr(object):
    """Base class of query expression nodes.

    """
    __slots__ = ()

    OP_UNION = '+'
    OP_INTERSECTION = '&'

    def evaluate(self, tables, env):
        """Evaluate the query.

         - `tables` maps table names to `relalg.Table` objects.
         - `env` is the `relalg.MembershipEnv` used to resolve organisation
           names in selections.

        Raises `ResolutionError` for an unbound table or organisation name.

        """
        raise NotImplementedError

    def table_names(self):
        """Return the set of table names used in the query.

        """
        result = set()
        for child in self._children():
            result.update(child.table_names())
        return result

    def organisation_names(self):
        """Return the set of organisation names used in the query's
        selections.

        """
        result = set()
        for child in self._children():
            result.update(child.organisation_names())
        return result

    def _children(self):
        return ()

    def _key(self):
        return tuple(getattr(self, attr) for attr in self.__slots__)

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return self._key() != other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __repr__(self):
        return '%s(%s)' % (type(self).__name__,
                           ', '.join(repr(item) for item in self._key()))

    def __str__(self):
        return self._format(0)

    @staticmethod
    def compose(operator, queries):
        """Build a query combining a list of queries with an operator.

        The operator is either QueryExpr.OP_UNION or
        QueryExpr.OP_INTERSECTION.  Entries in `queries` which are None are
        ignored.  The queries are combined from left to right.

        Raises ValueError if there are no queries to combine.

        """
        try:
            cls = {
                QueryExpr.OP_UNION: Union,
                QueryExpr.OP_INTERSECTION: Intersection,
            }[operator]
        except KeyError:
            raise ValueError("unknown operator %r" % (operator, ))
        queries = [q for q in queries if q is not None]
        if not queries:
            raise ValueError("no queries to compose")
        result = queries[0]
        for q in queries[1:]:
            if not isinstance(q, QueryExpr):
                raise TypeError("queries must be QueryExpr objects")
            result = cls(result, q)
        return result

    def __add__(self, other):
        """Return the union of this query with another query.

        """
        if not isinstance(other, QueryExpr):
            return NotImplemented
        return Union(self, other)

    def __and__(self, other):
        """Return the intersection of this query with another query.

        """
        if not isinstance(other, QueryExpr):
            return NotImplemented
        return Intersection(self, other)

    def __getitem__(self, granular):
        """Return the selection of this query by a granular expression.

        """
        if not isinstance(granular, GranularExpr):
            raise TypeError("selections take a GranularExpr, got %r" %
                            (granular, ))
        return Selection(self, granular)

    def _format(self, context):
        raise NotImplementedError


class TableRef(QueryExpr):
    """A reference to a named table.

    """
    __slots__ = 'name',

    def __init__(self, name):
        self.name = name

    def evaluate(self, tables, env):
        try:
            return tables[self.name]
        except KeyError:
            raise errors.ResolutionError('table', self.name, sorted(tables))

    def table_names(self):
        return set((self.name, ))

    def _format(self, context):
        return self.name


class Union(QueryExpr):
    __slots__ = 'left', 'right'

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def _children(self):
        return self.left, self.right

    def evaluate(self, tables, env):
        return relalg.union(self.left.evaluate(tables, env),
                            self.right.evaluate(tables, env))

    def _format(self, context):
        text = '%s + %s' % (self.left._format(0), self.right._format(1))
        if context > 0:
            return '(%s)' % text
        return text


class Intersection(QueryExpr):
    __slots__ = 'left', 'right'

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def _children(self):
        return self.left, self.right

    def evaluate(self, tables, env):
        return relalg.intersection(self.left.evaluate(tables, env),
                                   self.right.evaluate(tables, env))

    def _format(self, context):
        text = '%s & %s' % (self.left._format(1), self.right._format(2))
        if context > 1:
            return '(%s)' % text
        return text


class Selection(QueryExpr):
    """The rows of a query whose keys are in a granular.

    """
    __slots__ = 'operand', 'granular'

    def __init__(self, operand, granular):
        self.operand = operand
        self.granular = granular

    def _children(self):
        return self.operand,

    def organisation_names(self):
        result = QueryExpr.organisation_names(self)
        result.update(self.granular.names())
        return result

    def evaluate(self, tables, env):
        return relalg.select(self.operand.evaluate(tables, env),
                             self.granular, env)

    def _format(self, context):
        return '%s[%s]' % (self.operand._format(2), self.granular)


class QueryParser(GranularParser):
    """Recursive descent parser for query expressions.

    Granular expressions inside selections are parsed by the inherited
    granular expression rules.

    """
    def parse(self):
        expr = self.parse_union()
        if self.peek().kind != 'end':
            self.error(("'&'", "'+'", "'['", 'end of input'))
        return expr

    def parse_union(self):
        operands = [self.parse_intersection()]
        while self.peek().kind == '+':
            self.advance()
            operands.append(self.parse_intersection())
        return QueryExpr.compose(QueryExpr.OP_UNION, operands)

    def parse_intersection(self):
        operands = [self.parse_postfix()]
        while self.peek().kind == '&':
            self.advance()
            operands.append(self.parse_postfix())
        return QueryExpr.compose(QueryExpr.OP_INTERSECTION, operands)

    def parse_postfix(self):
        expr = self.parse_primary()
        while self.peek().kind == '[':
            self.advance()
            granular = self.parse_join()
            self.expect(']', ("'&'", "'|'", "']'"))
            expr = Selection(expr, granular)
        return expr

    def parse_primary(self):
        token = self.peek()
        if token.kind == 'ident':
            self.advance()
            return TableRef(token.text)
        if token.kind == '(':
            self.advance()
            expr = self.parse_union()
            self.expect(')', ("'&'", "'+'", "'['", "')'"))
            return expr
        self.error(("'('", 'identifier'))


def parse_query(text):
    """Parse a query expression.

    >>> parse_query('x & y')
    Intersection(TableRef('x'), TableRef('y'))

    """
    return QueryParser(text).parse()
