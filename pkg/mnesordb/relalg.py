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
r"""relalg.py: Set union, intersection and selection on keyed tables.

Tables are relations in a `RelationSpace` whose universe comes from a
membership file.  The membership file also defines a granular for each
organisation: the set of keys which are members of it.  The three table
operations are the mnesor space operations:

 - `union(t1, t2)` is mnesor addition.
 - `intersection(t1, t2)` is mnesor intersection.
 - `select(t, expr)` scales a table by the granular an expression evaluates
   to.

Membership files are CSV files with a header `key,<Org1>,<Org2>,...`, and a
row for each key, with cells `0` or `1`.  Table files have a header
`key[,attribute...]`, and one row per key; an empty cell is a null value.

"""
__docformat__ = "restructuredtext en"

import csv
import io
import logging

from . import errors
from .granularexpr import RESERVED, eval_granular
from .mnesor import RelationSpace

log = logging.getLogger(__name__)

KEY_COLUMN = 'key'

def _is_identifier(name):
    return name.isidentifier() and name.isascii()

def _sort_key(key):
    return key.encode('utf-8')


class MembershipEnv(object):
    """The universe of keys, and the granular of each organisation.

    The universe is held in the order the keys were given (file order).

    """
    def __init__(self, universe, memberships=()):
        self.space = RelationSpace(universe)
        self.bitrop = self.space.bitrop
        self.universe = self.bitrop.universe
        self._keys = frozenset(self.universe)
        self._granulars = {}
        self._names = []
        for name, keys in memberships:
            if name in self._granulars:
                raise ValueError("organisation %r given twice" % (name, ))
            self._granulars[name] = self.bitrop.granular_of(keys)
            self._names.append(name)

    def __repr__(self):
        return '<MembershipEnv %d keys, organisations %s>' % (
            len(self.universe), ', '.join(self._names))

    def __contains__(self, name):
        return name in self._granulars

    def is_key(self, key):
        """Return True iff `key` is in the universe.

        """
        return key in self._keys

    def names(self):
        """Return the organisation names, in the order they were given.

        """
        return tuple(self._names)

    def granular(self, name):
        """Get the granular of an organisation.

        Raises `ResolutionError` for an unknown name.

        """
        try:
            return self._granulars[name]
        except KeyError:
            raise errors.ResolutionError('organisation', name, self._names)

    def organisations_for(self, g):
        """Return the names of the organisations whose granular is `g`.

        """
        return tuple(name for name in self._names if self._granulars[name] == g)


class Table(object):
    """A keyed table.

     - `mnesor` is the relation holding the table's rows.
     - `attributes` is the ordered list of the table's non-key columns.

    """
    __slots__ = 'mnesor', 'attributes'

    def __init__(self, mnesor, attributes=()):
        self.mnesor = mnesor
        self.attributes = tuple(attributes)

    @property
    def space(self):
        return self.mnesor.model

    def __eq__(self, other):
        if not isinstance(other, Table):
            return NotImplemented
        return self.mnesor == other.mnesor and \
            self.attributes == other.attributes

    def __ne__(self, other):
        if not isinstance(other, Table):
            return NotImplemented
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.mnesor, self.attributes))

    def __len__(self):
        return len(self.mnesor.value)

    def __repr__(self):
        return '<Table %s>' % self.mnesor

    def keys(self):
        """Return the keys of the table, sorted bytewise.

        """
        return sorted((key for key, attrs in self.mnesor.value), key=_sort_key)

    def rows(self):
        """Return the rows of the table as `(key, dict)` pairs, sorted by key.

        """
        return sorted(((key, dict(attrs)) for key, attrs in self.mnesor.value),
                      key=lambda row: _sort_key(row[0]))

    def format_csv(self):
        """Return the table in CSV format.

        """
        out = io.StringIO()
        write_table(self, out)
        return out.getvalue()


def make_table(env, rows, attributes=()):
    """Build a table from rows in the universe of `env`.

    Rows are given as for `RelationSpace.relation()`.

    """
    return Table(env.space.relation(rows), attributes)

def _merge_attributes(t1, t2):
    result = list(t1.attributes)
    for name in t2.attributes:
        if name not in result:
            result.append(name)
    return result

def union(t1, t2):
    """Return the union of two tables: mnesor addition.

    Rows sharing a key are merged; conflicting attribute values raise
    `MergeConflictError`.

    """
    return Table(t1.space.add(t1.mnesor, t2.mnesor), _merge_attributes(t1, t2))

def intersection(t1, t2):
    """Return the intersection of two tables: mnesor intersection.

    Rows are identified by key: the result holds the keys common to both
    tables, with the attribute values of both.  Conflicting attribute values
    raise `MergeConflictError`, as for `union`.

    """
    return Table(t1.space.intersect(t1.mnesor, t2.mnesor),
                 _merge_attributes(t1, t2))

def select(t, expr, env):
    """Return the rows of `t` whose keys are in the granular of `expr`.

    `expr` is a granular expression, or its text.

    """
    g = eval_granular(expr, env)
    return Table(t.space.scale(t.mnesor, g), t.attributes)

def _records(fileobj, source):
    """Iterate through the non-blank records of a CSV file, with line numbers.

    """
    reader = csv.reader(fileobj)
    try:
        for record in reader:
            if not record:
                continue
            yield reader.line_num, record
    except csv.Error as e:
        raise errors.MalformedCSVError(str(e), source, reader.line_num)

def _read_header(records, source):
    for line, header in records:
        break
    else:
        raise errors.MalformedCSVError("missing header row", source)
    header = [name.strip() for name in header]
    if header[0] != KEY_COLUMN:
        raise errors.MalformedCSVError("first column must be named %r, not %r"
                                       % (KEY_COLUMN, header[0]), source, line)
    seen = set()
    for name in header:
        if not name:
            raise errors.MalformedCSVError("empty column name", source, line)
        if name in seen:
            raise errors.MalformedCSVError("column %r appears twice" % name,
                                           source, line)
        seen.add(name)
    return header

def _check_length(record, header, source, line):
    if len(record) != len(header):
        raise errors.MalformedCSVError("expected %d cells, got %d" %
                                       (len(header), len(record)),
                                       source, line)

def read_membership(fileobj, source='<membership>'):
    """Read a membership CSV file from an open file object.

    Returns a `MembershipEnv`.

    """
    records = _records(fileobj, source)
    header = _read_header(records, source)
    orgs = header[1:]
    for name in orgs:
        if not _is_identifier(name) or name in RESERVED:
            raise errors.MalformedCSVError(
                "organisation name %r is not usable in expressions" % name,
                source, 1)
    universe = []
    members = dict((name, []) for name in orgs)
    seen = set()
    for line, record in records:
        _check_length(record, header, source, line)
        key = record[0]
        if key in seen:
            raise errors.DuplicateKeyError("key %r appears more than once"
                                           % key, source, line)
        seen.add(key)
        universe.append(key)
        for name, cell in zip(orgs, record[1:]):
            if cell == '1':
                members[name].append(key)
            elif cell != '0':
                raise errors.BadCellError(
                    "cell for key %r, organisation %r must be 0 or 1, not %r"
                    % (key, name, cell), source, line)
    log.debug("%s: %d keys, %d organisations", source, len(universe),
              len(orgs))
    return MembershipEnv(universe, [(name, members[name]) for name in orgs])

def read_table(fileobj, env, source='<table>'):
    """Read a table CSV file from an open file object.

    Keys must belong to the universe of `env`.  Returns a `Table`.

    """
    records = _records(fileobj, source)
    header = _read_header(records, source)
    attributes = header[1:]
    rows = []
    seen = set()
    for line, record in records:
        _check_length(record, header, source, line)
        key = record[0]
        if not env.is_key(key):
            raise errors.UnknownKeyError("key %r is not in the membership "
                                         "universe" % key, source, line)
        if key in seen:
            raise errors.DuplicateKeyError("key %r appears more than once"
                                           % key, source, line)
        seen.add(key)
        rows.append((key, zip(attributes, record[1:])))
    log.debug("%s: %d rows, %d attributes", source, len(rows),
              len(attributes))
    return make_table(env, rows, attributes)

def _open(path):
    try:
        return io.open(path, 'r', encoding='utf-8', newline='')
    except (IOError, OSError) as e:
        raise errors.DataError("can't read file: %s" % e.strerror, path)

def load_membership(path):
    """Load a membership CSV file.

    """
    with _open(path) as fh:
        try:
            return read_membership(fh, path)
        except UnicodeDecodeError as e:
            raise errors.MalformedCSVError("not valid UTF-8: %s" % e, path)

def load_table(path, env):
    """Load a table CSV file, in the universe of `env`.

    """
    with _open(path) as fh:
        try:
            return read_table(fh, env, path)
        except UnicodeDecodeError as e:
            raise errors.MalformedCSVError("not valid UTF-8: %s" % e, path)

def write_table(table, fileobj):
    """Write a table in CSV format, with rows sorted bytewise by key.

    """
    writer = csv.writer(fileobj, lineterminator='\n')
    writer.writerow([KEY_COLUMN] + list(table.attributes))
    for key, attrs in table.rows():
        writer.writerow([key] + [attrs.get(name, '')
                                 for name in table.attributes])
