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
r"""errors.py: Exceptions for the mnesor algebra and query layer.

"""
__docformat__ = "restructuredtext en"

__all__ = (
    'MnesorError',
    'ModelMismatchError',
    'OutOfCarrierError',
    'AbsorptionError',
    'CheckError',
    'CaseLimitError',
    'StaleCounterexampleError',
    'QueryError',
    'ParseError',
    'ResolutionError',
    'DataError',
    'MalformedCSVError',
    'DuplicateKeyError',
    'UnknownKeyError',
    'BadCellError',
    'MergeConflictError',
)

class MnesorError(Exception):
    r"""Base class for exceptions thrown by mnesordb.

    Any errors raised deliberately by the algebra, the checker or the query
    layer will be instances of this class or its subclasses.

    """

class ModelMismatchError(MnesorError):
    r"""Class used to report an attempt to combine values which belong to
    different models.

    """

class OutOfCarrierError(MnesorError):
    r"""Class used to report a value which lies beyond the bounds of a finite
    carrier.

    Bounded integer carriers stand in for infinite ones, so this usually means
    that a result (or a witness) exists, but not within the enumerated range.

    """
    def __init__(self, msg, value=None):
        MnesorError.__init__(self, msg)
        self.value = value

class AbsorptionError(MnesorError):
    r"""Class used to report that no granular satisfies the absorption
    property for a pair of mnesors.

    """
    def __init__(self, msg, prop='space-absorption'):
        MnesorError.__init__(self, msg)
        self.prop = prop

class CheckError(MnesorError):
    r"""Class used to report errors relating to the axiom checker.

    """

class CaseLimitError(CheckError):
    r"""Class used to report that an exhaustive check would enumerate more
    cases than allowed.

    """
    def __init__(self, cases, limit):
        CheckError.__init__(self, "exhaustive check needs %d cases, which "
                            "exceeds the limit of %d" % (cases, limit))
        self.cases = cases
        self.limit = limit

class StaleCounterexampleError(CheckError):
    r"""Class used to report a counterexample whose values do not belong to
    the model it is being verified against.

    """

class QueryError(MnesorError):
    r"""Class used to report errors relating to granular or query expressions.

    """

class ParseError(QueryError):
    r"""Class used to report a syntax error in an expression.

     - `text` is the expression being parsed.
     - `position` is the offset (starting at 0) of the offending token.
     - `expected` is a sorted tuple of descriptions of the tokens which would
       have been acceptable at that position.

    """
    def __init__(self, text, position, expected, found):
        msg = "syntax error at position %d: expected %s, found %s" % (
            position, ' or '.join(expected), found)
        QueryError.__init__(self, msg)
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        self.found = found

class ResolutionError(QueryError):
    r"""Class used to report a name which doesn't resolve.

    """
    def __init__(self, kind, name, known):
        known = tuple(known)
        if known:
            msg = "unknown %s %r (known: %s)" % (kind, name, ', '.join(known))
        else:
            msg = "unknown %s %r (none defined)" % (kind, name)
        QueryError.__init__(self, msg)
        self.name = name
        self.known = known

class DataError(MnesorError):
    r"""Class used to report errors in input data.

    `source` and `line` are filled in when the error relates to a particular
    line of a named file (or stream).

    """
    def __init__(self, msg, source=None, line=None):
        if source is not None:
            if line is not None:
                msg = "%s:%d: %s" % (source, line, msg)
            else:
                msg = "%s: %s" % (source, msg)
        MnesorError.__init__(self, msg)
        self.source = source
        self.line = line

class MalformedCSVError(DataError):
    r"""Class used to report a CSV file which can't be parsed.

    """

class DuplicateKeyError(DataError):
    r"""Class used to report a key which appears on more than one row.

    """

class UnknownKeyError(DataError):
    r"""Class used to report a key which isn't in the membership universe.

    """

class BadCellError(DataError):
    r"""Class used to report a membership cell which isn't `0` or `1`.

    """

class MergeConflictError(DataError):
    r"""Class used to report two rows for one key which disagree on the value
    of an attribute.

    """
    def __init__(self, key, attribute, value1, value2):
        DataError.__init__(self, "conflicting values for key %r, attribute "
                           "%r: %r and %r" % (key, attribute, value1, value2))
        self.key = key
        self.attribute = attribute
        self.values = (value1, value2)
