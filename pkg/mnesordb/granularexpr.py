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
r"""granularexpr.py: Boolean expressions over organisation names.

A granular expression names a granular of a membership environment's subset
bitrop.  The syntax, from loosest to tightest binding, is::

    join  := meet ('|' meet)*
    meet  := unary ('&' unary)*
    unary := '!' unary | atom
    atom  := NAME | 'TOP' | 'BOT' | '(' join ')'

`|` is the bitrop's addition (union), `&` its multiplication (intersection),
and `!` the complement relative to the universe.  `TOP` is the centre of the
bitrop (the whole universe), and `BOT` the empty granular.

Expressions can also be built directly, combining nodes with `|`, `&` and
`~`:

>>> Name('EU') & ~Name('NATO')
Meet(Name('EU'), Complement(Name('NATO')))
>>> parse_granular('EU & !NATO') == Name('EU') & ~Name('NATO')
True

"""
__docformat__ = "restructuredtext en"

import collections
import re

from . import errors

# Names reserved for the constants.
RESERVED = ('TOP', 'BOT')

_ident_re = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')
_space_re = re.compile(r'\s*')
_punctuation = '|&!()+[]'

Token = collections.namedtuple('Token', 'kind text position')

def tokenise(text):
    """Split an expression into tokens.

    Punctuation tokens have the punctuation character as their kind;
    identifiers have the kind 'ident'.  A character which can't start a token
    gives a token of kind 'invalid', so that the parser can report what it
    expected at that point.  The last token always has kind 'end'.

    """
    tokens = []
    pos = _space_re.match(text, 0).end()
    while pos < len(text):
        char = text[pos]
        mo = _ident_re.match(text, pos)
        if mo is not None:
            tokens.append(Token('ident', mo.group(), pos))
            pos = mo.end()
        elif char in _punctuation:
            tokens.append(Token(char, char, pos))
            pos += 1
        else:
            tokens.append(Token('invalid', char, pos))
            pos += 1
        pos = _space_re.match(text, pos).end()
    tokens.append(Token('end', '', len(text)))
    return tokens

def describe_token(token):
    if token.kind == 'end':
        return 'end of input'
    if token.kind == 'ident':
        return 'identifier %r' % token.text
    if token.kind == 'invalid':
        return 'character %r' % token.text
    return "'%s'" % token.text


class GranularExpr(object):
    """Base class of granular expression nodes.

    """
    __slots__ = ()

    def evaluate(self, env):
        """Evaluate the expression to a granular.

        `env` must have a `bitrop` attribute (a `SubsetBitrop`) and a
        `granular(name)` method, which raises `ResolutionError` for an
        unknown name.

        """
        raise NotImplementedError

    def names(self):
        """Return the set of organisation names used in the expression.

        """
        result = set()
        for child in self._children():
            result.update(child.names())
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

    def __or__(self, other):
        if not isinstance(other, GranularExpr):
            return NotImplemented
        return Join(self, other)

    def __and__(self, other):
        if not isinstance(other, GranularExpr):
            return NotImplemented
        return Meet(self, other)

    def __invert__(self):
        return Complement(self)

    def _format(self, context):
        raise NotImplementedError


class Name(GranularExpr):
    """The granular of a named organisation.

    """
    __slots__ = 'name',

    def __init__(self, name):
        self.name = name

    def evaluate(self, env):
        return env.granular(self.name)

    def names(self):
        return set((self.name, ))

    def _format(self, context):
        return self.name


class Top(GranularExpr):
    """The centre of the bitrop: every key in the universe.

    """
    __slots__ = ()

    def evaluate(self, env):
        return env.bitrop.tau()

    def _format(self, context):
        return 'TOP'


class Bottom(GranularExpr):
    """The empty granular.

    """
    __slots__ = ()

    def evaluate(self, env):
        return env.bitrop.bottom()

    def _format(self, context):
        return 'BOT'


class Join(GranularExpr):
    __slots__ = 'left', 'right'

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def _children(self):
        return self.left, self.right

    def evaluate(self, env):
        return env.bitrop.oplus(self.left.evaluate(env),
                                self.right.evaluate(env))

    def _format(self, context):
        text = '%s | %s' % (self.left._format(0), self.right._format(1))
        if context > 0:
            return '(%s)' % text
        return text


class Meet(GranularExpr):
    __slots__ = 'left', 'right'

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def _children(self):
        return self.left, self.right

    def evaluate(self, env):
        return env.bitrop.otimes(self.left.evaluate(env),
                                 self.right.evaluate(env))

    def _format(self, context):
        text = '%s & %s' % (self.left._format(1), self.right._format(2))
        if context > 1:
            return '(%s)' % text
        return text


class Complement(GranularExpr):
    __slots__ = 'operand',

    def __init__(self, operand):
        self.operand = operand

    def _children(self):
        return self.operand,

    def evaluate(self, env):
        return env.bitrop.complement(self.operand.evaluate(env))

    def _format(self, context):
        return '!' + self.operand._format(2)


class GranularParser(object):
    """Recursive descent parser for granular expressions.

    Syntax errors raise `ParseError`, giving the position of the offending
    token and the tokens which would have been acceptable there.

    """
    def __init__(self, text):
        if not isinstance(text, str):
            raise TypeError("expected an expression string, got %r" % (text, ))
        self.text = text
        self.tokens = tokenise(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        if token.kind != 'end':
            self.pos += 1
        return token

    def error(self, expected):
        token = self.peek()
        raise errors.ParseError(self.text, token.position,
                                sorted(set(expected)), describe_token(token))

    def expect(self, kind, expected):
        if self.peek().kind != kind:
            self.error(expected)
        return self.advance()

    def parse(self):
        """Parse the whole text as a granular expression.

        """
        expr = self.parse_join()
        if self.peek().kind != 'end':
            self.error(("'&'", "'|'", 'end of input'))
        return expr

    def parse_join(self):
        expr = self.parse_meet()
        while self.peek().kind == '|':
            self.advance()
            expr = Join(expr, self.parse_meet())
        return expr

    def parse_meet(self):
        expr = self.parse_unary()
        while self.peek().kind == '&':
            self.advance()
            expr = Meet(expr, self.parse_unary())
        return expr

    def parse_unary(self):
        if self.peek().kind == '!':
            self.advance()
            return Complement(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self):
        token = self.peek()
        if token.kind == 'ident':
            self.advance()
            if token.text == 'TOP':
                return Top()
            if token.text == 'BOT':
                return Bottom()
            return Name(token.text)
        if token.kind == '(':
            self.advance()
            expr = self.parse_join()
            self.expect(')', ("'&'", "'|'", "')'"))
            return expr
        self.error(("'!'", "'('", 'identifier'))


def parse_granular(text):
    """Parse a granular expression.

    >>> parse_granular('EU | (NATO & !TOP)')
    Join(Name('EU'), Meet(Name('NATO'), Complement(Top())))

    """
    return GranularParser(text).parse()

def eval_granular(expr, env):
    """Evaluate a granular expression (or its text) in an environment.

    """
    if isinstance(expr, str):
        expr = parse_granular(expr)
    return expr.evaluate(env)
