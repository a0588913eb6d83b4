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
from mnesordb.granularexpr import parse_granular, eval_granular, tokenise, \
     Name, Top, Bottom, Join, Meet, Complement

class TestParse(TestCase):
    def test_atoms(self):
        self.assertEqual(parse_granular('EU'), Name('EU'))
        self.assertEqual(parse_granular(' TOP '), Top())
        self.assertEqual(parse_granular('BOT'), Bottom())
        self.assertEqual(parse_granular('((EU))'), Name('EU'))

    def test_precedence(self):
        """Complement binds tightest, then meet, then join.

        """
        self.assertEqual(parse_granular('EU | NATO & !EU'),
                         Join(Name('EU'),
                              Meet(Name('NATO'), Complement(Name('EU')))))
        self.assertEqual(parse_granular('(EU | NATO) & EU'),
                         Meet(Join(Name('EU'), Name('NATO')), Name('EU')))
        self.assertEqual(parse_granular('!!EU'),
                         Complement(Complement(Name('EU'))))
        # Binary operators associate to the left.
        self.assertEqual(parse_granular('A & B & C'),
                         Meet(Meet(Name('A'), Name('B')), Name('C')))

    def test_format(self):
        """Formatting adds only the parentheses which are needed.

        """
        for text in ('EU & !(NATO | TOP)',
                     '(EU | NATO) & BOT',
                     'EU | NATO | TOP',
                     'EU | (NATO | TOP)',
                     'A & B & C',
                     '!!EU'):
            expr = parse_granular(text)
            self.assertEqual(str(expr), text)
            self.assertEqual(parse_granular(str(expr)), expr)
        self.assertEqual(str(parse_granular('(EU)&(NATO)')), 'EU & NATO')

    def test_names(self):
        expr = parse_granular('EU & !(NATO | TOP) | EU')
        self.assertEqual(expr.names(), set(('EU', 'NATO')))
        self.assertEqual(Top().names(), set())

    def test_tokens(self):
        self.assertEqual([(t.kind, t.position) for t in tokenise('a|(b)')],
                         [('ident', 0), ('|', 1), ('(', 2), ('ident', 3),
                          (')', 4), ('end', 5)])


class TestParseErrors(TestCase):
    def parse_error(self, text):
        try:
            parse_granular(text)
        except mnesordb.ParseError as e:
            self.assertEqual(e.text, text)
            return e
        self.fail("expected ParseError for %r" % text)

    def test_missing_operand(self):
        e = self.parse_error('EU &')
        self.assertEqual(e.position, 4)
        self.assertEqual(e.expected, ("'!'", "'('", 'identifier'))
        self.assertEqual(e.found, 'end of input')

    def test_missing_operator(self):
        e = self.parse_error('EU NATO')
        self.assertEqual(e.position, 3)
        self.assertEqual(e.expected, ("'&'", "'|'", 'end of input'))
        self.assertEqual(e.found, "identifier 'NATO'")
        self.assertEqual(str(e), "syntax error at position 3: expected "
                         "'&' or '|' or end of input, found identifier 'NATO'")

    def test_unclosed(self):
        e = self.parse_error('(EU')
        self.assertEqual(e.position, 3)
        self.assertEqual(e.expected, ("'&'", "')'", "'|'"))

    def test_bad_character(self):
        e = self.parse_error('EU # NATO')
        self.assertEqual(e.position, 3)
        self.assertEqual(e.found, "character '#'")

    def test_empty(self):
        e = self.parse_error('   ')
        self.assertEqual(e.position, 3)
        self.assertEqual(e.found, 'end of input')

    def test_not_text(self):
        self.assertRaises(TypeError, parse_granular, None)


class TestEvaluate(TestCase):
    def pre_test(self):
        self.env = self.membership()
        self.b = self.env.bitrop

    def keys(self, text):
        return self.b.keys_of(eval_granular(text, self.env))

    def test_evaluate(self):
        self.assertEqual(self.keys('EU'),
                         ('Sweden', 'Germany', 'Denmark', 'France'))
        self.assertEqual(self.keys('EU & !NATO'), ('Sweden', ))
        self.assertEqual(self.keys('!EU'), ('Australia', ))
        self.assertEqual(self.keys('EU | NATO'), self.keys('EU'))
        self.assertEqual(self.keys('TOP'), self.env.universe)
        self.assertEqual(self.keys('BOT'), ())
        self.assertEqual(self.keys('!(EU | !EU)'), ())

    def test_expression_objects(self):
        """Built expressions evaluate like parsed ones.

        """
        expr = Name('NATO') & ~Name('EU')
        self.assertEqual(eval_granular(expr, self.env), self.b.bottom())
        self.assertEqual(eval_granular(Name('EU') | Top(), self.env),
                         self.b.tau())

    def test_unknown_name(self):
        try:
            eval_granular('EU & OECD', self.env)
        except mnesordb.ResolutionError as e:
            self.assertEqual(e.name, 'OECD')
            self.assertEqual(e.known, ('EU', 'NATO'))
            self.assertEqual(str(e),
                             "unknown organisation 'OECD' (known: EU, NATO)")
        else:
            self.fail("expected ResolutionError")

    def test_organisations_for(self):
        nato = eval_granular('NATO', self.env)
        self.assertEqual(self.env.organisations_for(nato), ('NATO', ))
        self.assertEqual(self.env.organisations_for(self.b.tau()), ())

if __name__ == '__main__':
    main()
