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
r"""bitrop.py: Bitrops, and the concrete bitrop models.

A bitrop is a set with a commutative addition (written `oplus`, or `+` on
granulars), a distributive multiplication (`otimes`, or `*`) and a centre
`tau` satisfying::

    x * tau = x
    tau + tau = tau

The elements of a bitrop are called granulars.  Granulars for which
`lam + tau == tau` form the positive cone, B+.

Granulars are stored extensionally, so every law is a decidable equality:

 - `SubsetBitrop` stores a subset of a fixed, ordered universe of keys as a
   bit mask (bit `i` set means that `universe[i]` is a member).  Addition is
   union, multiplication is intersection, and the centre is the full
   universe.
 - `MinPlusBitrop` stores a bounded integer.  Addition is the minimum,
   multiplication is integer addition, and the centre is 0.  The bounded range
   stands in for the (infinite) integers: a multiplication whose result falls
   outside the range raises `OutOfCarrierError` rather than wrapping or
   clamping.

"""
__docformat__ = "restructuredtext en"

from . import errors

class Granular(object):
    """An element of a bitrop model.

    Granulars are immutable, and may only be combined with granulars from the
    same model: combining granulars from two different models raises
    `ModelMismatchError`.

    >>> b = MinPlusBitrop(-8, 8)
    >>> b.granular(3) + b.granular(5)
    <Granular 3 of minplus[-8..8]>
    >>> b.granular(3) * b.granular(4)
    <Granular 7 of minplus[-8..8]>

    """
    __slots__ = 'model', 'value'

    def __init__(self, model, value):
        self.model = model
        self.value = value

    def __eq__(self, other):
        if not isinstance(other, Granular):
            return NotImplemented
        return self.value == other.value and self.model == other.model

    def __ne__(self, other):
        if not isinstance(other, Granular):
            return NotImplemented
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.model, self.value))

    def __add__(self, other):
        if not isinstance(other, Granular):
            return NotImplemented
        return self.model.oplus(self, other)

    def __mul__(self, other):
        if not isinstance(other, Granular):
            return NotImplemented
        return self.model.otimes(self, other)

    def __str__(self):
        return self.model.format_value(self.value)

    def __repr__(self):
        return '<Granular %s of %s>' % (self.model.format_value(self.value),
                                        self.model.name_with_params())


def scan_for_witness(model, matches):
    """Search the positive cone of `model` for a granular satisfying a test.

    `matches` is called with raw values (not Granular objects), in canonical
    order.  Returns a tuple `(witness, beyond)`:

     - `witness` is the first matching positive granular, or None.
     - `beyond` is None unless there is no witness in the carrier but a
       positive value beyond the carrier's bound matches, in which case it is
       that value.  This only happens for truncated carriers.

    """
    for index in range(model.positive_size()):
        value = model._positive_value_at(index)
        if matches(value):
            return Granular(model, value), None
    for value in model.extended_positive_values():
        if matches(value):
            return None, value
    return None, None


class BitropModel(object):
    """Base class of bitrop models.

    Subclasses implement the operations on raw values (`_oplus`, `_otimes`,
    `_tau`), membership of the carrier (`_contains`), and the canonical
    enumeration of the carrier (`carrier_size` and `_value_at`).  The public
    operations check that their arguments belong to this model, and that
    their results stay in the carrier.

    Two models are equal if they are of the same kind and have the same
    parameters, so a granular built by one instance may be combined with
    granulars of an equal instance.

    """
    name = None

    # True if the carrier is a bounded stand-in for an infinite one.
    truncated = False

    def __init__(self, signature):
        self._signature = (self.name, ) + tuple(signature)
        self._positive = None

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, BitropModel):
            return NotImplemented
        return self._signature == other._signature

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._signature)

    def __repr__(self):
        return '<%s %s>' % (type(self).__name__, self.describe())

    def name_with_params(self):
        """Return a short identifier for the model, including its parameters.

        """
        raise NotImplementedError

    def describe(self):
        """Return a human readable description of the model.

        """
        return self.name_with_params()

    def format_value(self, value):
        """Format a raw value of the carrier for display.

        """
        return str(value)

    def carrier_size(self):
        raise NotImplementedError

    def _value_at(self, index):
        raise NotImplementedError

    def _contains(self, value):
        raise NotImplementedError

    def _oplus(self, a, b):
        raise NotImplementedError

    def _otimes(self, a, b):
        raise NotImplementedError

    def _tau(self):
        raise NotImplementedError

    def carrier_at(self, index):
        """Get the granular at position `index` in canonical carrier order.

        """
        return Granular(self, self._value_at(index))

    def carrier(self):
        """Iterate through the carrier, in canonical order.

        """
        for index in range(self.carrier_size()):
            yield Granular(self, self._value_at(index))

    def _positive_values(self):
        if self._positive is None:
            tau = self._tau()
            self._positive = tuple(
                value for value in (self._value_at(index)
                                    for index in range(self.carrier_size()))
                if self._oplus(value, tau) == tau)
        return self._positive

    def positive_size(self):
        """Get the number of granulars in the positive cone, B+.

        """
        return len(self._positive_values())

    def _positive_value_at(self, index):
        return self._positive_values()[index]

    def positive_at(self, index):
        """Get the granular at position `index` of the positive cone.

        """
        return Granular(self, self._positive_value_at(index))

    def positive_cone(self):
        """Iterate through the positive cone, in canonical order.

        """
        for index in range(self.positive_size()):
            yield Granular(self, self._positive_value_at(index))

    def extended_positive_values(self):
        """Return raw positive values lying beyond the carrier's bound.

        These are only used when searching for witnesses, to tell apart a
        witness which doesn't exist from one which exists but can't be
        represented in the bounded carrier.

        """
        return ()

    def granular(self, value):
        """Get the granular of this model holding the raw `value`.

        Raises `OutOfCarrierError` if the value isn't in the carrier.

        """
        if not self._contains(value):
            raise errors.OutOfCarrierError(
                "%s is outside the carrier of %s" %
                (self.format_value(value), self.describe()), value)
        return Granular(self, value)

    def _check(self, *granulars):
        """Check that the supplied granulars belong to this model.

        """
        for g in granulars:
            if not isinstance(g, Granular):
                raise TypeError("expected a Granular, got %r" % (g, ))
            if g.model is not self and g.model != self:
                raise errors.ModelMismatchError(
                    "granular %s belongs to %s, not %s" %
                    (g, g.model.describe(), self.describe()))

    def oplus(self, a, b):
        """Add two granulars.

        """
        self._check(a, b)
        return self.granular(self._oplus(a.value, b.value))

    def otimes(self, a, b):
        """Multiply two granulars.

        """
        self._check(a, b)
        return self.granular(self._otimes(a.value, b.value))

    def tau(self):
        """Get the centre of the bitrop.

        """
        return Granular(self, self._tau())

    def is_positive(self, lam):
        """Return True iff `lam + tau == tau`.

        """
        self._check(lam)
        tau = self._tau()
        return self._oplus(lam.value, tau) == tau

    def find_absorption_witness(self, x, y):
        """Search for a granular absorbing `y` into `x`.

        Returns `(witness, beyond)`, as for `scan_for_witness()`: the witness
        is the least alpha in B+ (in canonical order) such that
        `(x + y) * alpha == x`.

        """
        self._check(x, y)
        target = x.value
        total = self._oplus(x.value, y.value)
        otimes = self._otimes
        return scan_for_witness(self, lambda alpha: otimes(total, alpha) == target)

    def absorption_witness(self, x, y):
        """Return the least alpha in B+ with `(x + y) * alpha == x`.

        Returns None if there is no such granular in the carrier.

        """
        return self.find_absorption_witness(x, y)[0]

    def check_axioms(self, **kwargs):
        """Check the bitrop properties of this model.

        See `checker.check_model()` for the keyword arguments accepted.

        """
        return check_bitrop_axioms(self, **kwargs)


class SubsetBitrop(BitropModel):
    """The bitrop of subsets of a fixed universe of keys.

    >>> b = SubsetBitrop(('Sweden', 'Germany', 'France'))
    >>> sweden = b.granular_of(['Sweden'])
    >>> germany = b.granular_of(['Germany'])
    >>> print(sweden + germany)
    {Sweden,Germany}
    >>> print(b.granular_of(['Sweden', 'Germany']) * b.granular_of(['Germany', 'France']))
    {Germany}
    >>> print(b.tau())
    {Sweden,Germany,France}

    """
    name = 'subset'

    def __init__(self, universe):
        universe = tuple(universe)
        index = {}
        for pos, key in enumerate(universe):
            if key in index:
                raise ValueError("key %r appears twice in the universe" % (key, ))
            index[key] = pos
        self.universe = universe
        self._index = index
        self._full = (1 << len(universe)) - 1
        BitropModel.__init__(self, (universe, ))

    def name_with_params(self):
        return 'subset[%d]' % len(self.universe)

    def describe(self):
        return 'subset bitrop over {%s}' % ','.join(self.universe)

    def format_value(self, value):
        return '{' + ','.join(self._keys(value)) + '}'

    def carrier_size(self):
        return self._full + 1

    def _value_at(self, index):
        return index

    def _contains(self, value):
        return (isinstance(value, int) and not isinstance(value, bool)
                and 0 <= value <= self._full)

    def positive_size(self):
        # Every subset is contained in the full universe.
        return self._full + 1

    def _positive_value_at(self, index):
        return index

    def _oplus(self, a, b):
        return a | b

    def _otimes(self, a, b):
        return a & b

    def _tau(self):
        return self._full

    def _keys(self, mask):
        return tuple(key for pos, key in enumerate(self.universe)
                     if mask & (1 << pos))

    def mask_of(self, keys):
        """Get the bit mask for an iterable of keys.

        Raises `UnknownKeyError` if a key isn't in the universe.

        """
        mask = 0
        for key in keys:
            try:
                mask |= 1 << self._index[key]
            except KeyError:
                raise errors.UnknownKeyError(
                    "key %r is not in the universe" % (key, ))
        return mask

    def granular_of(self, keys):
        """Get the granular holding the given keys.

        """
        return Granular(self, self.mask_of(keys))

    def keys_of(self, g):
        """Get the keys in a granular, in universe order.

        """
        self._check(g)
        return self._keys(g.value)

    def bottom(self):
        """Get the empty granular.

        """
        return Granular(self, 0)

    def complement(self, g):
        """Get the complement of a granular, relative to the universe.

        """
        self._check(g)
        return Granular(self, self._full & ~g.value)

    def find_absorption_witness(self, x, y):
        # (x | y) & x == x always holds, and no smaller mask contains x.
        self._check(x, y)
        return Granular(self, x.value), None


class MinPlusBitrop(BitropModel):
    """The min-plus integers, bounded to the range [lo, hi].

    >>> b = MinPlusBitrop(-8, 8)
    >>> b.is_positive(b.granular(4)), b.is_positive(b.granular(-2))
    (True, False)
    >>> b.absorption_witness(b.granular(5), b.granular(2))
    <Granular 3 of minplus[-8..8]>

    Multiplication is checked addition:

    >>> b.granular(6) * b.granular(5)
    Traceback (most recent call last):
    ...
    mnesordb.errors.OutOfCarrierError: 11 is outside the carrier of min-plus integers on [-8, 8]

    """
    name = 'minplus'
    truncated = True

    def __init__(self, lo, hi):
        if not (isinstance(lo, int) and isinstance(hi, int)):
            raise TypeError("min-plus bounds must be integers")
        if not lo <= 0 <= hi:
            raise ValueError("min-plus range [%d, %d] must contain the "
                             "centre 0" % (lo, hi))
        self.lo = lo
        self.hi = hi
        BitropModel.__init__(self, (lo, hi))

    def name_with_params(self):
        return 'minplus[%d..%d]' % (self.lo, self.hi)

    def describe(self):
        return 'min-plus integers on [%d, %d]' % (self.lo, self.hi)

    def carrier_size(self):
        return self.hi - self.lo + 1

    def _value_at(self, index):
        return self.lo + index

    def _contains(self, value):
        return (isinstance(value, int) and not isinstance(value, bool)
                and self.lo <= value <= self.hi)

    def positive_size(self):
        return self.hi + 1

    def _positive_value_at(self, index):
        return index

    def extended_positive_values(self):
        # Differences of two carrier values never exceed hi - lo.
        return range(self.hi + 1, self.hi + (self.hi - self.lo) + 1)

    def _oplus(self, a, b):
        return min(a, b)

    def _otimes(self, a, b):
        return a + b

    def _tau(self):
        return 0


def oplus(a, b):
    """Add two granulars of the same model.

    """
    if not isinstance(a, Granular):
        raise TypeError("expected a Granular, got %r" % (a, ))
    return a.model.oplus(a, b)

def otimes(a, b):
    """Multiply two granulars of the same model.

    """
    if not isinstance(a, Granular):
        raise TypeError("expected a Granular, got %r" % (a, ))
    return a.model.otimes(a, b)

def tau(model):
    """Get the centre of a bitrop model.

    """
    return model.tau()

def is_positive(lam):
    """Return True iff `lam` is in the positive cone of its model.

    """
    return lam.model.is_positive(lam)

def bitrop_absorption_witness(x, y):
    """Return the least alpha in B+ with `(x + y) * alpha == x`, or None.

    """
    return x.model.absorption_witness(x, y)

def check_bitrop_axioms(model, **kwargs):
    """Check the bitrop properties of `model`, returning an `AxiomReport`.

    """
    from .checker import check_model
    kwargs.setdefault('only', ('bitrop', ))
    return check_model(model, **kwargs)
