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
r"""mnesor.py: Mnesor spaces, and the concrete space models.

A mnesor space is a commutative monoid (written `add`, or `+` on mnesors)
which is acted on by a bitrop (`scale`, or `*` with a granular).  The space
must satisfy the absorption property: for every pair of mnesors `x` and `y`
there is a positive granular `alpha` with::

    (x + y) * alpha = x

Given such a granular, the intersection of `x` and `y` is `y * alpha`, and
is written `x & y`.

Models provided:

 - `RelationSpace`: relations keyed by the members of a universe.  A value is
   a set of rows; addition merges rows by key, and scaling by a subset
   granular keeps the rows whose key is in the subset.
 - `TruncatedTropicalSpace`: the integers in [low, 0] with minimum as
   addition, acted on by min-plus granulars in [0, -low], with results capped
   at 0.
 - `ExtendedMinPlusSpace`: the integers in [lo, hi] plus an additive identity
   which lies above every integer.  This model breaks the absorption property
   at the identity.

"""
__docformat__ = "restructuredtext en"

import itertools

from . import errors
from .bitrop import Granular, MinPlusBitrop, SubsetBitrop, scan_for_witness

# The additive identity of `ExtendedMinPlusSpace`, above every integer.
IDENTITY = float('inf')

class Mnesor(object):
    """An element of a mnesor space.

    Mnesors are immutable.  `+` adds two mnesors, `*` scales a mnesor by a
    granular, and `&` intersects two mnesors.

    """
    __slots__ = 'model', 'value'

    def __init__(self, model, value):
        self.model = model
        self.value = value

    def __eq__(self, other):
        if not isinstance(other, Mnesor):
            return NotImplemented
        return self.value == other.value and self.model == other.model

    def __ne__(self, other):
        if not isinstance(other, Mnesor):
            return NotImplemented
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.model, self.value))

    def __add__(self, other):
        if not isinstance(other, Mnesor):
            return NotImplemented
        return self.model.add(self, other)

    def __mul__(self, other):
        if not isinstance(other, Granular):
            return NotImplemented
        return self.model.scale(self, other)

    def __and__(self, other):
        if not isinstance(other, Mnesor):
            return NotImplemented
        return self.model.intersect(self, other)

    def __str__(self):
        return self.model.format_value(self.value)

    def __repr__(self):
        return '<Mnesor %s of %s>' % (self.model.format_value(self.value),
                                      self.model.name_with_params())


class SpaceModel(object):
    """Base class of mnesor space models.

    Subclasses supply the bitrop acting on the space, the operations on raw
    values (`_add`, `_scale`, `_zero`), membership (`_contains`) and the
    canonical enumeration of the carrier (`carrier_size`, `_value_at`).

    A model may also define `oracle_add` and `oracle_intersect`: independent
    implementations of addition and intersection on raw values, which the
    checker compares against the generic operations.

    """
    name = None
    oracle_add = None
    oracle_intersect = None

    def __init__(self, bitrop, signature):
        self.bitrop = bitrop
        self._signature = (self.name, ) + tuple(signature)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SpaceModel):
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
        raise NotImplementedError

    def describe(self):
        return self.name_with_params()

    def format_value(self, value):
        return str(value)

    def carrier_size(self):
        raise NotImplementedError

    def _value_at(self, index):
        raise NotImplementedError

    def _contains(self, value):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _scale(self, value, lam):
        raise NotImplementedError

    def _zero(self):
        raise NotImplementedError

    def carrier_at(self, index):
        return Mnesor(self, self._value_at(index))

    def carrier(self):
        """Iterate through the carrier, in canonical order.

        """
        for index in range(self.carrier_size()):
            yield Mnesor(self, self._value_at(index))

    def mnesor(self, value):
        """Get the mnesor of this space holding the raw `value`.

        Raises `OutOfCarrierError` if the value isn't in the carrier.

        """
        if not self._contains(value):
            raise errors.OutOfCarrierError(
                "%s is outside the carrier of %s" %
                (self.format_value(value), self.describe()), value)
        return Mnesor(self, value)

    def _check(self, *mnesors):
        for m in mnesors:
            if not isinstance(m, Mnesor):
                raise TypeError("expected a Mnesor, got %r" % (m, ))
            if m.model is not self and m.model != self:
                raise errors.ModelMismatchError(
                    "mnesor %s belongs to %s, not %s" %
                    (m, m.model.describe(), self.describe()))

    def zero(self):
        """Get the additive identity of the space.

        """
        return Mnesor(self, self._zero())

    def add(self, x, y):
        """Add two mnesors.

        """
        self._check(x, y)
        return self.mnesor(self._add(x.value, y.value))

    def scale(self, x, lam):
        """Scale a mnesor by a granular of the space's bitrop.

        """
        self._check(x)
        self.bitrop._check(lam)
        return self.mnesor(self._scale(x.value, lam.value))

    def is_prefix(self, x, a):
        """Return True iff `x` is a prefix of `a`, ie `x + a == a`.

        """
        self._check(x, a)
        return self._add(x.value, a.value) == a.value

    def find_orbit_witness(self, x, a):
        """Search for a positive granular `lam` with `a * lam == x`.

        Returns `(witness, beyond)`, as for `bitrop.scan_for_witness()`.

        """
        self._check(x, a)
        target = x.value
        source = a.value
        scale = self._scale
        return scan_for_witness(self.bitrop,
                                lambda lam: scale(source, lam) == target)

    def orbit_witness(self, x, a):
        """Return the least `lam` in B+ with `a * lam == x`, or None.

        """
        return self.find_orbit_witness(x, a)[0]

    def orbit(self, a):
        """Return the distinct mnesors `a * lam` for `lam` in B+.

        Mnesors are returned in the order in which they are first reached,
        scanning B+ in canonical order.  Scalings which leave the carrier are
        left out.

        """
        self._check(a)
        seen = set()
        result = []
        for lam in self.bitrop.positive_cone():
            value = self._scale(a.value, lam.value)
            if value in seen or not self._contains(value):
                continue
            seen.add(value)
            result.append(Mnesor(self, value))
        return result

    def find_absorption_witness(self, x, y):
        """Search for a positive granular `alpha` with `(x + y) * alpha == x`.

        Returns `(witness, beyond)`, as for `bitrop.scan_for_witness()`.

        """
        self._check(x, y)
        target = x.value
        total = self._add(x.value, y.value)
        scale = self._scale
        return scan_for_witness(self.bitrop,
                                lambda alpha: scale(total, alpha) == target)

    def absorption_granular(self, x, y):
        """Return the canonical absorption witness for `x` and `y`.

        Raises `AbsorptionError` if there is no witness, and
        `OutOfCarrierError` if the only witnesses lie beyond the bitrop's
        bounded carrier.

        """
        witness, beyond = self.find_absorption_witness(x, y)
        if witness is not None:
            return witness
        if beyond is not None:
            raise errors.OutOfCarrierError(
                "absorption witness %s for x=%s, y=%s lies beyond the "
                "carrier of %s" % (self.bitrop.format_value(beyond), x, y,
                                   self.bitrop.describe()), beyond)
        raise errors.AbsorptionError(
            "no granular alpha in B+ gives (x + y) * alpha = x for x=%s, "
            "y=%s in %s" % (x, y, self.describe()))

    def intersect(self, x, y):
        """Intersect two mnesors: `y * alpha` for the absorption witness.

        """
        return self.scale(y, self.absorption_granular(x, y))

    def witnesses(self, x, y):
        """Return every granular `lam` of the bitrop carrier (not just B+)
        with `(x + y) * lam == x`, in canonical order.

        """
        self._check(x, y)
        target = x.value
        total = self._add(x.value, y.value)
        return [lam for lam in self.bitrop.carrier()
                if self._scale(total, lam.value) == target]

    def check_axioms(self, **kwargs):
        """Check the bitrop and space properties of this model.

        See `checker.check_model()` for the keyword arguments accepted.

        """
        return check_space_axioms(self, **kwargs)


class RelationSpace(SpaceModel):
    """Relations keyed by the members of a universe.

    A raw value is a frozenset of rows.  Each row is a pair `(key,
    attributes)`, where `attributes` is a sorted tuple of `(name, value)`
    pairs.  Null attribute values aren't stored, so a row without attributes
    is just a key.

    Adding relations merges rows which share a key.  If both rows give a value
    for the same attribute, the values must agree: otherwise
    `MergeConflictError` is raised.  Scaling keeps the rows whose key is in
    the granular.

    The enumerated carrier holds the relations without attributes, one for
    each subset of the universe.

    >>> space = RelationSpace(('Sweden', 'Germany', 'Denmark'))
    >>> a = space.relation(['Sweden', 'Germany'])
    >>> b = space.relation([('Germany', {'capital': 'Berlin'}), 'Denmark'])
    >>> print(a + b)
    {Sweden,Germany(capital=Berlin),Denmark}
    >>> print(b & a)
    {Germany(capital=Berlin)}
    >>> print(a & b)
    {Germany(capital=Berlin)}

    """
    name = 'relation'

    def __init__(self, universe):
        bitrop = SubsetBitrop(universe)
        SpaceModel.__init__(self, bitrop, (bitrop.universe, ))
        self.universe = bitrop.universe
        self._order = dict((key, pos) for pos, key in enumerate(self.universe))

    def name_with_params(self):
        return 'relation[%d]' % len(self.universe)

    def describe(self):
        return 'relations keyed by {%s}' % ','.join(self.universe)

    def _row_order(self, row):
        return self._order[row[0]]

    def format_value(self, value):
        items = []
        for key, attrs in sorted(value, key=self._row_order):
            if attrs:
                items.append('%s(%s)' % (key, ';'.join(
                    '%s=%s' % (name, val) for name, val in attrs)))
            else:
                items.append(key)
        return '{' + ','.join(items) + '}'

    def carrier_size(self):
        return 1 << len(self.universe)

    def _value_at(self, index):
        return frozenset((key, ()) for pos, key in enumerate(self.universe)
                         if index & (1 << pos))

    def _contains(self, value):
        if not isinstance(value, frozenset):
            return False
        seen = set()
        for row in value:
            if not (isinstance(row, tuple) and len(row) == 2):
                return False
            key, attrs = row
            if key not in self._order or key in seen:
                return False
            if not isinstance(attrs, tuple) or list(attrs) != sorted(attrs):
                return False
            seen.add(key)
        return True

    def _zero(self):
        return frozenset()

    def _add(self, a, b):
        if not a or a == b:
            return b
        if not b:
            return a
        merged = {}
        for key, attrs in itertools.chain(sorted(a), sorted(b)):
            current = merged.get(key)
            if current is None:
                merged[key] = dict(attrs)
                continue
            for name, val in attrs:
                old = current.get(name)
                if old is None:
                    current[name] = val
                elif old != val:
                    raise errors.MergeConflictError(key, name, old, val)
        return frozenset((key, tuple(sorted(attrs.items())))
                         for key, attrs in merged.items())

    def _keymask(self, value):
        mask = 0
        for key, attrs in value:
            mask |= 1 << self._order[key]
        return mask

    def _scale(self, value, mask):
        order = self._order
        return frozenset(row for row in value if mask & (1 << order[row[0]]))

    def relation(self, rows):
        """Build a relation from an iterable of rows.

        Each row is either a key, or a pair `(key, attributes)`, where
        `attributes` is a mapping (or a sequence of pairs) from attribute
        names to values.  Attributes whose value is None or the empty string
        are null, and aren't stored.

        Raises `UnknownKeyError` for a key outside the universe, and
        `DuplicateKeyError` for a key given twice.

        """
        result = []
        seen = set()
        for row in rows:
            if isinstance(row, str):
                key, attrs = row, ()
            else:
                key, attrs = row
            if key not in self._order:
                raise errors.UnknownKeyError(
                    "key %r is not in the universe" % (key, ))
            if key in seen:
                raise errors.DuplicateKeyError(
                    "key %r appears more than once" % (key, ))
            seen.add(key)
            if hasattr(attrs, 'items'):
                attrs = attrs.items()
            attrs = tuple(sorted((name, val) for name, val in attrs
                                 if val is not None and val != ''))
            result.append((key, attrs))
        return Mnesor(self, frozenset(result))

    def keys_of(self, x):
        """Get the keys of a relation, in universe order.

        """
        self._check(x)
        return tuple(key for key, attrs in sorted(x.value, key=self._row_order))

    def keymask(self, x):
        """Get the granular holding the keys of a relation.

        """
        self._check(x)
        return Granular(self.bitrop, self._keymask(x.value))

    def find_absorption_witness(self, x, y):
        # Scaling keeps or drops whole rows, so the only possible witnesses
        # contain the keys of x, and the least of them is exactly those keys.
        self._check(x, y)
        mask = self._keymask(x.value)
        if self._scale(self._add(x.value, y.value), mask) == x.value:
            return Granular(self.bitrop, mask), None
        return None, None

    def intersect(self, x, y):
        """Intersect two relations, identifying rows by key.

        The result is `(x + y) * lam`, where `lam` holds the keys common to
        `x` and `y`, so rows keep the attributes of both relations.  For
        relations without attributes this is `y * alpha` for the absorption
        witness `alpha`, but it is also defined (and commutative) when `y`
        carries attributes which `x` lacks.  Conflicting attribute values
        raise `MergeConflictError`, as for addition.

        """
        self._check(x, y)
        mask = self._keymask(x.value) & self._keymask(y.value)
        return self.mnesor(self._scale(self._add(x.value, y.value), mask))

    def find_orbit_witness(self, x, a):
        self._check(x, a)
        mask = self._keymask(x.value)
        if self._scale(a.value, mask) == x.value:
            return Granular(self.bitrop, mask), None
        return None, None

    def oracle_intersect(self, a, b):
        """Intersection as a plain intersection of row sets.

        """
        return a & b


class TruncatedTropicalSpace(SpaceModel):
    """The integers in [low, 0], with minimum as addition.

    The space is acted on by the min-plus bitrop on [0, -low], and scaling
    caps its result at 0 (the additive identity): `x * lam = min(x + lam,
    0)`.  Intersection works out as the maximum.

    >>> space = TruncatedTropicalSpace(-6)
    >>> print(space.mnesor(-3) & space.mnesor(-5))
    -3
    >>> print(space.mnesor(-1) * space.bitrop.granular(5))
    0

    """
    name = 'truncated-tropical'

    def __init__(self, low=-6):
        if not isinstance(low, int):
            raise TypeError("truncated tropical bound must be an integer")
        if low > 0:
            raise ValueError("truncated tropical bound %d must not be "
                             "positive" % low)
        SpaceModel.__init__(self, MinPlusBitrop(0, -low), (low, ))
        self.low = low

    def name_with_params(self):
        return 'truncated-tropical[%d..0]' % self.low

    def describe(self):
        return 'truncated tropical integers on [%d, 0]' % self.low

    def carrier_size(self):
        return 1 - self.low

    def _value_at(self, index):
        return self.low + index

    def _contains(self, value):
        return (isinstance(value, int) and not isinstance(value, bool)
                and self.low <= value <= 0)

    def _zero(self):
        return 0

    def _add(self, a, b):
        return min(a, b)

    def _scale(self, value, lam):
        return min(value + lam, 0)

    def oracle_add(self, a, b):
        return min(a, b)

    def oracle_intersect(self, a, b):
        return max(a, b)


class ExtendedMinPlusSpace(SpaceModel):
    """The integers in [lo, hi] with minimum as addition, plus an identity.

    The identity (`IDENTITY`) lies above every integer, and is fixed by every
    scaling.  Since nothing scales a finite integer to the identity, the
    absorption property fails whenever `x` is the identity and `y` isn't.

    """
    name = 'extended-minplus'

    def __init__(self, lo=-6, hi=6):
        bitrop = MinPlusBitrop(lo, hi)
        SpaceModel.__init__(self, bitrop, (lo, hi))
        self.lo = lo
        self.hi = hi

    def name_with_params(self):
        return 'extended-minplus[%d..%d]' % (self.lo, self.hi)

    def describe(self):
        return 'min-plus integers on [%d, %d] with an identity' % (self.lo,
                                                                   self.hi)

    def format_value(self, value):
        if value == IDENTITY:
            return 'identity'
        return str(value)

    def carrier_size(self):
        return self.hi - self.lo + 2

    def _value_at(self, index):
        if index > self.hi - self.lo:
            return IDENTITY
        return self.lo + index

    def _contains(self, value):
        if value == IDENTITY:
            return True
        return (isinstance(value, int) and not isinstance(value, bool)
                and self.lo <= value <= self.hi)

    def _zero(self):
        return IDENTITY

    def _add(self, a, b):
        return min(a, b)

    def _scale(self, value, lam):
        return value + lam

    def oracle_add(self, a, b):
        return min(a, b)


def add(x, y):
    """Add two mnesors of the same space.

    """
    if not isinstance(x, Mnesor):
        raise TypeError("expected a Mnesor, got %r" % (x, ))
    return x.model.add(x, y)

def scale(x, lam):
    """Scale a mnesor by a granular.

    """
    if not isinstance(x, Mnesor):
        raise TypeError("expected a Mnesor, got %r" % (x, ))
    return x.model.scale(x, lam)

def zero(model):
    return model.zero()

def is_prefix(x, a):
    """Return True iff `x + a == a`.

    """
    return x.model.is_prefix(x, a)

def orbit(a):
    return a.model.orbit(a)

def orbit_witness(x, a):
    """Return the least `lam` in B+ with `a * lam == x`, or None.

    """
    return x.model.orbit_witness(x, a)

def absorption_granular(x, y):
    """Return the canonical absorption witness for `x` and `y`.

    """
    return x.model.absorption_granular(x, y)

def intersect(x, y):
    """Intersect two mnesors of the same space.

    """
    if not isinstance(x, Mnesor):
        raise TypeError("expected a Mnesor, got %r" % (x, ))
    return x.model.intersect(x, y)

def check_space_axioms(model, **kwargs):
    """Check the bitrop and space properties of `model`, returning an
    `AxiomReport`.

    """
    from .checker import check_model
    return check_model(model, **kwargs)
