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
r"""laws.py: The registry of properties checked by the axiom checker.

Each property is a function taking the model it applies to (a bitrop model for
the bitrop properties, a space model for the others), followed by one value
per quantified variable.  It returns None if the property holds for those
values, or a pair `(lhs, rhs)` describing the violation.

A property may raise `OutOfCarrierError` to say that the case can't be
evaluated within a bounded carrier: such cases are counted as skipped.  If an
intersection is undefined (`AbsorptionError`), the case counts as a violation.

Properties are registered with the `law` decorator, in the order in which
they're reported.

"""
__docformat__ = "restructuredtext en"

from . import errors
from .bitrop import BitropModel
from .mnesor import SpaceModel

# Kinds of quantified variable.
GRANULAR = 'granular'
POSITIVE = 'positive'
MNESOR = 'mnesor'

class Domain(object):
    """A finite, indexed domain for one quantified variable.

    """
    __slots__ = 'kind', 'size', 'at'

    def __init__(self, kind, size, at):
        self.kind = kind
        self.size = size
        self.at = at

    def __repr__(self):
        return '<Domain %s of %d>' % (self.kind, self.size)


class Law(object):
    """A property which the checker can test.

     - `label` is the name used in reports and in `--only` selections.
     - `groups` are the names of the groups the property belongs to.
     - `variables` is a sequence of `(name, kind)` pairs.
     - `witnessed` is True for properties which rely on finding a witness:
       these are reported RESTRICTED if some witness lies beyond the
       carrier's bound.
     - `requires` names a model attribute which must be set for the property
       to apply (eg, an oracle).

    """
    __slots__ = 'label', 'groups', 'variables', 'check', 'witnessed', \
                'requires'

    def __init__(self, label, groups, variables, check, witnessed=False,
                 requires=None):
        self.label = label
        self.groups = tuple(groups)
        self.variables = tuple(variables)
        self.check = check
        self.witnessed = witnessed
        self.requires = requires

    def __repr__(self):
        return '<Law %s>' % self.label

    @property
    def is_bitrop_law(self):
        return 'bitrop' in self.groups

    def target(self, model):
        """Return the model this law is evaluated against, or None.

        Bitrop laws checked on a space model are evaluated against the
        space's bitrop.  Space laws don't apply to a bare bitrop model, nor
        do laws requiring an attribute the model doesn't provide.

        """
        if self.is_bitrop_law:
            if isinstance(model, SpaceModel):
                model = model.bitrop
        elif not isinstance(model, SpaceModel):
            return None
        if self.requires is not None and \
           getattr(model, self.requires, None) is None:
            return None
        return model

    def domains(self, target):
        """Get the domains of the law's variables, when evaluated on `target`.

        """
        return [domain_for(kind, target) for name, kind in self.variables]

    def names(self):
        return tuple(name for name, kind in self.variables)

    def evaluate(self, target, values):
        """Evaluate the law on a sequence of values.

        Returns None if the law holds, or `(lhs, rhs)` if it's violated.
        Raises `OutOfCarrierError` if the case leaves a bounded carrier.

        """
        try:
            return self.check(target, *values)
        except errors.AbsorptionError:
            return 'undefined', 'no absorption witness in B+'


def domain_for(kind, target):
    """Get the domain of values of a given kind for a target model.

    """
    if isinstance(target, BitropModel):
        bitrop = target
    else:
        bitrop = target.bitrop
    if kind == GRANULAR:
        return Domain(kind, bitrop.carrier_size(), bitrop.carrier_at)
    if kind == POSITIVE:
        return Domain(kind, bitrop.positive_size(), bitrop.positive_at)
    if kind == MNESOR:
        return Domain(kind, target.carrier_size(), target.carrier_at)
    raise ValueError("unknown variable kind %r" % (kind, ))

LAWS = []
_by_label = {}

def law(label, groups, *variables, **kwargs):
    """Decorator which registers a property function.

    """
    def register(fn):
        if label in _by_label:
            raise ValueError("property %r registered twice" % label)
        entry = Law(label, groups, variables, fn, **kwargs)
        LAWS.append(entry)
        _by_label[label] = entry
        return fn
    return register

def get_law(label):
    """Get a law by its label.

    Raises KeyError if there is no such law.

    """
    return _by_label[label]

def group_names():
    """Return the names of all groups, in order of first use.

    """
    result = []
    for entry in LAWS:
        for group in entry.groups:
            if group not in result:
                result.append(group)
    return tuple(result)

def select(names=None):
    """Select laws by label or group name.

    Returns all the laws if `names` is None.  Otherwise, returns the laws
    whose label, or one of whose groups, is in `names`, in registry order.
    Raises ValueError for a name which is neither a label nor a group.

    """
    if names is None:
        return list(LAWS)
    if isinstance(names, str):
        names = (names, )
    names = set(names)
    known = set(_by_label)
    known.update(group_names())
    unknown = sorted(names - known)
    if unknown:
        raise ValueError("unknown property or group: %s" % ', '.join(unknown))
    return [entry for entry in LAWS
            if entry.label in names or names.intersection(entry.groups)]

def _not_positive(b, g):
    return '%s is not in B+' % g


# Bitrop laws

_STRUCTURE = ('bitrop', )
_BITROP_AXIOMS = ('bitrop', 'bitrop-axioms')

@law('bitrop-closure', _STRUCTURE, ('a', GRANULAR), ('b', GRANULAR))
def bitrop_closure(b, x, y):
    total = b._oplus(x.value, y.value)
    if not b._contains(total):
        return b.format_value(total), 'outside the carrier'
    product = b._otimes(x.value, y.value)
    if not b._contains(product):
        if b.truncated:
            raise errors.OutOfCarrierError("product leaves the carrier",
                                           product)
        return b.format_value(product), 'outside the carrier'

@law('oplus-commutative', _STRUCTURE, ('a', GRANULAR), ('b', GRANULAR))
def oplus_commutative(b, x, y):
    lhs, rhs = b.oplus(x, y), b.oplus(y, x)
    if lhs != rhs:
        return lhs, rhs

@law('oplus-associative', _STRUCTURE,
     ('a', GRANULAR), ('b', GRANULAR), ('c', GRANULAR))
def oplus_associative(b, x, y, z):
    lhs = b.oplus(b.oplus(x, y), z)
    rhs = b.oplus(x, b.oplus(y, z))
    if lhs != rhs:
        return lhs, rhs

@law('otimes-commutative', _STRUCTURE, ('a', GRANULAR), ('b', GRANULAR))
def otimes_commutative(b, x, y):
    lhs, rhs = b.otimes(x, y), b.otimes(y, x)
    if lhs != rhs:
        return lhs, rhs

@law('otimes-associative', _STRUCTURE,
     ('a', GRANULAR), ('b', GRANULAR), ('c', GRANULAR))
def otimes_associative(b, x, y, z):
    lhs = b.otimes(b.otimes(x, y), z)
    rhs = b.otimes(x, b.otimes(y, z))
    if lhs != rhs:
        return lhs, rhs

@law('distributive-left', _STRUCTURE,
     ('a', GRANULAR), ('b', GRANULAR), ('c', GRANULAR))
def distributive_left(b, x, y, z):
    lhs = b.otimes(x, b.oplus(y, z))
    rhs = b.oplus(b.otimes(x, y), b.otimes(x, z))
    if lhs != rhs:
        return lhs, rhs

@law('distributive-right', _STRUCTURE,
     ('a', GRANULAR), ('b', GRANULAR), ('c', GRANULAR))
def distributive_right(b, x, y, z):
    lhs = b.otimes(b.oplus(x, y), z)
    rhs = b.oplus(b.otimes(x, z), b.otimes(y, z))
    if lhs != rhs:
        return lhs, rhs

@law('center-unit', _BITROP_AXIOMS, ('x', GRANULAR))
def center_unit(b, x):
    lhs = b.otimes(x, b.tau())
    if lhs != x:
        return lhs, x

@law('center-idempotent', _BITROP_AXIOMS)
def center_idempotent(b):
    tau = b.tau()
    lhs = b.oplus(tau, tau)
    if lhs != tau:
        return lhs, tau

@law('bitrop-absorption', _BITROP_AXIOMS, ('x', GRANULAR), ('y', GRANULAR),
     witnessed=True)
def bitrop_absorption(b, x, y):
    witness, beyond = b.find_absorption_witness(x, y)
    if witness is not None:
        return None
    if beyond is not None:
        raise errors.OutOfCarrierError("witness lies beyond the carrier",
                                       beyond)
    return b.oplus(x, y), 'no alpha in B+ gives (x + y) * alpha = x'

@law('cancellation', _BITROP_AXIOMS,
     ('x', GRANULAR), ('lambda', POSITIVE), ('mu', POSITIVE))
def cancellation(b, x, lam, mu):
    lhs = b.otimes(x, lam)
    rhs = b.otimes(x, mu)
    if lhs == rhs and lam != mu:
        return lhs, rhs

@law('positive-closure', _STRUCTURE, ('lambda', POSITIVE), ('mu', POSITIVE))
def positive_closure(b, lam, mu):
    total = b.oplus(lam, mu)
    if not b.is_positive(total):
        return total, _not_positive(b, total)
    product = b.otimes(lam, mu)
    if not b.is_positive(product):
        return product, _not_positive(b, product)


# Space laws

_SPACE_AXIOMS = ('space', 'space-axioms')
_THEOREMS = ('space', 'theorems')
_MEASURED = ('space', 'measured')
_ORACLES = ('space', 'oracles')

@law('space-closure', _SPACE_AXIOMS,
     ('x', MNESOR), ('y', MNESOR), ('lambda', GRANULAR))
def space_closure(m, x, y, lam):
    total = m._add(x.value, y.value)
    if not m._contains(total):
        return m.format_value(total), 'outside the carrier'
    scaled = m._scale(x.value, lam.value)
    if not m._contains(scaled):
        if m.bitrop.truncated:
            raise errors.OutOfCarrierError("scaling leaves the carrier",
                                           scaled)
        return m.format_value(scaled), 'outside the carrier'

@law('add-commutative', _SPACE_AXIOMS, ('x', MNESOR), ('y', MNESOR))
def add_commutative(m, x, y):
    lhs, rhs = m.add(x, y), m.add(y, x)
    if lhs != rhs:
        return lhs, rhs

@law('add-associative', _SPACE_AXIOMS,
     ('x', MNESOR), ('y', MNESOR), ('z', MNESOR))
def add_associative(m, x, y, z):
    lhs = m.add(m.add(x, y), z)
    rhs = m.add(x, m.add(y, z))
    if lhs != rhs:
        return lhs, rhs

@law('add-identity', _SPACE_AXIOMS, ('x', MNESOR))
def add_identity(m, x):
    lhs = m.add(x, m.zero())
    if lhs != x:
        return lhs, x

@law('unital', _SPACE_AXIOMS, ('x', MNESOR))
def unital(m, x):
    lhs = m.scale(x, m.bitrop.tau())
    if lhs != x:
        return lhs, x

@law('mnesor-distributivity', _SPACE_AXIOMS,
     ('x', MNESOR), ('y', MNESOR), ('lambda', GRANULAR))
def mnesor_distributivity(m, x, y, lam):
    lhs = m.scale(m.add(x, y), lam)
    rhs = m.add(m.scale(x, lam), m.scale(y, lam))
    if lhs != rhs:
        return lhs, rhs

@law('granular-associativity', _SPACE_AXIOMS,
     ('x', MNESOR), ('lambda', GRANULAR), ('mu', GRANULAR))
def granular_associativity(m, x, lam, mu):
    lhs = m.scale(m.scale(x, lam), mu)
    rhs = m.scale(x, m.bitrop.otimes(lam, mu))
    if lhs != rhs:
        return lhs, rhs

@law('granular-distributivity', _SPACE_AXIOMS,
     ('x', MNESOR), ('lambda', GRANULAR), ('mu', GRANULAR))
def granular_distributivity(m, x, lam, mu):
    lhs = m.scale(x, m.bitrop.oplus(lam, mu))
    rhs = m.add(m.scale(x, lam), m.scale(x, mu))
    if lhs != rhs:
        return lhs, rhs

@law('space-absorption', _SPACE_AXIOMS, ('x', MNESOR), ('y', MNESOR),
     witnessed=True)
def space_absorption(m, x, y):
    witness, beyond = m.find_absorption_witness(x, y)
    if witness is not None:
        return None
    if beyond is not None:
        raise errors.OutOfCarrierError("witness lies beyond the carrier",
                                       beyond)
    return m.add(x, y), 'no alpha in B+ gives (x + y) * alpha = x'

@law('add-idempotent', _THEOREMS, ('x', MNESOR))
def add_idempotent(m, x):
    lhs = m.add(x, x)
    if lhs != x:
        return lhs, x

@law('prefix-order', _THEOREMS, ('x', MNESOR), ('y', MNESOR), ('z', MNESOR))
def prefix_order(m, x, y, z):
    if not m.is_prefix(x, x):
        return 'x + x != x', 'reflexive'
    if x != y and m.is_prefix(x, y) and m.is_prefix(y, x):
        return 'x <= y and y <= x', 'antisymmetric'
    if m.is_prefix(x, y) and m.is_prefix(y, z) and not m.is_prefix(x, z):
        return 'x <= y <= z but not x <= z', 'transitive'

@law('ordering-equivalence', _THEOREMS, ('x', MNESOR), ('a', MNESOR),
     witnessed=True)
def ordering_equivalence(m, x, a):
    witness, beyond = m.find_orbit_witness(x, a)
    if witness is None and beyond is not None:
        raise errors.OutOfCarrierError("witness lies beyond the carrier",
                                       beyond)
    in_orbit = witness is not None
    prefix = m.is_prefix(x, a)
    if in_orbit != prefix:
        return 'in orbit: %s' % in_orbit, 'prefix: %s' % prefix

@law('intersection-uniqueness', _THEOREMS, ('x', MNESOR), ('y', MNESOR))
def intersection_uniqueness(m, x, y):
    results = [m._scale(y.value, lam.value) for lam in m.witnesses(x, y)]
    for result in results[1:]:
        if result != results[0]:
            return m.format_value(results[0]), m.format_value(result)

@law('intersection-symmetry', _THEOREMS, ('x', MNESOR), ('y', MNESOR),
     witnessed=True)
def intersection_symmetry(m, x, y):
    lhs = m.scale(y, m.absorption_granular(x, y))
    rhs = m.scale(x, m.absorption_granular(y, x))
    if lhs != rhs:
        return lhs, rhs

@law('intersect-commutative', _THEOREMS, ('x', MNESOR), ('y', MNESOR),
     witnessed=True)
def intersect_commutative(m, x, y):
    lhs, rhs = m.intersect(x, y), m.intersect(y, x)
    if lhs != rhs:
        return lhs, rhs

@law('intersect-associative', _THEOREMS,
     ('x', MNESOR), ('y', MNESOR), ('z', MNESOR), witnessed=True)
def intersect_associative(m, x, y, z):
    lhs = m.intersect(m.intersect(x, y), z)
    rhs = m.intersect(x, m.intersect(y, z))
    if lhs != rhs:
        return lhs, rhs

@law('intersect-idempotent', _THEOREMS, ('x', MNESOR), witnessed=True)
def intersect_idempotent(m, x):
    lhs = m.intersect(x, x)
    if lhs != x:
        return lhs, x

@law('lattice-absorption', _THEOREMS, ('x', MNESOR), ('y', MNESOR),
     witnessed=True)
def lattice_absorption(m, x, y):
    lhs = m.add(x, m.intersect(x, y))
    if lhs != x:
        return lhs, x
    lhs = m.intersect(x, m.add(x, y))
    if lhs != x:
        return lhs, x

@law('zero-scaling', _MEASURED, ('lambda', GRANULAR))
def zero_scaling(m, lam):
    zero = m.zero()
    lhs = m.scale(zero, lam)
    if lhs != zero:
        return lhs, zero

@law('oracle-add', _ORACLES, ('x', MNESOR), ('y', MNESOR),
     requires='oracle_add')
def oracle_add(m, x, y):
    lhs = m.add(x, y)
    expected = m.oracle_add(x.value, y.value)
    if lhs.value != expected:
        return lhs, m.format_value(expected)

@law('oracle-intersect', _ORACLES, ('x', MNESOR), ('y', MNESOR),
     witnessed=True, requires='oracle_intersect')
def oracle_intersect(m, x, y):
    lhs = m.intersect(x, y)
    expected = m.oracle_intersect(x.value, y.value)
    if lhs.value != expected:
        return lhs, m.format_value(expected)
