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
r"""checker.py: Exhaustive and randomized checking of algebraic properties.

The checker evaluates every registered property (see `laws`) over every
assignment of its quantified variables (exhaustive mode), or over a seeded
random sample of assignments (random mode).  Assignments are enumerated in
lexicographic order of their positions in the canonical carrier orders, so the
first counterexample found for a property is stable.

Each property is reported with one of three statuses:

 - FAIL: some assignment violates the property.
 - RESTRICTED: no assignment violates the property, but for some assignments
   the witness the property needs lies beyond the bound of a truncated
   carrier, so those cases couldn't be decided.
 - PASS: no violation, and every witness was found in the carrier.

"""
__docformat__ = "restructuredtext en"

import itertools
import json
import logging
import multiprocessing
import random
import string

from . import errors
from . import laws
from .bitrop import BitropModel, Granular, MinPlusBitrop, SubsetBitrop
from .mnesor import (ExtendedMinPlusSpace, Mnesor, RelationSpace,
                     SpaceModel, TruncatedTropicalSpace)

log = logging.getLogger(__name__)

PASS = 'PASS'
FAIL = 'FAIL'
RESTRICTED = 'RESTRICTED'

EXHAUSTIVE = 'exhaustive'
RANDOM = 'random'

# The most cases an exhaustive run may enumerate, over all properties.
DEFAULT_CASE_LIMIT = 10 ** 7

DEFAULT_UNIVERSE = 3
DEFAULT_RANGES = {
    'minplus': (-8, 8),
    'truncated-tropical': (-6, 0),
    'extended-minplus': (-6, 6),
}
DEFAULT_RANDOM_CASES = 1000

SUBSET_MODELS = ('subset', 'relation')
RANGE_MODELS = ('minplus', 'extended-minplus', 'truncated-tropical')
MODELS = ('subset', 'minplus', 'extended-minplus', 'truncated-tropical',
          'relation')

def universe_keys(size):
    """Return the keys of a generated universe: 'a', 'b', 'c', ...

    """
    if size < 0 or size > len(string.ascii_lowercase):
        raise ValueError("universe size must be between 0 and %d" %
                         len(string.ascii_lowercase))
    return tuple(string.ascii_lowercase[:size])

def build_model(name, universe=None, range=None):
    """Build a model by name.

     - `universe` is the size of the universe, for the subset and relation
       models.
     - `range` is a pair `(lo, hi)` of integers, for the integer models.

    Unset parameters take their defaults.

    """
    if name in SUBSET_MODELS:
        if range is not None:
            raise ValueError("a range doesn't apply to the %s model" % name)
        if universe is None:
            universe = DEFAULT_UNIVERSE
        keys = universe_keys(universe)
        if name == 'subset':
            return SubsetBitrop(keys)
        return RelationSpace(keys)
    if name in RANGE_MODELS:
        if universe is not None:
            raise ValueError("a universe size doesn't apply to the %s model"
                             % name)
        lo, hi = range if range is not None else DEFAULT_RANGES[name]
        if lo > hi:
            raise ValueError("range %d..%d is empty" % (lo, hi))
        if name == 'minplus':
            return MinPlusBitrop(lo, hi)
        if name == 'extended-minplus':
            return ExtendedMinPlusSpace(lo, hi)
        if hi != 0:
            raise ValueError("the truncated-tropical range must end at 0")
        return TruncatedTropicalSpace(lo)
    raise ValueError("unknown model %r (choose from %s)" %
                     (name, ', '.join(MODELS)))


class CheckPlan(object):
    """The configuration of a checker run.

     - `model`: the name of the model to check (one of `MODELS`).
     - `universe`: universe size, for the subset and relation models.
     - `range`: `(lo, hi)` for the integer models.
     - `mode`: `EXHAUSTIVE` or `RANDOM`.
     - `cases`: number of cases per property in random mode.
     - `seed`: random seed, for random mode.
     - `only`: sequence of property labels and group names to check, or None
       for all of them.
     - `limit`: the most cases an exhaustive run may enumerate.
     - `workers`: number of processes to spread exhaustive enumeration over.

    Parameters are checked on construction; ValueError is raised for
    unusable ones.

    """
    __slots__ = 'model', 'universe', 'range', 'mode', 'cases', 'seed', \
                'only', 'limit', 'workers'

    def __init__(self, model, universe=None, range=None, mode=EXHAUSTIVE,
                 cases=None, seed=0, only=None, limit=DEFAULT_CASE_LIMIT,
                 workers=1):
        if model not in MODELS:
            raise ValueError("unknown model %r (choose from %s)" %
                             (model, ', '.join(MODELS)))
        if mode not in (EXHAUSTIVE, RANDOM):
            raise ValueError("unknown mode %r" % (mode, ))
        if cases is None:
            cases = DEFAULT_RANDOM_CASES
        if cases < 1:
            raise ValueError("number of random cases must be positive")
        if limit < 0:
            raise ValueError("case limit must not be negative")
        if workers < 1:
            raise ValueError("number of workers must be positive")
        if only is not None:
            only = tuple(only)
            laws.select(only)
        self.model = model
        self.universe = universe
        self.range = None if range is None else tuple(range)
        self.mode = mode
        self.cases = cases
        self.seed = seed
        self.only = only
        self.limit = limit
        self.workers = workers
        # Check the model parameters.
        self.build_model()

    def __repr__(self):
        return '<CheckPlan %s>' % ', '.join(
            '%s=%r' % item for item in self.parameters())

    def build_model(self):
        return build_model(self.model, self.universe, self.range)

    def parameters(self):
        """Return the parameters of the plan as a list of (name, value) pairs.

        """
        result = [('mode', self.mode)]
        if self.model in SUBSET_MODELS:
            if self.universe is None:
                result.append(('universe', DEFAULT_UNIVERSE))
            else:
                result.append(('universe', self.universe))
        else:
            lo, hi = self.range or DEFAULT_RANGES[self.model]
            result.append(('range', [lo, hi]))
        if self.mode == RANDOM:
            result.append(('cases', self.cases))
            result.append(('seed', self.seed))
        if self.only is not None:
            result.append(('only', list(self.only)))
        return result


class Counterexample(object):
    """An assignment of values which violates a property.

     - `label`: the label of the violated property.
     - `bindings`: a tuple of `(name, value)` pairs, one per quantified
       variable, where each value is a Granular or a Mnesor.
     - `lhs`, `rhs`: the two sides of the violated equation (or
       descriptions of the two sides of a violated condition).

    """
    __slots__ = 'label', 'bindings', 'lhs', 'rhs'

    def __init__(self, label, bindings, lhs, rhs):
        self.label = label
        self.bindings = tuple(bindings)
        self.lhs = lhs
        self.rhs = rhs

    def __repr__(self):
        return '<Counterexample %s: %s>' % (self.label, ', '.join(
            '%s=%s' % (name, value) for name, value in self.bindings))

    def __getitem__(self, name):
        for bound, value in self.bindings:
            if bound == name:
                return value
        raise KeyError(name)

    def replace(self, **values):
        """Return a copy of the counterexample with some values rebound.

        """
        bindings = []
        for name, value in self.bindings:
            bindings.append((name, values.pop(name, value)))
        if values:
            raise KeyError("no variable named %s" % ', '.join(sorted(values)))
        return Counterexample(self.label, bindings, self.lhs, self.rhs)

    def as_dict(self):
        return {
            'bindings': dict((name, str(value))
                             for name, value in self.bindings),
            'lhs': str(self.lhs),
            'rhs': str(self.rhs),
        }


class PropertyResult(object):
    """The outcome of checking a single property.

    """
    __slots__ = 'label', 'status', 'cases', 'skipped', 'violations', \
                'counterexample'

    def __init__(self, label, status, cases, skipped, violations,
                 counterexample=None):
        self.label = label
        self.status = status
        self.cases = cases
        self.skipped = skipped
        self.violations = violations
        self.counterexample = counterexample

    def __repr__(self):
        return '<PropertyResult %s: %s>' % (self.label, self.status)

    def as_dict(self):
        result = {
            'label': self.label,
            'status': self.status,
            'cases': self.cases,
            'skipped': self.skipped,
            'violations': self.violations,
        }
        if self.counterexample is not None:
            result['counterexample'] = self.counterexample.as_dict()
        return result


class AxiomReport(object):
    """The results of a checker run.

    Results are held in the order in which the properties are registered, and
    can be looked up by label:

    >>> report = check_model(SubsetBitrop('ab'), only=['cancellation'])
    >>> report['cancellation'].status
    'FAIL'

    """
    __slots__ = 'model', 'parameters', 'results'

    def __init__(self, model, parameters, results):
        self.model = model
        self.parameters = list(parameters)
        self.results = list(results)

    def __repr__(self):
        return '<AxiomReport %s: %d properties>' % (self.model,
                                                    len(self.results))

    def __iter__(self):
        return iter(self.results)

    def __len__(self):
        return len(self.results)

    def __getitem__(self, label):
        for result in self.results:
            if result.label == label:
                return result
        raise KeyError(label)

    def __contains__(self, label):
        return any(result.label == label for result in self.results)

    def labels(self):
        return [result.label for result in self.results]

    def status(self, label):
        return self[label].status

    def failures(self):
        """Return the results of the properties which failed.

        """
        return [result for result in self.results if result.status == FAIL]

    def as_dict(self):
        return {
            'model': self.model,
            'parameters': dict(self.parameters),
            'properties': [result.as_dict() for result in self.results],
        }

    def to_json(self):
        """Serialise the report as a JSON document.

        Keys are written in a fixed order, so identical reports serialise
        identically.

        """
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)


class _Tally(object):
    """Running totals for one property (or one share of its cases).

    `first` holds `(index, counterexample)` for the first violation found.

    """
    __slots__ = 'cases', 'skipped', 'violations', 'first'

    def __init__(self):
        self.cases = 0
        self.skipped = 0
        self.violations = 0
        self.first = None

    def merge(self, other):
        self.cases += other.cases
        self.skipped += other.skipped
        self.violations += other.violations
        if other.first is not None:
            if self.first is None or other.first[0] < self.first[0]:
                self.first = other.first


def _run_cases(law, target, domains, indices):
    tally = _Tally()
    names = law.names()
    for index in indices:
        values = tuple(domain.at(pos) for domain, pos in zip(domains, index))
        tally.cases += 1
        try:
            outcome = law.evaluate(target, values)
        except errors.OutOfCarrierError:
            tally.skipped += 1
            continue
        if outcome is not None:
            tally.violations += 1
            if tally.first is None:
                lhs, rhs = outcome
                tally.first = (index, Counterexample(
                    law.label, zip(names, values), lhs, rhs))
    return tally

def _run_share(args):
    """Run one worker's share of an exhaustive check.

    The share is the cases whose first variable lies in `[start, stop)`.

    """
    label, target, start, stop = args
    law = laws.get_law(label)
    domains = law.domains(target)
    ranges = [range(start, stop)]
    ranges.extend(range(domain.size) for domain in domains[1:])
    return _run_cases(law, target, domains, itertools.product(*ranges))

def _shares(size, workers):
    step, extra = divmod(size, workers)
    start = 0
    for worker in range(workers):
        stop = start + step + (1 if worker < extra else 0)
        if stop > start:
            yield start, stop
        start = stop

def _exhaust(law, target, domains, pool, workers):
    if pool is None or not domains or domains[0].size < 2:
        return _run_cases(law, target, domains, itertools.product(
            *[range(domain.size) for domain in domains]))
    tally = _Tally()
    tasks = [(law.label, target, start, stop)
             for start, stop in _shares(domains[0].size, workers)]
    for share in pool.map(_run_share, tasks):
        tally.merge(share)
    return tally

def _sample(law, target, domains, cases, seed):
    if not domains:
        return _run_cases(law, target, domains, [()])
    if any(domain.size == 0 for domain in domains):
        return _Tally()
    rng = random.Random('%d:%s' % (seed, law.label))
    indices = [tuple(rng.randrange(domain.size) for domain in domains)
               for _ in range(cases)]
    return _run_cases(law, target, domains, indices)

def _verdict(law, tally):
    if tally.violations:
        status = FAIL
    elif law.witnessed and tally.skipped:
        status = RESTRICTED
    else:
        status = PASS
    counterexample = None
    if tally.first is not None:
        counterexample = tally.first[1]
    return PropertyResult(law.label, status, tally.cases, tally.skipped,
                          tally.violations, counterexample)

def _count_cases(domains):
    total = 1
    for domain in domains:
        total *= domain.size
    return total

def _default_parameters(mode, cases, seed):
    result = [('mode', mode)]
    if mode == RANDOM:
        result.append(('cases', cases))
        result.append(('seed', seed))
    return result

def check_model(model, only=None, mode=EXHAUSTIVE, cases=None, seed=0,
                limit=DEFAULT_CASE_LIMIT, workers=1, parameters=None):
    """Check the properties of a bitrop or space model.

     - `only`: labels and group names of the properties to check (all the
       properties which apply to the model, by default).
     - `mode`: `EXHAUSTIVE` or `RANDOM`.
     - `cases`, `seed`: the sample size per property and the seed, for random
       mode.
     - `limit`: the most cases an exhaustive check may enumerate.  If the
       total over all properties would exceed this, `CaseLimitError` is
       raised before anything is evaluated.
     - `workers`: number of processes to spread an exhaustive check over.
     - `parameters`: the parameters to record in the report.

    Returns an `AxiomReport`.

    """
    if not isinstance(model, (BitropModel, SpaceModel)):
        raise TypeError("expected a bitrop or space model, got %r" % (model, ))
    if cases is None:
        cases = DEFAULT_RANDOM_CASES
    plan = []
    for entry in laws.select(only):
        target = entry.target(model)
        if target is None:
            continue
        plan.append((entry, target, entry.domains(target)))
    if not plan:
        raise errors.CheckError("none of the selected properties applies to "
                                "%s" % model.describe())

    if mode == EXHAUSTIVE:
        total = sum(_count_cases(domains) for entry, target, domains in plan)
        if total > limit:
            raise errors.CaseLimitError(total, limit)
    elif mode != RANDOM:
        raise ValueError("unknown mode %r" % (mode, ))
    if parameters is None:
        parameters = _default_parameters(mode, cases, seed)
    parameters = list(parameters)
    parameters.append(('domains', _domain_sizes(model)))

    pool = None
    if mode == EXHAUSTIVE and workers > 1:
        pool = multiprocessing.Pool(workers)
    try:
        results = []
        for entry, target, domains in plan:
            if mode == EXHAUSTIVE:
                tally = _exhaust(entry, target, domains, pool, workers)
            else:
                tally = _sample(entry, target, domains, cases, seed)
            result = _verdict(entry, tally)
            log.debug("%s: %d cases, %d skipped, %s", result.label,
                      result.cases, result.skipped, result.status)
            results.append(result)
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    report = AxiomReport(model.name, parameters, results)
    log.info("%s: checked %d properties, %d failed", model.describe(),
             len(results), len(report.failures()))
    return report

def _domain_sizes(model):
    if isinstance(model, SpaceModel):
        bitrop = model.bitrop
    else:
        bitrop = model
    result = {
        'granulars': bitrop.carrier_size(),
        'positive': bitrop.positive_size(),
    }
    if isinstance(model, SpaceModel):
        result['mnesors'] = model.carrier_size()
    return result

def run_check(plan):
    """Run the checks described by a `CheckPlan`, returning an `AxiomReport`.

    """
    return check_model(plan.build_model(), only=plan.only, mode=plan.mode,
                       cases=plan.cases, seed=plan.seed, limit=plan.limit,
                       workers=plan.workers, parameters=plan.parameters())

def find_all_witnesses(x, y, model=None):
    """Return every granular `lam` of the bitrop carrier with
    `(x + y) * lam == x`, in canonical order.

    """
    if model is None:
        model = x.model
    return model.witnesses(x, y)

def verify_counterexample(counterexample, model):
    """Re-evaluate a counterexample against a model.

    Returns True iff the property is still violated by the counterexample's
    values.  Returns False if a value bound to a variable ranging over B+
    isn't positive.

    Raises `StaleCounterexampleError` if the counterexample's values don't
    belong to the model, or don't match the property's variables.

    """
    try:
        law = laws.get_law(counterexample.label)
    except KeyError:
        raise errors.StaleCounterexampleError(
            "unknown property %r" % (counterexample.label, ))
    target = law.target(model)
    if target is None:
        raise errors.StaleCounterexampleError(
            "property %r doesn't apply to %s" % (law.label, model.describe()))
    bitrop = target if isinstance(target, BitropModel) else target.bitrop
    names = [name for name, value in counterexample.bindings]
    if names != list(law.names()):
        raise errors.StaleCounterexampleError(
            "counterexample binds %s, but %r quantifies over %s" %
            (', '.join(names), law.label, ', '.join(law.names())))

    values = []
    for (name, kind), (bound, value) in zip(law.variables,
                                            counterexample.bindings):
        if kind == laws.MNESOR:
            owner, cls = target, Mnesor
        else:
            owner, cls = bitrop, Granular
        if not isinstance(value, cls) or value.model != owner or \
           not owner._contains(value.value):
            raise errors.StaleCounterexampleError(
                "value %s bound to %s does not belong to %s" %
                (value, name, owner.describe()))
        if kind == laws.POSITIVE and not bitrop.is_positive(value):
            return False
        values.append(value)

    try:
        return law.evaluate(target, values) is not None
    except errors.OutOfCarrierError:
        return False
