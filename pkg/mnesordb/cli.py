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
r"""cli.py: The mnesordb command line interface.

"""
__docformat__ = "restructuredtext en"

import csv
import getopt
import logging
import re
import sys

from . import checker
from . import errors
from . import queryexpr
from . import relalg

USAGE = """\
Usage: mnesordb <command> [options] [arguments]

Commands:
  eval QUERY       Evaluate a query over CSV tables, writing CSV to stdout
  witnesses X Y    List every granular which absorbs table Y into table X
  axioms           Check bitrop and mnesor space properties of a model

Options for eval and witnesses:
  -m, --membership PATH   Membership CSV file (required)
  -t, --table NAME=PATH   Bind a table name to a CSV file (repeatable)

Options for axioms:
  --model NAME            One of: %(models)s
  --universe N            Universe size, for the subset and relation models
  --range LO..HI          Integer range, for the min-plus based models
  --exhaustive            Check every case (the default)
  --random N              Check N random cases per property instead
  --seed S                Seed for --random (default 0)
  --only LIST             Comma separated property labels or group names
  --limit N               Most cases an exhaustive check may enumerate
                          (default %(limit)d)
  -j, --workers N         Number of processes to enumerate with

General options:
  -v, --verbose           Log progress to stderr
  -h, --help              Show this message
""" % {
    'models': ', '.join(checker.MODELS),
    'limit': checker.DEFAULT_CASE_LIMIT,
}

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOLUTION = 2
EXIT_DATA = 3
EXIT_FAIL = 4
EXIT_LIMIT = 5

_range_re = re.compile(r'^(-?\d+)\.\.(-?\d+)$')
_binding_re = re.compile(r'^([A-Za-z_][A-Za-z0-9_]*)=(.+)$')

class Config(object):
    def __init__(self, **kwargs):
        for key, val in kwargs.items():
            setattr(self, key, val)

class UsageError(Exception):
    """Raised for bad command line arguments.

    """

def _int(opt, val):
    try:
        return int(val)
    except ValueError:
        raise UsageError("%s needs an integer, not %r" % (opt, val))

def parse_argv(argv):
    """Parse the command line arguments (not including the program name).

    Returns a Config object.  Raises UsageError for bad arguments.

    """
    config = Config(command=None, membership=None, tables=[], model=None,
                    universe=None, range=None, mode=checker.EXHAUSTIVE,
                    cases=None, seed=0, only=None,
                    limit=checker.DEFAULT_CASE_LIMIT, workers=1,
                    verbose=False, help=False, args=[])
    try:
        optlist, args = getopt.gnu_getopt(argv, 'hvm:t:j:', (
            'help', 'verbose', 'membership=', 'table=', 'model=',
            'universe=', 'range=', 'exhaustive', 'random=', 'seed=',
            'only=', 'limit=', 'workers='))
    except getopt.GetoptError as e:
        raise UsageError(str(e))

    for (opt, val) in optlist:
        if opt in ('-h', '--help'):
            config.help = True
        elif opt in ('-v', '--verbose'):
            config.verbose = True
        elif opt in ('-m', '--membership'):
            config.membership = val
        elif opt in ('-t', '--table'):
            mo = _binding_re.match(val)
            if mo is None:
                raise UsageError("table binding %r isn't of the form "
                                 "NAME=PATH" % val)
            name, path = mo.groups()
            if name in dict(config.tables):
                raise UsageError("table %r bound twice" % name)
            config.tables.append((name, path))
        elif opt == '--model':
            config.model = val
        elif opt == '--universe':
            config.universe = _int(opt, val)
        elif opt == '--range':
            mo = _range_re.match(val)
            if mo is None:
                raise UsageError("range %r isn't of the form LO..HI" % val)
            config.range = (int(mo.group(1)), int(mo.group(2)))
        elif opt == '--exhaustive':
            config.mode = checker.EXHAUSTIVE
        elif opt == '--random':
            config.mode = checker.RANDOM
            config.cases = _int(opt, val)
        elif opt == '--seed':
            config.seed = _int(opt, val)
        elif opt == '--only':
            config.only = [item.strip() for item in val.split(',')
                           if item.strip()]
        elif opt == '--limit':
            config.limit = _int(opt, val)
        elif opt in ('-j', '--workers'):
            config.workers = _int(opt, val)

    if config.help:
        return config
    if not args:
        raise UsageError("no command given")
    config.command = args[0]
    config.args = args[1:]
    if config.command not in COMMANDS:
        raise UsageError("unknown command %r" % config.command)
    return config

def _error(stderr, msg, exitval):
    stderr.write("mnesordb: %s\n" % msg)
    return exitval

def _load(config, names):
    """Load the membership file, and the tables bound to `names`.

    Raises `ResolutionError` for a name which isn't bound, before anything is
    loaded.

    """
    bindings = dict(config.tables)
    for name in sorted(names):
        if name not in bindings:
            raise errors.ResolutionError('table', name, sorted(bindings))
    env = relalg.load_membership(config.membership)
    tables = {}
    for name, path in config.tables:
        tables[name] = relalg.load_table(path, env)
    return env, tables

def _run_query_command(config, stdout, stderr, nargs, action):
    if config.membership is None:
        return _error(stderr, "%s needs --membership" % config.command,
                      EXIT_USAGE)
    if len(config.args) != nargs:
        return _error(stderr, "%s takes %d argument%s" %
                      (config.command, nargs, 's' if nargs > 1 else ''),
                      EXIT_USAGE)
    try:
        return action(config, stdout)
    except errors.ParseError as e:
        return _error(stderr, str(e), EXIT_USAGE)
    except errors.ResolutionError as e:
        return _error(stderr, str(e), EXIT_RESOLUTION)
    except (errors.DataError, errors.AbsorptionError,
            errors.ModelMismatchError) as e:
        return _error(stderr, str(e), EXIT_DATA)

def _eval(config, stdout):
    query = queryexpr.parse_query(config.args[0])
    env, tables = _load(config, query.table_names())
    result = query.evaluate(tables, env)
    relalg.write_table(result, stdout)
    return EXIT_OK

def _witnesses(config, stdout):
    env, tables = _load(config, config.args)
    x = queryexpr.TableRef(config.args[0]).evaluate(tables, env)
    y = queryexpr.TableRef(config.args[1]).evaluate(tables, env)
    space = env.space
    writer = csv.writer(stdout, lineterminator='\n')
    writer.writerow(['witness', 'organisations', 'intersection'])
    for lam in space.witnesses(x.mnesor, y.mnesor):
        result = relalg.Table(space.scale(y.mnesor, lam))
        writer.writerow([
            ';'.join(env.bitrop.keys_of(lam)),
            ';'.join(env.organisations_for(lam)),
            ';'.join(result.keys()),
        ])
    return EXIT_OK

def cmd_eval(config, stdout, stderr):
    """Evaluate a query, writing the resulting table to stdout as CSV.

    """
    return _run_query_command(config, stdout, stderr, 1, _eval)

def cmd_witnesses(config, stdout, stderr):
    """List the granulars absorbing one table into another.

    """
    return _run_query_command(config, stdout, stderr, 2, _witnesses)

def cmd_axioms(config, stdout, stderr):
    """Check the properties of a model, writing a JSON report to stdout.

    """
    if config.args:
        return _error(stderr, "axioms takes no arguments", EXIT_USAGE)
    if config.model is None:
        return _error(stderr, "axioms needs --model", EXIT_USAGE)
    try:
        plan = checker.CheckPlan(config.model, universe=config.universe,
                                 range=config.range, mode=config.mode,
                                 cases=config.cases, seed=config.seed,
                                 only=config.only, limit=config.limit,
                                 workers=config.workers)
    except ValueError as e:
        return _error(stderr, str(e), EXIT_USAGE)
    try:
        report = checker.run_check(plan)
    except errors.CaseLimitError as e:
        return _error(stderr, str(e), EXIT_LIMIT)
    except errors.CheckError as e:
        return _error(stderr, str(e), EXIT_USAGE)
    stdout.write(report.to_json())
    stdout.write('\n')
    if report.failures():
        return EXIT_FAIL
    return EXIT_OK

COMMANDS = {
    'eval': cmd_eval,
    'witnesses': cmd_witnesses,
    'axioms': cmd_axioms,
}

def main(argv=None, stdout=None, stderr=None):
    """Run the command line interface, returning the exit status.

    """
    if argv is None:
        argv = sys.argv[1:]
    if stdout is None:
        stdout = sys.stdout
    if stderr is None:
        stderr = sys.stderr

    try:
        config = parse_argv(argv)
    except UsageError as e:
        stderr.write("mnesordb: %s\n" % e)
        stderr.write("Try 'mnesordb --help' for more information.\n")
        return EXIT_USAGE
    if config.help:
        stdout.write(USAGE)
        return EXIT_OK

    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter('%(name)s: %(levelname)s: '
                                           '%(message)s'))
    logger = logging.getLogger('mnesordb')
    oldlevel = logger.level
    logger.setLevel(logging.DEBUG if config.verbose else logging.WARNING)
    logger.addHandler(handler)
    try:
        return COMMANDS[config.command](config, stdout, stderr)
    finally:
        logger.removeHandler(handler)
        logger.setLevel(oldlevel)

def run_from_commandline():
    sys.exit(main())

if __name__ == '__main__':
    run_from_commandline()
