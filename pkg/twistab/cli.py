# Copyright 2026 twistab contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""

The ``twistab`` command.

Results are written to stdout as one JSON document with sorted keys.  The
exit code is 0 on success, 1 when a predicate (``stability``,
``same-chamber``, a failing ``oracle``) is false and 2 on bad input, in which
case stdout carries ``{"code", "message", "location"}``.  ``--verbose`` sends
the structured log to stderr.

"""

import sys
from inspect import signature

from twisted.python import log, usage

from twistab import marshal
from twistab.curve import validate
from twistab.errors import InvalidInput, MarshalError, TwistabError
from twistab.logger import LoggingRunner
from twistab.monoid import count_abelian_torsors, torsion_pic, x_m
from twistab.oracle import ORACLES, run_oracle
from twistab.schema import SCHEMAS
from twistab.stability import is_stable
from twistab.stabilization import (
    StableMapRecord, chamber_stabilizations, chambers, is_classical,
    records_isomorphic, reduce_weights, same_chamber, stabilize)

__all__ = ['Options', 'run', 'main']

OK = 0
FALSE = 1
BAD_INPUT = 2


def _read_json(path, location):
    try:
        with open(path) as f:
            text = f.read()
    except (IOError, OSError) as e:
        raise MarshalError('cannot read {0}: {1}'.format(path, e.strerror),
                           location)
    return marshal.loads(text, location)


class _MapOptions(usage.Options):
    """
    Options shared by the commands that read a map to ``BG``.
    """
    optParameters = [
        ['curve', None, None, 'Path of the curve JSON document.'],
        ['weights', None, None, 'Weights such as "1/2,1/2,1".'],
        ['group', None, 'C1', 'Group shorthand or JSON specification.'],
        ['monodromy', None, None,
         'Path of the monodromy JSON document; trivial when omitted.'],
    ]

    def postOptions(self):
        if self['curve'] is None:
            raise usage.UsageError('--curve is required')

    def load(self):
        """
        :returns: ``(graph, weights, mono)``
        """
        graph = marshal.unmarshal_curve(
            _read_json(self['curve'], '--curve'), '--curve')
        if self['weights'] is None:
            weights = marshal.unmarshal_weights(['1'] * graph.n, '--weights')
        else:
            weights = marshal.unmarshal_weights(self['weights'], '--weights')
        group = marshal.unmarshal_group(self['group'], '--group')
        document = None
        if self['monodromy'] is not None:
            document = _read_json(self['monodromy'], '--monodromy')
        mono = marshal.unmarshal_monodromy(document, graph, group,
                                           '--monodromy')
        return graph, weights, mono


class ValidateOptions(_MapOptions):
    synopsis = '--curve FILE [--weights A] [--group G] [--monodromy FILE]'


class StabilityOptions(_MapOptions):
    synopsis = ValidateOptions.synopsis


class StabilizeOptions(_MapOptions):
    synopsis = ValidateOptions.synopsis


class ReduceOptions(_MapOptions):
    synopsis = ValidateOptions.synopsis + ' --to A'
    optParameters = [
        ['to', None, None, 'The smaller weight vector.'],
    ]

    def postOptions(self):
        _MapOptions.postOptions(self)
        if self['to'] is None or self['weights'] is None:
            raise usage.UsageError('--weights and --to are required')


class ChamberStabilizeOptions(_MapOptions):
    synopsis = '--curve FILE --weights B [--group G] [--monodromy FILE]'

    def postOptions(self):
        _MapOptions.postOptions(self)
        if self['weights'] is None:
            raise usage.UsageError('--weights is required')


class ChambersOptions(usage.Options):
    optParameters = [
        ['n', 'n', None, 'Number of markings.', int],
    ]

    def postOptions(self):
        if self['n'] is None:
            raise usage.UsageError('-n is required')
        if self['n'] < 1:
            raise usage.UsageError('-n must be a positive integer')


class SameChamberOptions(usage.Options):
    synopsis = 'A B'

    def parseArgs(self, a, b):
        self['a'] = a
        self['b'] = b


class XmOptions(usage.Options):
    optParameters = [
        ['monoid', None, None, 'Generators as a JSON array of fraction '
                               'vectors.'],
        ['m', None, None, 'The order m.', int],
    ]

    def postOptions(self):
        if self['monoid'] is None or self['m'] is None:
            raise usage.UsageError('--monoid and --m are required')


class PicardOptions(usage.Options):
    optParameters = [
        ['orders', None, '', 'Root orders such as "2,3".'],
        ['m', None, None, 'Order of the last stacky point.', int],
    ]

    def postOptions(self):
        if self['m'] is None:
            raise usage.UsageError('--m is required')


class TorsorsOptions(PicardOptions):
    optParameters = [
        ['group', None, None, 'Group shorthand or JSON specification.'],
    ]

    def postOptions(self):
        PicardOptions.postOptions(self)
        if self['group'] is None:
            raise usage.UsageError('--group is required')


class OracleOptions(usage.Options):
    synopsis = '[--seed N] [--cases N] NAME'
    optParameters = [
        ['seed', None, None, 'Random seed; TWISTAB_SEED by default.', int],
        ['cases', None, None, 'Number of random cases.', int],
    ]

    def parseArgs(self, name):
        self['name'] = name

    def postOptions(self):
        if self['name'] not in ORACLES:
            raise usage.UsageError(
                'unknown oracle {0!r}; choose from {1}'.format(
                    self['name'], ', '.join(sorted(ORACLES))))
        if (self['cases'] is not None and
                'cases' not in signature(ORACLES[self['name']]).parameters):
            raise usage.UsageError('oracle {0!r} takes no --cases'.format(
                self['name']))


class Options(usage.Options):
    synopsis = 'twistab [--verbose] [--schema] COMMAND [options]'
    optFlags = [
        ['verbose', 'v', 'Log every step to stderr.'],
        ['schema', None, 'Print the JSON schemas of all documents and exit.'],
    ]
    subCommands = [
        ['validate', None, ValidateOptions, 'Check a map for violations.'],
        ['stability', None, StabilityOptions, 'Decide stability of a map.'],
        ['stabilize', None, StabilizeOptions, 'Stabilize a prestable map.'],
        ['reduce', None, ReduceOptions,
         'Reduce a stable map to smaller weights.'],
        ['chambers', None, ChambersOptions,
         'Enumerate the chambers of weight space.'],
        ['chamber-stabilize', None, ChamberStabilizeOptions,
         'Stabilize a map at every chamber below its weights.'],
        ['same-chamber', None, SameChamberOptions,
         'Decide whether two weight vectors share a chamber.'],
        ['xm', None, XmOptions, 'Invariant factors of X_m.'],
        ['picard', None, PicardOptions,
         'Torsion Picard group of a stacky line.'],
        ['torsors', None, TorsorsOptions,
         'Count torsors with an abelian contraction.'],
        ['oracle', None, OracleOptions, 'Run a brute-force cross-check.'],
    ]

    def postOptions(self):
        if not self['schema'] and self.subCommand is None:
            raise usage.UsageError('a command is required')


def _validate(opts, logger):
    graph, weights, mono = opts.load()
    violations = validate(graph, weights, mono)
    if violations:
        raise InvalidInput(violations)
    return OK, {'valid': True}


def _stability(opts, logger):
    graph, weights, mono = opts.load()
    violations = validate(graph, weights, mono)
    if violations:
        raise InvalidInput(violations)
    report = is_stable(graph, weights, mono)
    return (OK if report.stable else FALSE), report


def _stabilize(opts, logger):
    graph, weights, mono = opts.load()
    return OK, stabilize(graph, weights, mono, log=logger)


def _reduce(opts, logger):
    graph, weights, mono = opts.load()
    violations = validate(graph, weights, mono)
    if violations:
        raise InvalidInput(violations)
    a = marshal.unmarshal_weights(opts['to'], '--to')
    record = StableMapRecord(graph, weights, mono)
    return OK, reduce_weights(record, a, log=logger)


def _chambers(opts, logger):
    found = chambers(opts['n'], log=logger)
    return OK, {'n': opts['n'], 'count': len(found), 'chambers': found}


def _chamber_stabilize(opts, logger):
    graph, weights, mono = opts.load()
    violations = validate(graph, weights, mono)
    if violations:
        raise InvalidInput(violations)
    results, outputs = [], []
    for chamber, record in chamber_stabilizations(graph, mono, weights,
                                                  log=logger):
        results.append({'chamber': chamber, 'record': record,
                        'classical': (None if record is None
                                      else is_classical(record))})
        if record is not None and not any(
                records_isomorphic(record, seen) for seen in outputs):
            outputs.append(record)
    return OK, {'chambers': results, 'distinct': len(outputs)}


def _same_chamber(opts, logger):
    same = same_chamber(marshal.unmarshal_weights(opts['a'], 'A'),
                        marshal.unmarshal_weights(opts['b'], 'B'))
    return (OK if same else FALSE), {'same': same}


def _xm(opts, logger):
    monoid = marshal.unmarshal_monoid(
        marshal.loads(opts['monoid'], '--monoid'), '--monoid')
    return OK, x_m(monoid.x_group(), opts['m'])


def _picard(opts, logger):
    orders = marshal.unmarshal_orders(opts['orders'], '--orders')
    return OK, torsion_pic(orders, opts['m'])


def _torsors(opts, logger):
    orders = marshal.unmarshal_orders(opts['orders'], '--orders')
    group = marshal.unmarshal_group(opts['group'], '--group')
    return OK, {'count': count_abelian_torsors(orders, opts['m'], group)}


def _oracle(opts, logger):
    kwargs = {}
    if opts['cases'] is not None:
        kwargs['cases'] = opts['cases']
    result = run_oracle(opts['name'], seed=opts['seed'], log=logger, **kwargs)
    return (OK if result['ok'] else FALSE), result


commands = {
    'validate': _validate,
    'stability': _stability,
    'stabilize': _stabilize,
    'reduce': _reduce,
    'chambers': _chambers,
    'chamber-stabilize': _chamber_stabilize,
    'same-chamber': _same_chamber,
    'xm': _xm,
    'picard': _picard,
    'torsors': _torsors,
    'oracle': _oracle,
}


def _emit(stdout, value):
    stdout.write(marshal.dumps(marshal.marshal(value)) + '\n')


def run(argv, stdout=None, stderr=None, clock=None):
    """
    Run the command line ``argv`` (without the program name).

    :returns: the exit code.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    config = Options()
    try:
        config.parseOptions(argv)
    except usage.UsageError as e:
        _emit(stdout, {'code': 'usage', 'message': str(e), 'location': None})
        return BAD_INPUT

    if config['schema']:
        _emit(stdout, SCHEMAS)
        return OK

    logger = None
    if config['verbose']:
        log.startLogging(stderr, setStdout=False)
        logger = log

    command = commands[config.subCommand]
    try:
        if logger is not None:
            code, result = LoggingRunner(logger, clock).run(
                config.subCommand, command, config.subOptions, logger)
        else:
            code, result = command(config.subOptions, logger)
    except TwistabError as e:
        _emit(stdout, e)
        return BAD_INPUT
    _emit(stdout, result)
    return code


def main():
    sys.exit(run(sys.argv[1:]))
