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
Tests for cli.py
"""

import json
import os
import random
from io import StringIO

import mock
from twisted.internet.task import Clock
from twisted.trial.unittest import SkipTest, TestCase

import twistab
from twistab import cli, fuzz, marshal
from twistab.groups import make_group
from twistab.schema import SCHEMAS
from twistab.test.util import genus_one_with_tail, three_pointed_line


class CommandTestCase(TestCase):
    """
    Runs the command line in process and captures its output.
    """

    def run_cli(self, *argv):
        stdout, stderr = StringIO(), StringIO()
        code = cli.run(list(argv), stdout=stdout, stderr=stderr)
        self.stderr = stderr.getvalue()
        return code, json.loads(stdout.getvalue())

    def write(self, document):
        path = self.mktemp()
        with open(path, 'w') as f:
            json.dump(document, f)
        return path

    def curve_file(self, graph):
        return self.write(marshal.marshal_curve(graph))


class ExamplesTests(CommandTestCase):
    def test_xm(self):
        """
        X_4 of <1/6> is Z/2.
        """
        self.assertEqual(
            self.run_cli('xm', '--monoid', '[["1/6"]]', '--m', '4'),
            (0, {'invariant_factors': [2]}))

    def test_torsors(self):
        """
        Two torsors over the stacky line with one point of order 2 in S3.
        """
        self.assertEqual(self.run_cli('torsors', '--orders', '2', '--m', '2',
                                      '--group', 'S3'),
                         (0, {'count': 2}))

    def test_empty_curve(self):
        """
        The empty curve is bad input.
        """
        code, result = self.run_cli('validate', '--curve',
                                    self.write({'vertices': []}))
        self.assertEqual(code, 2)
        self.assertEqual(result['code'], 'invalid-input')
        self.assertEqual(result['message'],
                         'curve must be connected and nonempty')

    def test_output_is_sorted(self):
        """
        Keys are sorted and output ends in a newline.
        """
        stdout = StringIO()
        cli.run(['picard', '--orders', '2,2', '--m', '2'], stdout=stdout)
        self.assertEqual(stdout.getvalue(),
                         '{"invariant_factors": [2, 2], "order": 4}\n')


class MapCommandTests(CommandTestCase):
    """
    Commands reading a curve, weights, group and monodromy.
    """

    def test_validate(self):
        """
        A valid map reports so.
        """
        graph, _ = three_pointed_line()
        self.assertEqual(self.run_cli('validate', '--curve',
                                      self.curve_file(graph)),
                         (0, {'valid': True}))

    def test_stability(self):
        """
        Stability exits 0 when stable and 1 when not.
        """
        path = self.curve_file(three_pointed_line()[0])
        code, report = self.run_cli('stability', '--curve', path)
        self.assertEqual((code, report['stable']), (0, True))
        code, report = self.run_cli('stability', '--curve', path,
                                    '--weights', '1/2,1/2,1/2')
        self.assertEqual((code, report['stable']), (1, False))
        self.assertEqual(report['offending'][0]['vertex'], 'v')

    def test_stabilize(self):
        """
        The light tail is contracted into a cluster.
        """
        path = self.curve_file(genus_one_with_tail()[0])
        code, record = self.run_cli('stabilize', '--curve', path,
                                    '--weights', '1/2,1/2')
        self.assertEqual(code, 0)
        self.assertEqual([v['id'] for v in record['curve']['vertices']],
                         ['V'])
        self.assertEqual(record['trace'][0]['vertex'], 'T')

    def test_stabilize_with_monodromy(self):
        """
        A tail with monodromy generating S3 survives.
        """
        s3 = make_group('S3')
        graph, mono = genus_one_with_tail(s3, s3.lookup('(1 2)'),
                                          s3.lookup('(1 3)'))
        code, record = self.run_cli(
            'stabilize', '--curve', self.curve_file(graph),
            '--weights', '1/2,1/2', '--group', 'S3',
            '--monodromy', self.write(marshal.marshal_monodromy(graph, mono)))
        self.assertEqual(code, 0)
        self.assertEqual(record['trace'], [])
        self.assertEqual(record['group'], 'S3')

    def test_nothing_left(self):
        """
        Maps without a stable model are bad input.
        """
        path = self.curve_file(three_pointed_line()[0])
        code, result = self.run_cli('stabilize', '--curve', path,
                                    '--weights', '1/2,1/2,1/2')
        self.assertEqual((code, result['code']), (2, 'nothing-left'))

    def test_reduce(self):
        """
        Reducing to lighter weights contracts the tail.
        """
        path = self.curve_file(genus_one_with_tail()[0])
        code, record = self.run_cli('reduce', '--curve', path,
                                    '--weights', '1,1', '--to', '1/2,1/2')
        self.assertEqual(code, 0)
        self.assertEqual(record['weights'], ['1/2', '1/2'])
        code, result = self.run_cli('reduce', '--curve', path,
                                    '--weights', '1/2,1/2', '--to', '1,1')
        self.assertEqual((code, result['code']), (2, 'not-dominated'))

    def test_bad_weights(self):
        """
        Malformed weights are located.
        """
        path = self.curve_file(three_pointed_line()[0])
        code, result = self.run_cli('validate', '--curve', path,
                                    '--weights', '0.5,1,1')
        self.assertEqual(code, 2)
        self.assertEqual(result['code'], 'bad-input')
        self.assertEqual(result['location'], '--weights[0]')

    def test_missing_file(self):
        """
        Unreadable files are bad input.
        """
        code, result = self.run_cli('validate', '--curve', self.mktemp())
        self.assertEqual((code, result['location']), (2, '--curve'))


class WeightSpaceCommandTests(CommandTestCase):
    def test_chambers(self):
        """
        Two chambers for two markings.
        """
        code, result = self.run_cli('chambers', '-n', '2')
        self.assertEqual(code, 0)
        self.assertEqual(result['count'], 2)
        self.assertEqual([c['family'] for c in result['chambers']],
                         [[], [[1, 2]]])

    def test_too_large(self):
        """
        The enumeration cap is reported as bad input.
        """
        code, result = self.run_cli('chambers', '-n', '9')
        self.assertEqual((code, result['code']), (2, 'too-large'))

    def test_same_chamber(self):
        """
        same-chamber exits 1 across a wall.
        """
        self.assertEqual(self.run_cli('same-chamber', '1/2,1/2,1/2',
                                      '1/3,1/3,1/3'),
                         (1, {'same': False}))
        self.assertEqual(self.run_cli('same-chamber', '1,1', '3/4,1/2'),
                         (0, {'same': True}))

    def test_deterministic(self):
        """
        Equal inputs give byte-identical output.
        """
        first, second = StringIO(), StringIO()
        cli.run(['chambers', '-n', '3'], stdout=first)
        cli.run(['chambers', '-n', '3'], stdout=second)
        self.assertEqual(first.getvalue(), second.getvalue())

    def test_chambers_needs_markings(self):
        """
        Chamber enumeration needs at least one marking.
        """
        for n in ('0', '-1'):
            code, result = self.run_cli('chambers', '-n', n)
            self.assertEqual((code, result['code']), (2, 'usage'))

    def test_chamber_stabilize(self):
        """
        The tail survives above the wall and is contracted into a cluster of
        two markings below it.
        """
        path = self.curve_file(genus_one_with_tail()[0])
        code, result = self.run_cli('chamber-stabilize', '--curve', path,
                                    '--weights', '1,1')
        self.assertEqual(code, 0)
        self.assertEqual(result['distinct'], 2)
        self.assertEqual([r['chamber']['family'] for r in result['chambers']],
                         [[], [[1, 2]]])
        above, below = result['chambers']
        self.assertEqual((above['classical'], below['classical']),
                         (True, False))
        self.assertEqual(len(above['record']['curve']['vertices']), 2)
        self.assertEqual(below['record']['trace'][0]['markings'], [1, 2])

    def test_chamber_stabilize_needs_weights(self):
        """
        The bounding weights are required.
        """
        path = self.curve_file(genus_one_with_tail()[0])
        code, result = self.run_cli('chamber-stabilize', '--curve', path)
        self.assertEqual((code, result['code']), (2, 'usage'))


class OracleCommandTests(CommandTestCase):
    def test_classical_lift(self):
        """
        A deterministic oracle passes and reports its seed.
        """
        code, result = self.run_cli('oracle', '--seed', '3', 'classical-lift')
        self.assertEqual(code, 0)
        self.assertTrue(result['ok'])
        self.assertEqual(result['seed'], 3)

    def test_cases(self):
        """
        --cases bounds a randomized oracle.
        """
        code, result = self.run_cli('oracle', '--cases', '5', '--seed', '1',
                                    'xm-count')
        self.assertEqual((code, result['cases']), (0, 5))

    def test_unknown(self):
        """
        Unknown oracles and stray --cases are usage errors.
        """
        code, result = self.run_cli('oracle', 'nope')
        self.assertEqual((code, result['code']), (2, 'usage'))
        code, result = self.run_cli('oracle', '--cases', '3', 'classical-lift')
        self.assertEqual((code, result['code']), (2, 'usage'))


class OptionsTests(CommandTestCase):
    def test_no_command(self):
        """
        A command is required.
        """
        code, result = self.run_cli()
        self.assertEqual((code, result['code']), (2, 'usage'))

    def test_missing_option(self):
        """
        Required options are enforced.
        """
        code, result = self.run_cli('validate')
        self.assertEqual((code, result['message']), (2, '--curve is required'))
        code, result = self.run_cli('xm', '--m', '4')
        self.assertEqual(code, 2)

    def test_schema(self):
        """
        --schema prints every document schema.
        """
        code, schemas = self.run_cli('--schema')
        self.assertEqual(code, 0)
        self.assertEqual(sorted(schemas),
                         ['curve', 'error', 'group', 'monodromy', 'monoid',
                          'record', 'weights'])

    def test_verbose(self):
        """
        --verbose starts logging to stderr and times the command.
        """
        log = mock.Mock(spec=['msg', 'startLogging'])
        self.patch(cli, 'log', log)
        stdout, stderr = StringIO(), StringIO()
        code = cli.run(['--verbose', 'chambers', '-n', '2'], stdout=stdout,
                       stderr=stderr, clock=Clock())
        self.assertEqual(code, 0)
        log.startLogging.assert_called_once_with(stderr, setStdout=False)
        log.msg.assert_any_call('Enumerated chambers', n=2, chambers=2,
                                programs=mock.ANY)
        log.msg.assert_called_with('twistab operation executed successfully',
                                   operation='chambers', seconds_taken=0)


class DocumentRoundTripTests(CommandTestCase):
    """
    Documents read by the command line are written back unchanged.
    """

    def test_stable_map(self):
        """
        Stabilizing a stable map writes back the documents it read.
        """
        s3 = make_group('S3')
        graph, mono = genus_one_with_tail(s3, s3.lookup('(1 2)'),
                                          s3.lookup('(1 3)'))
        curve = marshal.marshal_curve(graph)
        monodromy = marshal.marshal_monodromy(graph, mono)
        code, record = self.run_cli(
            'stabilize', '--curve', self.write(curve), '--weights', '1/2,1/2',
            '--group', 'S3', '--monodromy', self.write(monodromy))
        self.assertEqual(code, 0)
        self.assertEqual(record['curve'], curve)
        self.assertEqual(record['monodromy'], monodromy)
        self.assertEqual(record['weights'], ['1/2', '1/2'])

    def test_random_documents(self):
        """
        Random curves, weights and monodromy survive a read and a write, and
        the command line accepts them.
        """
        rng = random.Random(51)
        for _ in range(40):
            group = fuzz.random_group(rng)
            graph, a, mono = fuzz.random_instance(rng, group)
            curve = json.loads(json.dumps(marshal.marshal_curve(graph)))
            monodromy = json.loads(json.dumps(
                marshal.marshal_monodromy(graph, mono)))
            text = marshal.marshal(list(a))

            read = marshal.unmarshal_curve(curve)
            self.assertEqual(marshal.marshal_curve(read), curve)
            self.assertEqual(
                marshal.marshal_monodromy(
                    read, marshal.unmarshal_monodromy(monodromy, read, group)),
                monodromy)
            self.assertEqual(marshal.marshal(list(
                marshal.unmarshal_weights(text))), text)

            self.assertEqual(
                self.run_cli('validate', '--curve', self.write(curve),
                             '--weights', ','.join(text),
                             '--group', group.name,
                             '--monodromy', self.write(monodromy)),
                (0, {'valid': True}))

class SchemaFilesTests(TestCase):
    """
    ``doc/schemas`` holds one file per schema printed by ``--schema``.
    """

    def setUp(self):
        self.directory = os.path.join(os.path.dirname(twistab.__file__),
                                      os.pardir, 'doc', 'schemas')
        if not os.path.isdir(self.directory):
            raise SkipTest('doc/schemas is not installed')

    def test_files_match(self):
        """
        Every schema file loads to the schema the command prints.
        """
        names = sorted(f[:-len('.json')] for f in os.listdir(self.directory)
                       if f.endswith('.json'))
        self.assertEqual(names, sorted(SCHEMAS))
        for name in names:
            with open(os.path.join(self.directory, name + '.json')) as f:
                self.assertEqual(json.load(f), SCHEMAS[name], name)
