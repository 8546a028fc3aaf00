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

import random

from twisted.trial.unittest import TestCase

from twistab import fuzz
from twistab.curve import validate
from twistab.groups import make_group
from twistab.stability import is_prestable, is_stable
from twistab.test.util import weights


class RandomInstanceTests(TestCase):
    def test_valid(self):
        """
        Generated maps satisfy every invariant and are prestable.
        """
        rng = random.Random(5)
        for spec in ('C1', 'S3', 'D4', 'Q8'):
            group = make_group(spec)
            for _ in range(50):
                graph, a, mono = fuzz.random_instance(rng, group)
                self.assertEqual(validate(graph, a, mono), [])
                self.assertTrue(is_prestable(graph, a)[0])

    def test_distinct(self):
        """
        Fixed weights and distinct markings are honoured.
        """
        rng = random.Random(2)
        a = weights(1, 1, 1)
        for _ in range(20):
            graph, b, _ = fuzz.random_instance(rng, make_group('C1'),
                                               weights=a, distinct=True)
            self.assertEqual(b, a)
            for v in graph.vertices:
                self.assertTrue(all(len(c.markings) == 1 for c in v.clusters))

    def test_stabilizable(self):
        """
        Stabilizable instances come with a stable record.
        """
        rng = random.Random(3)
        group = make_group('S3')
        for _ in range(20):
            _, a, _, record = fuzz.random_stabilizable(rng, group)
            self.assertTrue(is_stable(record.graph, a, record.mono).stable)

    def test_dominated(self):
        """
        Dominated weights stay in range and below the original.
        """
        rng = random.Random(4)
        b = weights('1/2', 1, '1/3')
        for _ in range(20):
            a = fuzz.random_dominated(rng, b)
            self.assertTrue(a.dominated_by(b))
            self.assertEqual(a.violations(), [])

    def test_monoid(self):
        """
        Random monoids honour a fixed dimension and the generator range.
        """
        rng = random.Random(6)
        for _ in range(20):
            monoid = fuzz.random_monoid(rng, n=2)
            self.assertEqual(monoid.n, 2)
            for g in monoid.generators:
                self.assertTrue(all(0 <= x < 2 for x in g))

    def test_relabel(self):
        """
        Relabeled maps use the new names and stay valid.
        """
        rng = random.Random(7)
        group = make_group('S3')
        for _ in range(20):
            graph, a, mono = fuzz.random_instance(rng, group)
            names = fuzz.random_relabeling(rng, graph)
            relabeled, image = fuzz.relabel_vertices(graph, mono, names)
            self.assertEqual(relabeled.vertex_ids(),
                             sorted(names.values()))
            self.assertEqual(validate(relabeled, a, image), [])
