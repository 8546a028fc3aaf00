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
Fixtures shared by the twistab tests.
"""

from fractions import Fraction

from twisted.trial.unittest import TestCase

from twistab.curve import (
    ClusterRef, CurveGraph, Edge, HalfEdge, MarkingCluster,
    MonodromyAssignment, SpecialPointDatum, Vertex, WeightVector)
from twistab.groups import generated_subgroup, make_group
from twistab.stabilization import records_isomorphic


def weights(*entries):
    """
    ``weights('1/2', 1)`` is the weight vector ``(1/2, 1)``.
    """
    return WeightVector(Fraction(a) for a in entries)


def cluster(*markings):
    return ClusterRef(frozenset(markings))


def assign(group, data):
    """
    A monodromy assignment from ``{vertex id: [(point, loop), ...]}``; every
    image is the subgroup generated by its loop.
    """
    return MonodromyAssignment(group, dict(
        (vid, [SpecialPointDatum(p, g, generated_subgroup(group, [g]))
               for p, g in points])
        for vid, points in data.items()))


def curve(vertices, edges=(), n=None):
    """
    A curve graph whose declared genus is its arithmetic genus.
    """
    if n is None:
        n = max([m for v in vertices for m in v.markings()] or [0])
    graph = CurveGraph(vertices, edges, n, 0)
    return CurveGraph(vertices, edges, n,
                      sum(v.genus for v in vertices) + graph.betti_number())


def three_pointed_line(group=None):
    """
    One rational component with markings 1, 2 and 3 and trivial monodromy.
    """
    group = group or make_group('C1')
    e = group.identity_element()
    graph = curve([Vertex('v', 0, 0,
                          [MarkingCluster([i]) for i in (1, 2, 3)])])
    mono = assign(group, {'v': [(cluster(i), e) for i in (1, 2, 3)]})
    return graph, mono


def genus_one_with_tail(group=None, a=None, b=None, clustered=False):
    """
    A genus one component ``V`` joined by the node ``e0`` to a rational tail
    ``T`` carrying markings 1 and 2.

    The markings sit at distinct points with loops ``a`` and ``b``, or at one
    point with loop ``a`` when ``clustered``.  The node loop on the tail
    closes up the product.
    """
    group = group or make_group('C1')
    e = group.identity_element()
    a = e if a is None else a
    b = e if b is None else b
    if clustered:
        h = a.inverse()
        clusters = [MarkingCluster([1, 2], a.order())]
        tail = [(HalfEdge('e0', 1), h), (cluster(1, 2), a)]
    else:
        h = (a * b).inverse()
        clusters = [MarkingCluster([1], a.order()),
                    MarkingCluster([2], b.order())]
        tail = [(HalfEdge('e0', 1), h), (cluster(1), a), (cluster(2), b)]
    graph = curve([Vertex('V', 1), Vertex('T', 0, 0, clusters)],
                  [Edge('e0', [('V', 0), ('T', 0)], h.order())])
    mono = assign(group, {'V': [(HalfEdge('e0', 0), h.inverse())],
                          'T': tail})
    return graph, mono


def rational_chain(bridge_markings=()):
    """
    Two genus one components ``V`` and ``W`` joined through the rational
    component ``B``, with trivial monodromy.
    """
    group = make_group('C1')
    e = group.identity_element()
    clusters = [MarkingCluster([i]) for i in bridge_markings]
    graph = curve([Vertex('V', 1), Vertex('B', 0, 0, clusters),
                   Vertex('W', 1)],
                  [Edge('e0', [('V', 0), ('B', 0)]),
                   Edge('e1', [('B', 1), ('W', 0)])])
    mono = assign(group, {
        'V': [(HalfEdge('e0', 0), e)],
        'B': [(HalfEdge('e0', 1), e), (HalfEdge('e1', 0), e)] +
             [(cluster(i), e) for i in bridge_markings],
        'W': [(HalfEdge('e1', 1), e)]})
    return graph, mono


class BaseTestCase(TestCase):
    def setUp(self):
        self.s3 = make_group('S3')
        self.t12 = self.s3.lookup('(1 2)')
        self.t13 = self.s3.lookup('(1 3)')

    def assertInvariantViolated(self, violations, invariant, message=None):
        found = [v for v in violations if v.invariant == invariant]
        if not found:
            self.fail('no {0!r} violation in {1!r}'.format(invariant,
                                                          violations))
        if message is not None:
            self.assertIn(message, [v.message for v in found])

    def assertIsomorphicRecords(self, first, second):
        if not records_isomorphic(first, second):
            self.fail('{0!r} and {1!r} are not isomorphic'.format(first,
                                                                 second))
