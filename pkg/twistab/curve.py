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

Dual graphs of marked twisted curves with finite group monodromy.

A :class:`CurveGraph` has one vertex per component and one edge per node.
Markings sit in :class:`MarkingCluster` objects, one cluster per point of the
curve, so coincident markings share a cluster.  A
:class:`MonodromyAssignment` stores, for every vertex, an ordered tuple of
loops in a finite group, one per special point (half-edges and clusters).

All values are immutable; contractions return new graphs and assignments.

"""

import functools
from collections import namedtuple
from fractions import Fraction

import networkx as nx

from twistab.errors import NonAbelianDescent, NotABridge, NotATail
from twistab.groups import (
    FiniteAbelianGroup, abelian_type, commutator_subgroup, generated_subgroup,
    is_abelian)

__all__ = ['WeightVector', 'MarkingCluster', 'Edge', 'Vertex', 'CurveGraph',
           'HalfEdge', 'ClusterRef', 'SpecialPointDatum',
           'MonodromyAssignment', 'Violation', 'validate',
           'representability_violations', 'contract_tail', 'contract_bridge',
           'special_points', 'trivial_monodromy', 'total_degree',
           'marking_weight']


HalfEdge = namedtuple('HalfEdge', ['edge', 'end'])
ClusterRef = namedtuple('ClusterRef', ['markings'])
SpecialPointDatum = namedtuple('SpecialPointDatum',
                               ['point', 'loop', 'image_subgroup'])
Violation = namedtuple('Violation', ['invariant', 'location', 'message'])


class WeightVector(object):
    """
    Rational weights ``(a_1, ..., a_n)``; marking ``i`` has weight
    ``self[i - 1]``.
    """

    def __init__(self, entries):
        self.entries = tuple(Fraction(a) for a in entries)

    def weight(self, marking):
        return self.entries[marking - 1]

    def violations(self):
        return [Violation('weights', 'weights[{0}]'.format(i),
                          'weight a_{0} = {1} is outside (0, 1]'.format(
                              i + 1, a))
                for i, a in enumerate(self.entries) if not 0 < a <= 1]

    def dominated_by(self, other):
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __eq__(self, other):
        return (isinstance(other, WeightVector) and
                other.entries == self.entries)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return '<WeightVector ({0})>'.format(
            ', '.join(str(a) for a in self.entries))


class MarkingCluster(namedtuple('MarkingCluster',
                                ['markings', 'root_order', 'local_group'])):
    """
    Coincident markings at one point, with the order of the root structure
    there and the isomorphism type of its stabilizer.  The stabilizer defaults
    to the cyclic group of order ``root_order``.
    """
    __slots__ = ()

    def __new__(cls, markings, root_order=1, local_group=None):
        markings = frozenset(int(i) for i in markings)
        root_order = int(root_order)
        if local_group is None:
            local_group = FiniteAbelianGroup.from_cyclic_orders(
                [max(root_order, 1)])
        return super(MarkingCluster, cls).__new__(
            cls, markings, root_order, local_group)


class Edge(namedtuple('Edge', ['id', 'ends', 'order'])):
    """
    A node.  ``ends`` is a pair of ``(vertex id, slot)``; a self-loop has both
    ends on one vertex with distinct slots.
    """
    __slots__ = ()

    def __new__(cls, id, ends, order=1):
        ends = tuple((v, int(slot)) for v, slot in ends)
        return super(Edge, cls).__new__(cls, id, ends, int(order))

    def is_self_loop(self):
        return self.ends[0][0] == self.ends[1][0]


class Vertex(namedtuple('Vertex', ['id', 'genus', 'degree', 'clusters'])):
    __slots__ = ()

    def __new__(cls, id, genus=0, degree=0, clusters=()):
        return super(Vertex, cls).__new__(cls, id, int(genus), int(degree),
                                          tuple(clusters))

    def markings(self):
        result = set()
        for c in self.clusters:
            result |= c.markings
        return frozenset(result)


class CurveGraph(object):
    """
    The dual graph of an ``n``-marked prestable curve of genus
    ``declared_genus``.
    """

    def __init__(self, vertices, edges, n, declared_genus):
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.n = int(n)
        self.declared_genus = int(declared_genus)
        self._vertices = dict((v.id, v) for v in self.vertices)
        self._edges = dict((e.id, e) for e in self.edges)

    def vertex(self, vid):
        return self._vertices[vid]

    def edge(self, eid):
        return self._edges[eid]

    def has_vertex(self, vid):
        return vid in self._vertices

    def vertex_ids(self):
        return sorted(self._vertices)

    def half_edges(self, vid):
        return [HalfEdge(e.id, end) for e in self.edges for end in (0, 1)
                if e.ends[end][0] == vid]

    def opposite(self, half_edge):
        return HalfEdge(half_edge.edge, 1 - half_edge.end)

    def endpoint(self, half_edge):
        return self._edges[half_edge.edge].ends[half_edge.end][0]

    def neighbors(self, vid):
        return [self.endpoint(self.opposite(h)) for h in self.half_edges(vid)]

    def to_networkx(self):
        graph = nx.MultiGraph()
        for v in self.vertices:
            graph.add_node(v.id, genus=v.genus, degree=v.degree)
        for e in self.edges:
            graph.add_edge(e.ends[0][0], e.ends[1][0], key=e.id, order=e.order)
        return graph

    def is_connected(self):
        return bool(self.vertices) and nx.is_connected(self.to_networkx())

    def betti_number(self):
        graph = self.to_networkx()
        return (graph.number_of_edges() - graph.number_of_nodes() +
                nx.number_connected_components(graph))

    def replace(self, vertices=None, edges=None):
        return CurveGraph(self.vertices if vertices is None else vertices,
                          self.edges if edges is None else edges,
                          self.n, self.declared_genus)

    def __eq__(self, other):
        return (isinstance(other, CurveGraph) and
                other.vertices == self.vertices and
                other.edges == self.edges and other.n == self.n and
                other.declared_genus == self.declared_genus)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.vertices, self.edges, self.n, self.declared_genus))

    def __repr__(self):
        return '<CurveGraph g={0} n={1} vertices={2} edges={3}>'.format(
            self.declared_genus, self.n, [v.id for v in self.vertices],
            [e.id for e in self.edges])


class MonodromyAssignment(object):
    """
    Loops in ``group`` at the special points of every vertex.

    :param group: the :class:`twistab.groups.FiniteGroup`.
    :param data: dict from vertex id to an ordered sequence of
        :class:`SpecialPointDatum`.
    """

    def __init__(self, group, data):
        self.group = group
        self.data = dict((vid, tuple(points)) for vid, points in data.items())

    def points(self, vid):
        return self.data.get(vid, ())

    def datum(self, vid, point):
        for d in self.data.get(vid, ()):
            if d.point == point:
                return d
        raise KeyError((vid, point))

    def loop(self, vid, point):
        return self.datum(vid, point).loop

    def product(self, vid):
        result = self.group.identity_element()
        for d in self.points(vid):
            result = result * d.loop
        return result

    def generated(self, vid, exclude=()):
        """
        The subgroup generated by every image subgroup at ``vid``.
        """
        gens = set()
        for d in self.points(vid):
            if d.point not in exclude:
                gens |= d.image_subgroup
        return generated_subgroup(self.group, gens)

    def replace(self, updates, removed=()):
        data = dict((vid, points) for vid, points in self.data.items()
                    if vid not in removed)
        data.update(updates)
        return MonodromyAssignment(self.group, data)

    def __eq__(self, other):
        return (isinstance(other, MonodromyAssignment) and
                other.group is self.group and other.data == self.data)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<MonodromyAssignment over {0} on {1} vertices>'.format(
            self.group.name, len(self.data))


def special_points(graph, vertex):
    """
    The incident half-edges of ``vertex`` followed by its clusters.  A
    self-loop contributes both of its half-edges.
    """
    vid = getattr(vertex, 'id', vertex)
    v = graph.vertex(vid)
    return (list(graph.half_edges(vid)) +
            [ClusterRef(c.markings) for c in v.clusters])


def total_degree(graph):
    return sum(v.degree for v in graph.vertices)


def marking_weight(vertex, weights):
    return sum((weights.weight(i) for i in vertex.markings()), Fraction(0))


def trivial_monodromy(graph, group):
    identity = group.identity_element()
    data = {}
    for v in graph.vertices:
        data[v.id] = [SpecialPointDatum(p, identity, frozenset([identity]))
                      for p in special_points(graph, v)]
    return MonodromyAssignment(group, data)


@functools.lru_cache(maxsize=32)
def _commutators(group):
    return commutator_subgroup(group)


def _structure_violations(graph):
    violations = []
    if not graph.vertices or not graph.is_connected():
        return [Violation('connected', None,
                          'curve must be connected and nonempty')]
    if len(graph._vertices) != len(graph.vertices):
        violations.append(Violation('vertex-ids', None,
                                    'vertex ids must be unique'))
    if len(graph._edges) != len(graph.edges):
        violations.append(Violation('edge-ids', None,
                                    'edge ids must be unique'))
    for v in graph.vertices:
        if v.genus < 0 or v.degree < 0:
            violations.append(Violation(
                'vertex', v.id, 'genus and degree of {0} must be '
                'nonnegative'.format(v.id)))
        seen = set()
        for c in v.clusters:
            if not c.markings:
                violations.append(Violation(
                    'cluster', v.id, 'empty cluster on {0}'.format(v.id)))
            if c.root_order < 1:
                violations.append(Violation(
                    'cluster', v.id, 'root order on {0} must be '
                    'positive'.format(v.id)))
            if seen & c.markings:
                violations.append(Violation(
                    'cluster', v.id, 'clusters on {0} overlap'.format(v.id)))
            seen |= c.markings
    ends = {}
    for e in graph.edges:
        for end in e.ends:
            if end in ends and ends[end] != e.id:
                violations.append(Violation(
                    'edge', e.id, '{0} and {1} share the end {2} slot '
                    '{3}'.format(ends[end], e.id, end[0], end[1])))
            ends.setdefault(end, e.id)
        if e.order < 1:
            violations.append(Violation(
                'edge', e.id, 'node order of {0} must be positive'.format(
                    e.id)))
        if e.ends[0] == e.ends[1]:
            violations.append(Violation(
                'edge', e.id, 'ends of {0} must be distinct slots'.format(
                    e.id)))
    b1 = graph.betti_number()
    genus_sum = sum(v.genus for v in graph.vertices)
    if graph.declared_genus != genus_sum + b1:
        violations.append(Violation(
            'genus', None, 'genus formula: {0} ≠ {1}+{2}'.format(
                graph.declared_genus, genus_sum, b1)))
    counts = {}
    for v in graph.vertices:
        for c in v.clusters:
            for i in c.markings:
                counts[i] = counts.get(i, 0) + 1
    for i in range(1, graph.n + 1):
        if counts.get(i, 0) != 1:
            violations.append(Violation(
                'markings', 'marking {0}'.format(i),
                'marking {0} appears {1} times'.format(i, counts.get(i, 0))))
    for i in sorted(set(counts) - set(range(1, graph.n + 1))):
        violations.append(Violation(
            'markings', 'marking {0}'.format(i),
            'marking {0} is outside 1..{1}'.format(i, graph.n)))
    return violations


def representability_violations(graph, mono):
    """
    Node and cluster loops must have the orders the curve declares, and the
    image of every cluster stabilizer must be injective.
    """
    violations = []
    for v in graph.vertices:
        clusters = dict((c.markings, c) for c in v.clusters)
        for d in mono.points(v.id):
            if isinstance(d.point, HalfEdge):
                e = graph.edge(d.point.edge)
                if d.loop.order() != e.order:
                    violations.append(Violation(
                        'representable', v.id,
                        'loop at {0} has order {1}, node order is {2}'.format(
                            e.id, d.loop.order(), e.order)))
            elif d.point.markings in clusters:
                c = clusters[d.point.markings]
                if len(d.image_subgroup) != c.local_group.order:
                    violations.append(Violation(
                        'representable', v.id,
                        'image of cluster {0} has order {1}, stabilizer has '
                        'order {2}'.format(sorted(c.markings),
                                           len(d.image_subgroup),
                                           c.local_group.order)))
                if d.loop.order() != c.root_order:
                    violations.append(Violation(
                        'representable', v.id,
                        'loop at cluster {0} has order {1}, root order is '
                        '{2}'.format(sorted(c.markings), d.loop.order(),
                                     c.root_order)))
    return violations


def _monodromy_violations(graph, mono):
    violations = []
    group = mono.group
    identity = group.identity_element()
    for v in graph.vertices:
        expected = special_points(graph, v)
        given = [d.point for d in mono.points(v.id)]
        if len(given) != len(set(given)) or set(given) != set(expected):
            violations.append(Violation(
                'monodromy', v.id, 'monodromy at {0} must list each special '
                'point exactly once'.format(v.id)))
            continue
        if any(d.loop.group is not group or
               any(h.group is not group for h in d.image_subgroup)
               for d in mono.points(v.id)):
            violations.append(Violation(
                'monodromy', v.id, 'monodromy at {0} uses elements of another '
                'group'.format(v.id)))
            continue
        product = mono.product(v.id)
        if v.degree == 0 and v.genus == 0 and product != identity:
            violations.append(Violation(
                'product-one', v.id,
                'product-one fails at {0}'.format(v.id)))
        elif (v.degree == 0 and v.genus >= 1 and
              product not in _commutators(group)):
            violations.append(Violation(
                'product-one', v.id, 'product of loops at {0} is not a '
                'commutator'.format(v.id)))
        for d in mono.points(v.id):
            if isinstance(d.point, HalfEdge):
                if d.image_subgroup != generated_subgroup(group, [d.loop]):
                    violations.append(Violation(
                        'monodromy', v.id, 'image at half-edge {0} must be '
                        'generated by its loop'.format(d.point.edge)))
                continue
            image = d.image_subgroup
            if (d.loop not in image or not is_abelian(image) or
                    generated_subgroup(group, image) != image):
                violations.append(Violation(
                    'monodromy', v.id, 'image at cluster {0} must be an '
                    'abelian subgroup containing its loop'.format(
                        sorted(d.point.markings))))
    if violations:
        return violations
    for e in graph.edges:
        a = mono.loop(e.ends[0][0], HalfEdge(e.id, 0))
        b = mono.loop(e.ends[1][0], HalfEdge(e.id, 1))
        if a * b != identity:
            violations.append(Violation(
                'edge-inverse', e.id,
                'loops at the two ends of {0} are not inverse'.format(e.id)))
    return violations + representability_violations(graph, mono)


def validate(graph, weights, mono=None):
    """
    Check every structural invariant of a curve, its weights and monodromy.

    :returns: a list of :class:`Violation`; empty when the input is valid.
    """
    violations = _structure_violations(graph)
    if len(weights) != graph.n:
        violations.append(Violation(
            'weights', 'weights', 'expected {0} weights, got {1}'.format(
                graph.n, len(weights))))
    violations.extend(weights.violations())
    if mono is not None and not violations:
        violations.extend(_monodromy_violations(graph, mono))
    return violations


def contract_tail(graph, mono, vid):
    """
    Contract the rational tail ``vid`` into a cluster on its neighbour.

    The markings of the tail form one new cluster whose image is the abelian
    subgroup generated by the tail's cluster images, whose loop is the
    neighbour's loop at the removed node, and which takes the node's slot in
    the neighbour's ordered loop tuple.  An unmarked tail simply disappears.

    :raises NotATail: unless ``vid`` has genus 0, degree 0 and one node.
    :raises NonAbelianDescent: if the tail's monodromy is not abelian.
    """
    if not graph.has_vertex(vid):
        raise NotATail(vid, 'no such vertex')
    v = graph.vertex(vid)
    if v.genus or v.degree:
        raise NotATail(vid, 'positive genus or degree')
    halves = graph.half_edges(vid)
    if len(halves) != 1:
        raise NotATail(vid, '{0} nodes'.format(len(halves)))
    node = halves[0]
    image = mono.generated(vid, exclude=(node,))
    if not is_abelian(image):
        raise NonAbelianDescent(vid)

    far = graph.opposite(node)
    wid = graph.endpoint(far)
    w = graph.vertex(wid)
    far_datum = mono.datum(wid, far)
    markings = v.markings()
    vertices, points = [], []
    if markings:
        loop = far_datum.loop
        cluster = MarkingCluster(markings, loop.order(), abelian_type(image))
        replacement = SpecialPointDatum(ClusterRef(markings), loop, image)
        w = w._replace(clusters=w.clusters + (cluster,))
        points = [replacement if d.point == far else d
                  for d in mono.points(wid)]
    else:
        points = [d for d in mono.points(wid) if d.point != far]
    for u in graph.vertices:
        if u.id == wid:
            vertices.append(w)
        elif u.id != vid:
            vertices.append(u)
    edges = [e for e in graph.edges if e.id != node.edge]
    return (graph.replace(vertices=vertices, edges=edges),
            mono.replace({wid: points}, removed=(vid,)))


def contract_bridge(graph, mono, vid):
    """
    Contract the unmarked rational bridge ``vid``, merging its two edges.

    The merged edge keeps the id of the first edge in the bridge's loop tuple
    and has node order ``order(h)`` for the bridge loop ``h``; the neighbours
    keep their loops.

    :raises NotABridge: unless ``vid`` has genus 0, degree 0, no markings and
        two half-edges of distinct edges carrying inverse loops.
    """
    if not graph.has_vertex(vid):
        raise NotABridge(vid, 'no such vertex')
    v = graph.vertex(vid)
    if v.genus or v.degree:
        raise NotABridge(vid, 'positive genus or degree')
    if v.clusters:
        raise NotABridge(vid, 'carries markings')
    points = [d for d in mono.points(vid) if isinstance(d.point, HalfEdge)]
    if len(graph.half_edges(vid)) != 2 or len(points) != 2:
        raise NotABridge(vid, '{0} nodes'.format(len(graph.half_edges(vid))))
    first, second = points
    if first.point.edge == second.point.edge:
        raise NotABridge(vid, 'only a self-node')
    if first.loop * second.loop != mono.group.identity_element():
        raise NotABridge(vid, 'loops are not inverse')

    far1 = graph.opposite(first.point)
    far2 = graph.opposite(second.point)
    e1, e2 = graph.edge(far1.edge), graph.edge(far2.edge)
    w1, w2 = graph.endpoint(far1), graph.endpoint(far2)
    end1 = e1.ends[far1.end]
    end2 = e2.ends[far2.end]
    if end1 == end2 or (w1 == w2 and end1[1] == end2[1]):
        used = [slot for e in graph.edges for u, slot in e.ends if u == w2]
        end2 = (w2, max(used) + 1)
    ends = [None, None]
    ends[far1.end] = end1
    ends[1 - far1.end] = end2
    merged = Edge(e1.id, ends, first.loop.order())
    moved = HalfEdge(e1.id, 1 - far1.end)

    edges = []
    for e in graph.edges:
        if e.id == e1.id:
            edges.append(merged)
        elif e.id != e2.id:
            edges.append(e)
    vertices = [u for u in graph.vertices if u.id != vid]
    w2_points = [d._replace(point=moved) if d.point == far2 else d
                 for d in mono.points(w2)]
    return (graph.replace(vertices=vertices, edges=edges),
            mono.replace({w2: w2_points}, removed=(vid,)))
