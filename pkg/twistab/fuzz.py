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

Seeded generators of random valid prestable maps.

Every generator takes a :class:`random.Random`.  :func:`seed_from_env` reads
``TWISTAB_SEED`` so a failing property can be replayed from the shell.

Monodromy is chosen so that every relation holds by construction: loops at
clusters and at edges outside a spanning tree are random, and the loop on each
tree edge is solved for from the leaves towards the root.  The root always
carries a cluster, whose loop absorbs what is left.

"""

import os
import random
from fractions import Fraction

from twistab.curve import (
    ClusterRef, CurveGraph, Edge, HalfEdge, MarkingCluster,
    MonodromyAssignment, SpecialPointDatum, Vertex, WeightVector,
    special_points)
from twistab.errors import NothingLeft
from twistab.groups import generated_subgroup, make_group
from twistab.monoid import AdmissibleMonoid
from twistab.stabilization import stabilize

__all__ = ['seed_from_env', 'make_rng', 'random_weights', 'random_instance',
           'random_stabilizable', 'random_dominated', 'random_group',
           'random_monoid', 'random_relabeling', 'relabel_vertices',
           'transport_monodromy', 'conjugate_monodromy']

MAX_DENOMINATOR = 12

GROUP_SPECS = ('C1', 'C2', 'C3', 'C4', 'C6', 'C2xC2', 'S3', 'D4', 'Q8', 'A4')


def seed_from_env(default=0):
    return int(os.environ.get('TWISTAB_SEED', default))


def make_rng(seed=None):
    return random.Random(seed_from_env() if seed is None else seed)


def _weight(rng, max_denominator):
    q = rng.randint(1, max_denominator)
    return Fraction(rng.randint(1, q), q)


def random_weights(rng, n, max_denominator=MAX_DENOMINATOR):
    return WeightVector(_weight(rng, max_denominator) for _ in range(n))


def random_dominated(rng, weights, max_denominator=MAX_DENOMINATOR):
    """
    A random weight vector below ``weights`` coordinatewise.
    """
    result = []
    for b in weights:
        a = _weight(rng, max_denominator)
        result.append(min(a, b))
    return WeightVector(result)


def _clusters(rng, n, owners, weights, distinct):
    per_vertex = {}
    for marking in range(1, n + 1):
        groups = per_vertex.setdefault(owners[marking], [])
        weight = weights.weight(marking)
        candidates = [g for g in groups
                      if sum(weights.weight(i) for i in g) + weight <= 1]
        if candidates and not distinct and rng.random() < 0.4:
            rng.choice(candidates).append(marking)
        else:
            groups.append([marking])
    return per_vertex


def random_instance(rng, group, max_vertices=8, max_markings=6,
                    weights=None, distinct=False, allow_degree=True,
                    max_genus=2, extra_edges=True):
    """
    A random valid prestable map to ``BG``.

    :param weights: fixed weights; otherwise random ones with denominators
        up to :data:`MAX_DENOMINATOR`.
    :param distinct: keep every marking in its own cluster.

    :returns: ``(graph, weights, mono)``
    """
    count = rng.randint(1, max_vertices)
    ids = ['v{0:02d}'.format(i) for i in range(count)]
    n = len(weights) if weights is not None else rng.randint(1, max_markings)
    if weights is None:
        weights = random_weights(rng, n)

    parents = {}
    edges = []
    slots = dict((vid, 0) for vid in ids)

    def add_edge(u, v):
        eid = 'e{0:02d}'.format(len(edges))
        ends = [(u, slots[u]), (v, slots[v] + (1 if u == v else 0))]
        slots[u] += 1
        slots[v] += 1
        edges.append(Edge(eid, ends, 1))
        return eid

    for i in range(1, count):
        parent = ids[rng.randrange(i)]
        parents[ids[i]] = add_edge(parent, ids[i])
    if extra_edges:
        for _ in range(rng.randint(0, 2) if rng.random() < 0.3 else 0):
            add_edge(rng.choice(ids), rng.choice(ids))

    owners = {1: ids[0]}
    for marking in range(2, n + 1):
        owners[marking] = rng.choice(ids)
    groups = _clusters(rng, n, owners, weights, distinct)

    genera, degrees = {}, {}
    for vid in ids:
        genera[vid] = 0 if rng.random() < 0.7 else rng.randint(1, max_genus)
        degrees[vid] = (rng.randint(1, 2)
                        if allow_degree and rng.random() < 0.1 else 0)

    # loops first, then node orders and root orders from them
    loops = {}
    shell = CurveGraph(
        [Vertex(vid, genera[vid], degrees[vid],
                [MarkingCluster(g) for g in groups.get(vid, [])])
         for vid in ids], edges, n, 0)
    tree = set(parents.values())

    def random_element():
        return group.element(rng.randrange(group.order))

    for e in edges:
        if e.id not in tree:
            g = random_element()
            loops[(e.ends[0][0], HalfEdge(e.id, 0))] = g
            loops[(e.ends[1][0], HalfEdge(e.id, 1))] = g.inverse()
    for vid in ids:
        for markings in groups.get(vid, []):
            loops[(vid, ClusterRef(frozenset(markings)))] = random_element()

    def solve(vid, unknown):
        points = special_points(shell, vid)
        before = group.identity_element()
        after = group.identity_element()
        seen = False
        for p in points:
            if p == unknown:
                seen = True
            elif seen:
                after = after * loops[(vid, p)]
            else:
                before = before * loops[(vid, p)]
        if degrees[vid]:
            return random_element()
        return before.inverse() * after.inverse()

    for vid in reversed(ids[1:]):
        e = shell.edge(parents[vid])
        child_end = 1 if e.ends[1][0] == vid else 0
        mine = HalfEdge(e.id, child_end)
        x = solve(vid, mine)
        loops[(vid, mine)] = x
        loops[(e.ends[1 - child_end][0], HalfEdge(e.id, 1 - child_end))] = \
            x.inverse()
    root = ids[0]
    root_cluster = ClusterRef(frozenset(groups[root][0]))
    loops[(root, root_cluster)] = solve(root, root_cluster)

    edges = [e._replace(order=loops[(e.ends[0][0], HalfEdge(e.id, 0))].order())
             for e in edges]
    vertices, data = [], {}
    for vid in ids:
        clusters = []
        for markings in groups.get(vid, []):
            loop = loops[(vid, ClusterRef(frozenset(markings)))]
            clusters.append(MarkingCluster(markings, loop.order()))
        vertices.append(Vertex(vid, genera[vid], degrees[vid], clusters))
    graph = CurveGraph(vertices, edges, n, 0)
    graph = CurveGraph(vertices, edges, n,
                       sum(genera.values()) + graph.betti_number())
    for vid in ids:
        points = []
        for p in special_points(graph, vid):
            loop = loops[(vid, p)]
            points.append(SpecialPointDatum(
                p, loop, generated_subgroup(group, [loop])))
        data[vid] = points
    return graph, weights, MonodromyAssignment(group, data)


def random_stabilizable(rng, group, attempts=100, **kwargs):
    """
    Like :func:`random_instance`, but only maps that have a stable model.

    :returns: ``(graph, weights, mono, record)``
    """
    for _ in range(attempts):
        graph, weights, mono = random_instance(rng, group, **kwargs)
        try:
            return graph, weights, mono, stabilize(graph, weights, mono)
        except NothingLeft:
            continue
    raise NothingLeft('no stabilizable instance in {0} attempts'.format(
        attempts))


def random_group(rng, specs=GROUP_SPECS):
    return make_group(rng.choice(specs))


def random_monoid(rng, n=None, max_n=3, max_generators=3, max_denominator=6):
    """
    A random admissible monoid with generators in ``[0, 2)^n``.

    :param n: the dimension; random up to ``max_n`` when omitted.
    """
    if n is None:
        n = rng.randint(1, max_n)
    generators = []
    for _ in range(rng.randint(0, max_generators)):
        generator = []
        for _ in range(n):
            q = rng.randint(1, max_denominator)
            generator.append(Fraction(rng.randrange(2 * q), q))
        generators.append(tuple(generator))
    return AdmissibleMonoid(n, generators)


def random_relabeling(rng, graph):
    """
    :returns: dict from each vertex id to a fresh id, in shuffled order.
    """
    ids = graph.vertex_ids()
    names = ['w{0:02d}'.format(i) for i in range(len(ids))]
    rng.shuffle(names)
    return dict(zip(ids, names))


def relabel_vertices(graph, mono, names):
    """
    Rename every vertex by ``names``; slots and loops are unchanged.

    :returns: ``(graph, mono)``
    """
    vertices = [v._replace(id=names[v.id]) for v in graph.vertices]
    edges = [e._replace(ends=tuple((names[vid], slot) for vid, slot in e.ends))
             for e in graph.edges]
    data = dict((names[vid], points) for vid, points in mono.data.items())
    return (CurveGraph(vertices, edges, graph.n, graph.declared_genus),
            MonodromyAssignment(mono.group, data))


def transport_monodromy(mono, image):
    """
    Apply the group automorphism ``image`` to every loop and image subgroup.
    """
    data = {}
    for vid, points in mono.data.items():
        data[vid] = [d._replace(loop=image(d.loop),
                                image_subgroup=frozenset(
                                    image(g) for g in d.image_subgroup))
                     for d in points]
    return MonodromyAssignment(mono.group, data)


def conjugate_monodromy(mono, h):
    return transport_monodromy(mono, lambda g: h.inverse() * g * h)
