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

Stabilization of weighted twisted maps to ``BG``, reductions between weight
vectors and the chamber decomposition of weight space.

:func:`stabilize` contracts unstable rational tails until none remain, then
unstable rational bridges.  Within a round components are visited in
ascending vertex id order, or in a shuffled order when a random generator is
passed in, which the tests use to check that the order does not matter.

"""

import itertools
from collections import namedtuple
from fractions import Fraction

import networkx as nx

from twistab.curve import (
    HalfEdge, Violation, WeightVector, contract_bridge, contract_tail,
    marking_weight, validate)
from twistab.errors import (
    InvalidInput, LengthMismatch, NotDominated, NothingLeft, TooLarge)
from twistab.simplex import maximize
from twistab.stability import (
    BranchKind, classify_branch, has_abelian_contraction, is_prestable,
    is_stable)

__all__ = ['MAX_CHAMBER_N', 'Contraction', 'StableMapRecord', 'Chamber',
           'unstable_components', 'stabilize', 'same_chamber', 'sign_pattern',
           'chambers', 'reduce_weights', 'is_classical',
           'chamber_stabilizations', 'records_isomorphic']

MAX_CHAMBER_N = 5

TAIL = 'tail'
BRIDGE = 'bridge'

Contraction = namedtuple('Contraction', ['kind', 'vertex', 'into', 'markings'])
Chamber = namedtuple('Chamber', ['n', 'family', 'witness'])


class StableMapRecord(object):
    """
    A stable map together with the contractions that produced it.

    :ivar trace: list of :class:`Contraction` in the order applied.
    """

    def __init__(self, graph, weights, mono, trace=()):
        self.graph = graph
        self.weights = weights
        self.mono = mono
        self.trace = list(trace)

    def __repr__(self):
        return '<StableMapRecord {0!r} after {1} contractions>'.format(
            self.graph, len(self.trace))


def _is_unstable_tail(graph, weights, mono, vid):
    return (classify_branch(graph, vid) is BranchKind.EXTREMAL_BRANCH and
            has_abelian_contraction(graph, mono, vid) and
            marking_weight(graph.vertex(vid), weights) <= 1)


def _is_unstable_bridge(graph, vid):
    if classify_branch(graph, vid) is not BranchKind.INTERIOR_BRANCH:
        return False
    if graph.vertex(vid).clusters:
        return False
    first, second = graph.half_edges(vid)
    return first.edge != second.edge


def unstable_components(graph, weights, mono):
    """
    :returns: ``(tails, bridges)``, the sets of vertex ids of unstable
        rational tails and unstable rational bridges.
    """
    tails, bridges = set(), set()
    for vid in graph.vertex_ids():
        if _is_unstable_tail(graph, weights, mono, vid):
            tails.add(vid)
        elif _is_unstable_bridge(graph, vid):
            bridges.add(vid)
    return tails, bridges


def _rounds(graph, weights, mono, kind, rng, log, trace):
    index = 0 if kind == TAIL else 1
    for _ in range(len(graph.vertices) + 1):
        found = sorted(unstable_components(graph, weights, mono)[index])
        if not found:
            break
        if rng is not None:
            rng.shuffle(found)
        for vid in found:
            if not graph.has_vertex(vid):
                continue
            if kind == TAIL:
                if not _is_unstable_tail(graph, weights, mono, vid):
                    continue
                into = graph.endpoint(graph.opposite(graph.half_edges(vid)[0]))
                markings = tuple(sorted(graph.vertex(vid).markings()))
                graph, mono = contract_tail(graph, mono, vid)
                if log:
                    log.msg('Contracted unstable tail', vertex=vid, into=into,
                            markings=list(markings))
            else:
                if not _is_unstable_bridge(graph, vid):
                    continue
                points = [d.point for d in mono.points(vid)
                          if isinstance(d.point, HalfEdge)]
                into = points[0].edge
                markings = ()
                graph, mono = contract_bridge(graph, mono, vid)
                if log:
                    log.msg('Contracted unstable bridge', vertex=vid,
                            edge=into)
            trace.append(Contraction(kind, vid, into, markings))
    return graph, mono


def stabilize(graph, weights, mono, rng=None, log=None):
    """
    Contract every unstable tail and bridge of a prestable map.

    :param rng: optional :class:`random.Random` used to shuffle the order in
        which components are contracted within a round.
    :param log: optional bound logger with a ``.msg()`` method.

    :returns: :class:`StableMapRecord`
    :raises InvalidInput: if the input is not a valid prestable map.
    :raises NothingLeft: if no stable model of the map exists because the
        whole curve would have to be contracted.
    """
    if not isinstance(weights, WeightVector):
        weights = WeightVector(weights)
    violations = validate(graph, weights, mono)
    if violations:
        raise InvalidInput(violations)
    prestable, offending = is_prestable(graph, weights)
    if not prestable:
        raise InvalidInput([Violation('prestable', vid, reason)
                            for vid, reason in offending])

    trace = []
    graph, mono = _rounds(graph, weights, mono, TAIL, rng, log, trace)
    graph, mono = _rounds(graph, weights, mono, BRIDGE, rng, log, trace)

    report = is_stable(graph, weights, mono)
    if not report.stable:
        raise NothingLeft('; '.join(reason for _, reason in report.offending))
    if log:
        log.msg('Stabilization finished', contractions=len(trace),
                vertices=len(graph.vertices))
    return StableMapRecord(graph, weights, mono, trace)


def index_sets(n):
    return [I for size in range(2, n + 1)
            for I in itertools.combinations(range(1, n + 1), size)]


def sign_pattern(weights):
    """
    The family of index sets ``I``, ``|I| >= 2``, with ``sum_I a_i <= 1``.
    """
    weights = list(weights)
    return tuple(sorted(I for I in index_sets(len(weights))
                        if sum(weights[i - 1] for i in I) <= 1))


def same_chamber(a, b):
    """
    :raises LengthMismatch: if ``a`` and ``b`` differ in length.
    """
    if len(a) != len(b):
        raise LengthMismatch(len(a), len(b))
    return sign_pattern(a) == sign_pattern(b)


def chamber_witness(n, family, excluded, bound=None):
    """
    A point with ``sum_I x <= 1`` on ``family`` and ``sum_J x > 1`` on
    ``excluded``, with ``0 < x_i <= bound_i``, or None.

    Maximizes ``t`` subject to ``sum_J x >= 1 + t`` and ``t <= x_i``, written
    with ``u = t + 1 >= 0`` so the origin is feasible.
    """
    bound = [Fraction(1)] * n if bound is None else list(bound)
    rows, rhs = [], []
    for I in family:
        rows.append([int(i + 1 in I) for i in range(n)] + [0])
        rhs.append(1)
    for J in excluded:
        rows.append([-int(i + 1 in J) for i in range(n)] + [1])
        rhs.append(0)
    for i in range(n):
        rows.append([-int(i == j) for j in range(n)] + [1])
        rhs.append(1)
        rows.append([int(i == j) for j in range(n)] + [0])
        rhs.append(bound[i])
    rows.append([0] * n + [1])
    rhs.append(2)
    value, x = maximize([0] * n + [1], rows, rhs)
    if value <= 1:
        return None
    return WeightVector(x[:n])


def chambers(n, log=None):
    """
    Every chamber of ``(0, 1]^n``, sorted by family.

    Downward-closed families are built subset by subset in order of size, and
    a partial family is abandoned as soon as its decided inequalities have no
    common solution.

    :raises TooLarge: if ``n`` exceeds :data:`MAX_CHAMBER_N`.
    """
    if n > MAX_CHAMBER_N:
        raise TooLarge(n, MAX_CHAMBER_N)
    subsets = index_sets(n)
    found = []
    programs = [0]

    def feasible(family, excluded):
        programs[0] += 1
        return chamber_witness(n, family, excluded)

    def extend(position, family, excluded):
        if position == len(subsets):
            witness = feasible(family, excluded)
            if witness is not None:
                found.append(Chamber(n, tuple(sorted(family)), witness))
            return
        I = subsets[position]
        faces = [J for J in itertools.combinations(I, len(I) - 1)
                 if len(J) >= 2]
        if all(J in family for J in faces):
            if feasible(family + [I], excluded) is not None:
                extend(position + 1, family + [I], excluded)
        if feasible(family, excluded + [I]) is not None:
            extend(position + 1, family, excluded + [I])

    extend(0, [], [])
    found.sort(key=lambda c: c.family)
    if log:
        log.msg('Enumerated chambers', n=n, chambers=len(found),
                programs=programs[0])
    return found


def reduce_weights(rec, a, log=None):
    """
    The ``a``-stabilization of a map stable for ``rec.weights``.

    :raises NotDominated: if some ``a_i > b_i``.
    :raises InvalidInput: if ``rec`` is not stable for its own weights.
    """
    b = rec.weights
    if not isinstance(a, WeightVector):
        a = WeightVector(a)
    if len(a) != len(b):
        raise LengthMismatch(len(b), len(a))
    for i, (ai, bi) in enumerate(zip(a, b)):
        if ai > bi:
            raise NotDominated(i + 1, ai, bi)
    if not is_stable(rec.graph, b, rec.mono).stable:
        raise InvalidInput([Violation('stable', None,
                                      'record is not stable for its weights')])
    return stabilize(rec.graph, a, rec.mono, log=log)


def is_classical(record):
    """
    Whether every contracted tail carried at most one marking, so no two
    markings were brought together.
    """
    return all(len(c.markings) <= 1 for c in record.trace if c.kind == TAIL)


def chamber_stabilizations(graph, mono, weights_b, log=None):
    """
    Stabilize a fixed map at a point of every chamber below ``weights_b``.

    :returns: list of ``(Chamber, StableMapRecord or None)``; None marks a
        chamber where no stable model exists.
    """
    n = len(weights_b)
    results = []
    for chamber in chambers(n, log=log):
        excluded = [J for J in index_sets(n) if J not in chamber.family]
        witness = chamber_witness(n, chamber.family, excluded, bound=weights_b)
        if witness is None:
            continue
        chamber = chamber._replace(witness=witness)
        try:
            record = stabilize(graph, witness, mono, log=log)
        except NothingLeft:
            record = None
        results.append((chamber, record))
    return results


def _dual_graph(record):
    graph, mono = record.graph, record.mono
    result = nx.MultiGraph()
    for v in graph.vertices:
        clusters = []
        for c in v.clusters:
            datum = [d for d in mono.points(v.id)
                     if not isinstance(d.point, HalfEdge) and
                     d.point.markings == c.markings][0]
            clusters.append((tuple(sorted(c.markings)), c.root_order,
                             c.local_group.invariant_factors,
                             datum.loop.index,
                             tuple(sorted(g.index for g in
                                          datum.image_subgroup))))
        loops = sorted(d.loop.index for d in mono.points(v.id)
                       if isinstance(d.point, HalfEdge))
        result.add_node(v.id, label=(v.genus, v.degree,
                                     tuple(sorted(clusters)), tuple(loops)))
    for e in graph.edges:
        result.add_edge(e.ends[0][0], e.ends[1][0], key=e.id, order=e.order)
    return result


def records_isomorphic(first, second):
    """
    Whether two records have isomorphic dual graphs with matching genera,
    degrees, clusters, node orders and loops.
    """
    if (first.graph.n != second.graph.n or
            first.graph.declared_genus != second.graph.declared_genus or
            first.mono.group is not second.mono.group):
        return False

    def edge_match(a, b):
        return (sorted(d['order'] for d in a.values()) ==
                sorted(d['order'] for d in b.values()))

    return nx.is_isomorphic(_dual_graph(first), _dual_graph(second),
                            node_match=lambda a, b: a['label'] == b['label'],
                            edge_match=edge_match)
