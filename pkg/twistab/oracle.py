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

Brute-force oracles.

Each oracle recomputes a result of the library by an independent route
(exhaustive enumeration, a separate contraction engine, grid sampling) and
counts disagreements.  Every oracle returns a dict with the keys ``oracle``,
``cases``, ``failures`` and ``ok``, plus ``example`` describing the first
failure when there is one.

"""

import itertools
import random
from fractions import Fraction

import networkx as nx

from twistab import fuzz
from twistab.curve import WeightVector, total_degree
from twistab.errors import NothingLeft
from twistab.groups import make_group
from twistab.monoid import (
    AdmissibleMonoid, count_abelian_torsors, minimal_lift,
    orbifold_abelianization, torsion_pic, x_m)
from twistab.stability import is_nonempty_type, is_prestable, is_stable
from twistab.stabilization import (
    chamber_witness, chambers, index_sets, records_isomorphic, reduce_weights,
    same_chamber, sign_pattern, stabilize)

__all__ = ['GRID_DENOMINATOR', 'ORACLES', 'run_oracle']

GRID_DENOMINATOR = 24
TORSOR_GROUPS = ('C2', 'C3', 'C4', 'C2xC2', 'S3', 'D4', 'Q8', 'A4')


class _Tally(object):
    def __init__(self, name):
        self.name = name
        self.cases = 0
        self.failures = 0
        self.example = None

    def check(self, ok, example):
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.example is None:
                self.example = example

    def result(self, log=None):
        result = {'oracle': self.name, 'cases': self.cases,
                  'failures': self.failures, 'ok': self.failures == 0}
        if self.example is not None:
            result['example'] = self.example
        if log:
            log.msg('Oracle finished', oracle=self.name, cases=self.cases,
                    failures=self.failures)
        return result


def _multisets(values, max_k):
    for k in range(max_k + 1):
        for orders in itertools.combinations_with_replacement(values, k):
            yield orders


def _tuples(values, max_k):
    for k in range(max_k + 1):
        for orders in itertools.product(values, repeat=k):
            yield orders


def pic_abelianization(rng=None, log=None, max_entry=6, max_k=4, max_m=6):
    """
    Torsion Picard groups agree with abelianized orbifold fundamental groups.
    """
    tally = _Tally('pic-abelianization')
    for orders in _tuples(range(1, max_entry + 1), max_k):
        for m in range(1, max_m + 1):
            pic = torsion_pic(orders, m)
            ab = orbifold_abelianization(orders, m)
            tally.check(pic == ab, {'orders': list(orders), 'm': m,
                                    'pic': list(pic.invariant_factors),
                                    'abelianization':
                                        list(ab.invariant_factors)})
    return tally.result(log)


def _brute_torsors(group, orders, m):
    e = group.identity
    candidates = [[g for g in range(group.order) if group.power(g, r) == e]
                  for r in orders]
    seen = set()
    count = 0
    for loops in itertools.product(*candidates):
        product = e
        for g in loops:
            product = group.mul(product, g)
        h = group.inverse(product)
        if group.power(h, m) != e:
            continue
        full = loops + (h,)
        if full in seen:
            continue
        if not all(group.commute(a, b) for a in full for b in full):
            continue
        count += 1
        seen.update(tuple(group.conjugate(g, x) for g in full)
                    for x in range(group.order))
    return count


def torsor_count(rng=None, log=None, groups=TORSOR_GROUPS, max_entry=4,
                 max_k=3, max_m=4):
    """
    Torsor counts from ``hom_classes`` agree with a direct count of loop
    tuples with abelian image up to conjugation.
    """
    tally = _Tally('torsor-count')
    for spec in groups:
        group = make_group(spec)
        for orders in _multisets(range(1, max_entry + 1), max_k):
            for m in range(1, max_m + 1):
                expected = _brute_torsors(group, orders, m)
                got = count_abelian_torsors(orders, m, group)
                tally.check(got == expected,
                            {'group': spec, 'orders': list(orders), 'm': m,
                             'count': got, 'brute_force': expected})
    return tally.result(log)


class _HassettState(object):
    """
    A curve with trivial monodromy as plain dicts: vertex id to
    ``(genus, degree, clusters)`` and a tuple of ``(edge id, u, v)``.
    """

    def __init__(self, vertices, edges):
        self.vertices = vertices
        self.edges = edges

    @classmethod
    def from_graph(cls, graph):
        vertices = dict((v.id, (v.genus, v.degree,
                                frozenset(c.markings for c in v.clusters)))
                        for v in graph.vertices)
        edges = tuple((e.id, e.ends[0][0], e.ends[1][0]) for e in graph.edges)
        return cls(vertices, edges)

    def key(self):
        return (frozenset(self.vertices.items()), frozenset(self.edges))

    def moves(self, weights):
        result = []
        for vid, (genus, degree, clusters) in sorted(self.vertices.items()):
            if genus or degree:
                continue
            incident = [e for e in self.edges if vid in (e[1], e[2])]
            halves = sum((e[1] == vid) + (e[2] == vid) for e in incident)
            weight = sum((weights[i - 1] for c in clusters for i in c),
                         Fraction(0))
            if halves + weight > 2:
                continue
            if halves == 1:
                result.append(vid)
            elif halves == 2 and len(incident) == 2:
                result.append(vid)
        return result

    def contract(self, vid):
        genus, degree, clusters = self.vertices[vid]
        incident = [e for e in self.edges if vid in (e[1], e[2])]
        vertices = dict(self.vertices)
        del vertices[vid]
        if len(incident) == 1:
            eid, u, v = incident[0]
            other = v if u == vid else u
            g, d, theirs = vertices[other]
            merged = frozenset(i for c in clusters for i in c)
            if merged:
                theirs = theirs | frozenset([merged])
            vertices[other] = (g, d, theirs)
            edges = tuple(e for e in self.edges if e[0] != eid)
        else:
            (id1, a1, b1), (id2, a2, b2) = incident
            x = b1 if a1 == vid else a1
            y = b2 if a2 == vid else a2
            edges = tuple(e for e in self.edges if e[0] not in (id1, id2))
            edges += ((id1, x, y),)
        return _HassettState(vertices, edges)

    def to_networkx(self):
        graph = nx.MultiGraph()
        for vid, (genus, degree, clusters) in self.vertices.items():
            graph.add_node(vid, label=(genus, degree, clusters))
        for eid, u, v in self.edges:
            graph.add_edge(u, v, key=eid)
        return graph


def _hassett_terminals(state, weights, exhaustive):
    if not exhaustive:
        while True:
            moves = state.moves(weights)
            if not moves:
                return [state]
            state = state.contract(moves[0])
    terminals, seen, stack = [], set(), [state]
    while stack:
        current = stack.pop()
        if current.key() in seen:
            continue
        seen.add(current.key())
        moves = current.moves(weights)
        if not moves:
            terminals.append(current)
        stack.extend(current.contract(vid) for vid in moves)
    return terminals


def _same_hassett(a, b):
    return nx.is_isomorphic(a, b,
                            node_match=lambda x, y: x['label'] == y['label'])


def _record_as_hassett(record):
    return _HassettState.from_graph(record.graph).to_networkx()


def hassett(rng=None, log=None, cases=1000, confluence_vertices=5):
    """
    With trivial monodromy, stabilization agrees with the classical weighted
    contraction, and that contraction is confluent.
    """
    rng = rng or fuzz.make_rng()
    group = make_group('C1')
    tally = _Tally('hassett')
    for _ in range(cases):
        graph, weights, mono = fuzz.random_instance(rng, group)
        start = _HassettState.from_graph(graph)
        exhaustive = len(graph.vertices) <= confluence_vertices
        terminals = _hassett_terminals(start, list(weights), exhaustive)
        nonempty = is_nonempty_type(graph.declared_genus, weights,
                                    sum(v.degree for v in graph.vertices))
        example = {'vertices': len(graph.vertices), 'weights':
                   [str(a) for a in weights]}
        try:
            record = stabilize(graph, weights, mono)
        except NothingLeft:
            tally.check(not nonempty, example)
            continue
        ours = _record_as_hassett(record)
        theirs = [t.to_networkx() for t in terminals]
        tally.check(nonempty and all(_same_hassett(ours, t) for t in theirs),
                    example)
    return tally.result(log)


def _classically_stable(graph):
    for v in graph.vertices:
        halves = sum((e.ends[0][0] == v.id) + (e.ends[1][0] == v.id)
                     for e in graph.edges)
        special = halves + sum(len(c.markings) for c in v.clusters)
        if v.degree == 0 and v.genus == 0 and special < 3:
            return False
        if v.degree == 0 and v.genus == 1 and special < 1:
            return False
    return True


def dm_stability(rng=None, log=None, cases=1000):
    """
    With unit weights, distinct markings and trivial monodromy, stability is
    Deligne-Mumford stability of the marked dual graph.
    """
    rng = rng or fuzz.make_rng()
    group = make_group('C1')
    tally = _Tally('dm-stability')
    for _ in range(cases):
        n = rng.randint(1, 6)
        weights = WeightVector([1] * n)
        graph, weights, mono = fuzz.random_instance(
            rng, group, weights=weights, distinct=True)
        ours = is_stable(graph, weights, mono).stable
        tally.check(ours == _classically_stable(graph),
                    {'vertices': len(graph.vertices), 'stable': ours})
    return tally.result(log)


def stabilize_contract(rng=None, log=None, cases=1000,
                       groups=('S3', 'D4')):
    """
    Stabilization returns stable maps, is idempotent and does not depend on
    the order in which components are contracted.
    """
    rng = rng or fuzz.make_rng()
    built = [make_group(spec) for spec in groups]
    tally = _Tally('stabilize-contract')
    for index in range(cases):
        group = built[index % len(built)]
        graph, weights, mono, record = fuzz.random_stabilizable(
            rng, group, max_markings=6)
        again = stabilize(record.graph, weights, record.mono)
        shuffled = stabilize(graph, weights, mono,
                             rng=random.Random(rng.random()))
        ok = (is_stable(record.graph, weights, record.mono).stable and
              not again.trace and records_isomorphic(record, again) and
              records_isomorphic(record, shuffled))
        tally.check(ok, {'group': group.name, 'vertices': len(graph.vertices),
                         'weights': [str(a) for a in weights]})
    return tally.result(log)


def _stabilize_or_none(graph, weights, mono):
    try:
        return stabilize(graph, weights, mono)
    except NothingLeft:
        return None


def _same_outcome(first, second):
    if first is None or second is None:
        return first is None and second is None
    return records_isomorphic(first, second)


def chamber_invariance(rng=None, log=None, cases=200, group='S3'):
    """
    Weights in one chamber give isomorphic stabilizations, and weights on
    either side of a wall can give different ones.

    Pairs on opposite sides of the total weight ``2 - 2g`` are skipped: that
    wall decides whether a stable model exists at all and is not a chamber
    wall.
    """
    rng = rng or fuzz.make_rng()
    group = make_group(group)
    tally = _Tally('chamber-invariance')
    differing = 0
    while tally.cases < cases:
        graph, a, mono = fuzz.random_instance(rng, group, max_markings=5)
        n = len(a)
        family = sign_pattern(a)
        excluded = [J for J in index_sets(n) if J not in family]
        witness = chamber_witness(n, family, excluded)
        t = Fraction(rng.randint(0, 12), 12)
        b = WeightVector(t * x + (1 - t) * w for x, w in zip(a, witness))
        degree = total_degree(graph)
        if (is_nonempty_type(graph.declared_genus, a, degree) !=
                is_nonempty_type(graph.declared_genus, b, degree)):
            continue
        first = _stabilize_or_none(graph, a, mono)
        ok = same_chamber(a, b) and _same_outcome(
            first, _stabilize_or_none(graph, b, mono))
        tally.check(ok, {'a': [str(x) for x in a], 'b': [str(x) for x in b]})

        c = fuzz.random_weights(rng, n)
        if same_chamber(a, c) or not is_prestable(graph, c)[0]:
            continue
        second = _stabilize_or_none(graph, c, mono)
        if (first is not None and second is not None and
                not records_isomorphic(first, second)):
            differing += 1
    tally.check(differing > 0, {'walls': 'no pair across a wall differed'})
    return tally.result(log)


def composition(rng=None, log=None, cases=200, group='S3'):
    """
    Reducing ``c -> a`` directly equals reducing ``c -> b -> a``.
    """
    rng = rng or fuzz.make_rng()
    group = make_group(group)
    tally = _Tally('composition')
    for _ in range(cases):
        graph, c, mono, record = fuzz.random_stabilizable(rng, group)
        b = fuzz.random_dominated(rng, c)
        a = fuzz.random_dominated(rng, b)
        try:
            direct = reduce_weights(record, a)
        except NothingLeft:
            direct = None
        try:
            via = reduce_weights(reduce_weights(record, b), a)
        except NothingLeft:
            via = None
        tally.check(_same_outcome(direct, via),
                    {'a': [str(x) for x in a], 'b': [str(x) for x in b],
                     'c': [str(x) for x in c]})
    return tally.result(log)


def classical_lift(rng=None, log=None, max_r=12, max_m=12):
    """
    Minimal lifts over a single coordinate never have an integer part.
    """
    tally = _Tally('classical-lift')
    for r in range(1, max_r + 1):
        group = AdmissibleMonoid.split([r]).x_group()
        for m in range(1, max_m + 1):
            for lam in x_m(group, m).elements():
                lift = minimal_lift(group, m, lam)
                tally.check(lift.s_lambda == 0,
                            {'r': r, 'm': m,
                             'lift': [str(x) for x in lift.n_lambda]})
    return tally.result(log)


def chambers_grid(rng=None, log=None, max_n=4,
                  denominator=GRID_DENOMINATOR):
    """
    Every point of the rational grid lies in exactly one chamber.
    """
    tally = _Tally('chambers-grid')
    for n in range(1, max_n + 1):
        found = chambers(n)
        families = dict((c.family, 0) for c in found)
        subsets = index_sets(n)
        seen = set()
        for point in itertools.product(range(1, denominator + 1), repeat=n):
            pattern = tuple(sorted(I for I in subsets
                                   if sum(point[i - 1] for i in I) <=
                                   denominator))
            seen.add(pattern)
            tally.check(pattern in families,
                        {'n': n, 'point': ['{0}/{1}'.format(k, denominator)
                                           for k in point]})
        for c in found:
            tally.check(sign_pattern(c.witness) == c.family,
                        {'n': n, 'family': [list(I) for I in c.family]})
        if n <= 3:
            tally.check(len(seen) == len(found),
                        {'n': n, 'chambers': len(found), 'grid': len(seen)})
        if n == 2:
            tally.check(len(found) == 2, {'n': 2, 'chambers': len(found)})
    return tally.result(log)


def _closure_mod_one(generators, n):
    zero = tuple([Fraction(0)] * n)
    found = set([zero])
    frontier = [zero]
    while frontier:
        new = []
        for v in frontier:
            for g in generators:
                w = tuple((a + b) % 1 for a, b in zip(v, g))
                if w not in found:
                    found.add(w)
                    new.append(w)
        frontier = new
    return found


def xm_count(rng=None, log=None, cases=500, n=3, max_denominator=6,
             max_m=6):
    """
    ``|X|`` and ``|X_m|`` from Smith presentations agree with enumerating
    the classes directly.
    """
    rng = rng or fuzz.make_rng()
    tally = _Tally('xm-count')
    for _ in range(cases):
        gens = []
        for _ in range(rng.randint(1, 3)):
            gens.append(tuple(Fraction(rng.randint(0, d - 1), d) for d in
                              [rng.randint(1, max_denominator)
                               for _ in range(n)]))
        m = rng.randint(1, max_m)
        group = AdmissibleMonoid(n, gens).x_group()
        classes = _closure_mod_one(gens, n)
        expected = sum(1 for v in classes if (m * sum(v)) % 1 == 0)
        tally.check(group.order == len(classes) and
                    x_m(group, m).order == expected,
                    {'generators': [[str(x) for x in g] for g in gens],
                     'm': m, 'order': group.order})
    return tally.result(log)


def _abelian_at(graph, mono, vid):
    group = mono.group
    gens = set()
    for d in mono.points(vid):
        gens.update(g.index for g in d.image_subgroup)
    closed = group.closure(gens)
    return all(group.commute(a, b) for a in closed for b in closed)


def _branch_stable(graph, weights, mono):
    for v in graph.vertices:
        if v.genus or v.degree:
            continue
        halves = len(graph.half_edges(v.id))
        weight = sum((weights.weight(i) for i in v.markings()), Fraction(0))
        if halves == 2 and not v.clusters:
            return False
        if halves == 1 and _abelian_at(graph, mono, v.id) and weight <= 1:
            return False
    return True


def branch_characterization(rng=None, log=None, cases=500, group='S3'):
    """
    On curves with at least two components, stability is decided by the
    branches alone: interior branches carry a marking and extremal branches
    have no abelian contraction of small weight.
    """
    rng = rng or fuzz.make_rng()
    group = make_group(group)
    tally = _Tally('branch-characterization')
    while tally.cases < cases:
        graph, weights, mono = fuzz.random_instance(rng, group)
        if len(graph.vertices) < 2:
            continue
        ours = is_stable(graph, weights, mono).stable
        tally.check(ours == _branch_stable(graph, weights, mono),
                    {'vertices': len(graph.vertices), 'stable': ours})
        record = _stabilize_or_none(graph, weights, mono)
        if record is not None and len(record.graph.vertices) >= 2:
            tally.check(_branch_stable(record.graph, weights, record.mono),
                        {'stabilized': True,
                         'vertices': len(record.graph.vertices)})
    return tally.result(log)


def run_all(rng=None, log=None):
    """
    Every randomized oracle, seeded from ``TWISTAB_SEED``.
    """
    rng = rng or fuzz.make_rng()
    results = [ORACLES[name](rng=rng, log=log) for name in _RANDOMIZED]
    return {'oracle': 'fuzz',
            'cases': sum(r['cases'] for r in results),
            'failures': sum(r['failures'] for r in results),
            'ok': all(r['ok'] for r in results), 'results': results}


ORACLES = {
    'pic-abelianization': pic_abelianization,
    'torsor-count': torsor_count,
    'hassett': hassett,
    'dm-stability': dm_stability,
    'stabilize-contract': stabilize_contract,
    'chamber-invariance': chamber_invariance,
    'composition': composition,
    'classical-lift': classical_lift,
    'chambers-grid': chambers_grid,
    'xm-count': xm_count,
    'branch-characterization': branch_characterization,
    'fuzz': run_all,
}

_RANDOMIZED = ('hassett', 'dm-stability', 'stabilize-contract',
               'chamber-invariance', 'composition', 'xm-count',
               'branch-characterization')


def run_oracle(name, seed=None, log=None, **kwargs):
    """
    Run the oracle called ``name``.  The result records the seed used.

    :raises KeyError: for an unknown name.
    """
    oracle = ORACLES[name]
    if seed is None:
        seed = fuzz.seed_from_env()
    result = oracle(rng=fuzz.make_rng(seed), log=log, **kwargs)
    result['seed'] = seed
    return result
