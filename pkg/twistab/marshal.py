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

JSON documents to domain values and back.

Every ``unmarshal_*`` function takes a decoded JSON value and a ``location``
(a JSON path such as ``$.vertices[0].clusters[1]``) used in the
:class:`twistab.errors.MarshalError` it raises.  :func:`marshal` turns domain
values into plain JSON values, and :func:`dumps` writes them with sorted keys
so equal inputs always give byte-identical output.

"""

import json
import re
from fractions import Fraction

from twistab.curve import (
    ClusterRef, CurveGraph, Edge, HalfEdge, MarkingCluster,
    MonodromyAssignment, SpecialPointDatum, Vertex, Violation, WeightVector,
    trivial_monodromy)
from twistab.errors import MarshalError, TwistabError
from twistab.groups import (
    FiniteAbelianGroup, GroupElement, generated_subgroup, make_group)
from twistab.monoid import AdmissibleMonoid, TorsionClass, XmSubgroup
from twistab.stability import StabilityReport
from twistab.stabilization import Chamber, Contraction, StableMapRecord

__all__ = ['marshal', 'dumps', 'loads', 'unmarshallers',
           'unmarshal_fraction', 'unmarshal_weights', 'unmarshal_group',
           'unmarshal_element', 'unmarshal_curve', 'unmarshal_monodromy',
           'unmarshal_monoid', 'unmarshal_orders', 'marshal_curve',
           'marshal_monodromy', 'marshal_group']

_fraction_re = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")
_point_re = re.compile(r"^(edge):(.+):(\d+)$|^(cluster):(\d+)$")


def _fail(message, location):
    raise MarshalError(message, location)


def _expect(value, kind, location):
    if kind is int:
        ok = isinstance(value, int) and not isinstance(value, bool)
    else:
        ok = isinstance(value, kind)
    if not ok:
        _fail('expected {0}, got {1!r}'.format(
            getattr(kind, '__name__', 'value'), value), location)
    return value


def loads(text, location='$'):
    try:
        return json.loads(text)
    except ValueError as e:
        _fail('not valid JSON: {0}'.format(e), location)


def dumps(value):
    return json.dumps(value, sort_keys=True, ensure_ascii=False)


def unmarshal_fraction(value, location='$'):
    """
    ``"3/4"``, ``"2"`` or an integer.  Decimal notation is refused.
    """
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if not isinstance(value, str):
        _fail('expected a fraction string, got {0!r}'.format(value), location)
    match = _fraction_re.match(value)
    if not match:
        _fail('{0!r} is not a fraction'.format(value), location)
    numerator, denominator = match.group(1), match.group(2) or '1'
    if int(denominator) == 0:
        _fail('{0!r} has a zero denominator'.format(value), location)
    return Fraction(int(numerator), int(denominator))


def unmarshal_weights(value, location='$'):
    """
    A comma separated string such as ``"1/2,1/2,1"`` or a JSON array.
    """
    if isinstance(value, str):
        parts = [p for p in value.split(',') if p.strip()]
    else:
        parts = _expect(value, list, location)
    return WeightVector(unmarshal_fraction(p, '{0}[{1}]'.format(location, i))
                        for i, p in enumerate(parts))


def unmarshal_group(value, location='$'):
    """
    A group specification object, or a shorthand string (which may also be a
    JSON encoded specification object).
    """
    if isinstance(value, str) and value.lstrip().startswith('{'):
        value = loads(value, location)
    try:
        return make_group(value)
    except TwistabError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        _fail('malformed group specification: {0}'.format(e), location)


def unmarshal_element(group, value, location='$'):
    try:
        return group.lookup(value)
    except TwistabError as e:
        _fail(e.message, location)


def _markings(value, location):
    markings = _expect(value, list, location)
    for i, m in enumerate(markings):
        _expect(m, int, '{0}[{1}]'.format(location, i))
    return markings


def _cluster(value, location):
    _expect(value, dict, location)
    markings = _markings(value.get('markings'), location + '.markings')
    root_order = _expect(value.get('root_order', 1), int,
                         location + '.root_order')
    local_group = None
    if 'local_group' in value:
        factors = _expect(value['local_group'], list,
                          location + '.local_group')
        try:
            local_group = FiniteAbelianGroup.from_cyclic_orders(factors)
        except (TwistabError, TypeError, ValueError) as e:
            _fail('bad local group: {0}'.format(e), location + '.local_group')
    return MarkingCluster(markings, root_order, local_group)


def _vertex(value, location):
    _expect(value, dict, location)
    vid = _expect(value.get('id'), str, location + '.id')
    genus = _expect(value.get('genus', 0), int, location + '.genus')
    degree = _expect(value.get('degree', 0), int, location + '.degree')
    clusters = _expect(value.get('clusters', []), list, location + '.clusters')
    return Vertex(vid, genus, degree,
                  [_cluster(c, '{0}.clusters[{1}]'.format(location, i))
                   for i, c in enumerate(clusters)])


def _edge(value, location):
    _expect(value, dict, location)
    eid = _expect(value.get('id'), str, location + '.id')
    ends = _expect(value.get('ends'), list, location + '.ends')
    if len(ends) != 2:
        _fail('an edge has exactly two ends', location + '.ends')
    parsed = []
    for i, end in enumerate(ends):
        where = '{0}.ends[{1}]'.format(location, i)
        if not isinstance(end, list) or len(end) != 2:
            _fail('an end is a [vertex, slot] pair', where)
        parsed.append((_expect(end[0], str, where + '[0]'),
                       _expect(end[1], int, where + '[1]')))
    order = _expect(value.get('order', 1), int, location + '.order')
    return Edge(eid, parsed, order)


def unmarshal_curve(value, location='$'):
    """
    ``{"vertices": [...], "edges": [...], "n": n, "genus": g}``.

    ``n`` defaults to the largest marking and ``genus`` to the arithmetic
    genus of the graph.
    """
    _expect(value, dict, location)
    vertices = [_vertex(v, '{0}.vertices[{1}]'.format(location, i))
                for i, v in enumerate(_expect(value.get('vertices', []), list,
                                              location + '.vertices'))]
    edges = [_edge(e, '{0}.edges[{1}]'.format(location, i))
             for i, e in enumerate(_expect(value.get('edges', []), list,
                                           location + '.edges'))]
    ids = set(v.id for v in vertices)
    for i, e in enumerate(edges):
        for j, (vid, _) in enumerate(e.ends):
            if vid not in ids:
                _fail('unknown vertex {0!r}'.format(vid),
                      '{0}.edges[{1}].ends[{2}]'.format(location, i, j))
    markings = [m for v in vertices for m in v.markings()]
    n = _expect(value.get('n', max(markings or [0])), int, location + '.n')
    graph = CurveGraph(vertices, edges, n, 0)
    if 'genus' in value:
        genus = _expect(value['genus'], int, location + '.genus')
    elif vertices:
        genus = sum(v.genus for v in vertices) + graph.betti_number()
    else:
        genus = 0
    return CurveGraph(vertices, edges, n, genus)


def _point(graph, vid, text, location):
    match = _point_re.match(text) if isinstance(text, str) else None
    if not match:
        _fail('a point is "edge:<id>:<slot>" or "cluster:<index>"', location)
    if match.group(1):
        eid, slot = match.group(2), int(match.group(3))
        try:
            e = graph.edge(eid)
        except KeyError:
            _fail('unknown edge {0!r}'.format(eid), location)
        for end in (0, 1):
            if e.ends[end] == (vid, slot):
                return HalfEdge(eid, end)
        _fail('edge {0!r} has no end at ({1}, {2})'.format(eid, vid, slot),
              location)
    index = int(match.group(5))
    clusters = graph.vertex(vid).clusters
    if index >= len(clusters):
        _fail('vertex {0!r} has {1} clusters'.format(vid, len(clusters)),
              location)
    return ClusterRef(clusters[index].markings)


def unmarshal_monodromy(value, graph, group, location='$'):
    """
    ``{"<vertex id>": [{"point": ..., "loop": ..., "image": [...]}, ...]}``,
    loops listed in their product order.  ``image`` defaults to the subgroup
    generated by ``loop``.  A missing document means trivial monodromy.
    """
    if value is None:
        return trivial_monodromy(graph, group)
    _expect(value, dict, location)
    data = {}
    for vid in sorted(value):
        where = '{0}.{1}'.format(location, vid)
        if not graph.has_vertex(vid):
            _fail('unknown vertex {0!r}'.format(vid), where)
        points = []
        for i, entry in enumerate(_expect(value[vid], list, where)):
            here = '{0}[{1}]'.format(where, i)
            _expect(entry, dict, here)
            point = _point(graph, vid, entry.get('point'), here + '.point')
            loop = unmarshal_element(group, entry.get('loop'), here + '.loop')
            if 'image' in entry:
                image = frozenset(
                    unmarshal_element(group, g,
                                      '{0}.image[{1}]'.format(here, j))
                    for j, g in enumerate(_expect(entry['image'], list,
                                                  here + '.image')))
            else:
                image = generated_subgroup(group, [loop])
            points.append(SpecialPointDatum(point, loop, image))
        data[vid] = points
    return MonodromyAssignment(group, data)


def unmarshal_monoid(value, location='$'):
    """
    A list of generator vectors, or ``{"n": n, "generators": [...]}`` when
    there may be no generators at all.
    """
    if isinstance(value, dict):
        gens = _expect(value.get('generators', []), list,
                       location + '.generators')
        gens_location = location + '.generators'
        n = value.get('n')
    else:
        gens = _expect(value, list, location)
        gens_location = location
        n = None
    parsed = []
    for i, g in enumerate(gens):
        where = '{0}[{1}]'.format(gens_location, i)
        parsed.append([unmarshal_fraction(x, '{0}[{1}]'.format(where, j))
                       for j, x in enumerate(_expect(g, list, where))])
    if n is None:
        if not parsed:
            _fail('give "n" for a monoid without generators', location)
        n = len(parsed[0])
    _expect(n, int, location + '.n')
    return AdmissibleMonoid(n, parsed)


def unmarshal_orders(value, location='$'):
    """
    Root orders as ``"2,3,4"`` or a JSON array of integers.
    """
    if isinstance(value, str):
        parts = [p.strip() for p in value.split(',') if p.strip()]
        if not all(p.isdigit() for p in parts):
            _fail('root orders are positive integers', location)
        return [int(p) for p in parts]
    orders = _expect(value, list, location)
    for i, r in enumerate(orders):
        _expect(r, int, '{0}[{1}]'.format(location, i))
    return orders


unmarshallers = {
    'fraction': unmarshal_fraction,
    'weights': unmarshal_weights,
    'group': unmarshal_group,
    'curve': unmarshal_curve,
    'monoid': unmarshal_monoid,
    'orders': unmarshal_orders,
}


def marshal_fraction(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return '{0}/{1}'.format(q.numerator, q.denominator)


def marshal_element(g):
    """
    Cycle notation in permutation groups; the index when the group has no
    element names, otherwise the name.
    """
    label = g.group.label(g.index)
    if g.group.permutations is None and label == str(g.index):
        return g.index
    return label


def marshal_group(group):
    """
    The group's name when :func:`unmarshal_group` rebuilds the same table
    and labels from it, otherwise a ``table`` specification.
    """
    try:
        named = make_group(group.name)
    except (TwistabError, KeyError, TypeError, ValueError):
        named = None
    if (named is not None and named.table() == group.table() and
            named.labels() == group.labels()):
        return group.name
    return {'kind': 'table', 'order': group.order, 'mul': group.table(),
            'labels': group.labels(), 'name': group.name}


def marshal_curve(graph):
    vertices = []
    for v in graph.vertices:
        clusters = []
        for c in v.clusters:
            cluster = {'markings': sorted(c.markings),
                       'root_order': c.root_order}
            if c.local_group.invariant_factors != \
                    FiniteAbelianGroup.from_cyclic_orders(
                        [c.root_order]).invariant_factors:
                cluster['local_group'] = list(c.local_group.invariant_factors)
            clusters.append(cluster)
        vertices.append({'id': v.id, 'genus': v.genus, 'degree': v.degree,
                         'clusters': clusters})
    edges = [{'id': e.id, 'ends': [list(end) for end in e.ends],
              'order': e.order} for e in graph.edges]
    return {'n': graph.n, 'genus': graph.declared_genus,
            'vertices': vertices, 'edges': edges}


def _marshal_point(graph, vid, point):
    if isinstance(point, HalfEdge):
        e = graph.edge(point.edge)
        return 'edge:{0}:{1}'.format(e.id, e.ends[point.end][1])
    for i, c in enumerate(graph.vertex(vid).clusters):
        if c.markings == point.markings:
            return 'cluster:{0}'.format(i)
    raise KeyError((vid, point))


def marshal_monodromy(graph, mono):
    result = {}
    for vid in sorted(mono.data):
        entries = []
        for d in mono.points(vid):
            entry = {'point': _marshal_point(graph, vid, d.point),
                     'loop': marshal_element(d.loop)}
            if (not isinstance(d.point, HalfEdge) and
                    d.image_subgroup !=
                    generated_subgroup(mono.group, [d.loop])):
                entry['image'] = [marshal_element(g)
                                  for g in sorted(d.image_subgroup)]
            entries.append(entry)
        result[vid] = entries
    return result


def _marshal_record(record):
    return {'curve': marshal_curve(record.graph),
            'weights': marshal(list(record.weights)),
            'group': marshal_group(record.mono.group),
            'monodromy': marshal_monodromy(record.graph, record.mono),
            'trace': [marshal(c) for c in record.trace]}


def _marshal_report(report):
    return {'stable': report.stable, 'prestable': report.prestable,
            'representable': report.representable,
            'finite_autos': report.finite_autos,
            'weighted_ok': report.weighted_ok,
            'offending': [{'vertex': vid, 'reason': reason}
                          for vid, reason in report.offending]}


def marshal(term):
    """
    A plain JSON value for ``term``.
    """
    if isinstance(term, bool) or term is None:
        return term
    if isinstance(term, Fraction):
        return marshal_fraction(term)
    if isinstance(term, int):
        return term
    if isinstance(term, str):
        return term
    if isinstance(term, GroupElement):
        return marshal_element(term)
    if isinstance(term, WeightVector):
        return [marshal_fraction(a) for a in term]
    if isinstance(term, FiniteAbelianGroup):
        return {'invariant_factors': list(term.invariant_factors),
                'order': term.order}
    if isinstance(term, XmSubgroup):
        return {'invariant_factors': list(term.invariant_factors)}
    if isinstance(term, TorsionClass):
        return [marshal_fraction(x) for x in term.vector]
    if isinstance(term, CurveGraph):
        return marshal_curve(term)
    if isinstance(term, StableMapRecord):
        return _marshal_record(term)
    if isinstance(term, StabilityReport):
        return _marshal_report(term)
    if isinstance(term, Chamber):
        return {'family': [list(I) for I in term.family],
                'witness': marshal(term.witness)}
    if isinstance(term, Contraction):
        return {'kind': term.kind, 'vertex': term.vertex, 'into': term.into,
                'markings': list(term.markings)}
    if isinstance(term, Violation):
        return {'invariant': term.invariant, 'location': term.location,
                'message': term.message}
    if isinstance(term, TwistabError):
        result = {'code': term.code, 'message': term.message,
                  'location': marshal(term.location)}
        if getattr(term, 'violations', None):
            result['violations'] = [marshal(v) for v in term.violations]
        return result
    if isinstance(term, dict):
        return dict((str(k), marshal(v)) for k, v in term.items())
    if isinstance(term, (set, frozenset)):
        return [marshal(x) for x in sorted(term)]
    if isinstance(term, (list, tuple)):
        return [marshal(x) for x in term]
    raise TypeError('cannot marshal {0!r}'.format(term))
