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

Prestability and stability of weighted twisted maps to ``BG``.

"""

from fractions import Fraction

from constantly import NamedConstant, Names

from twistab.curve import (
    marking_weight, representability_violations, special_points)
from twistab.errors import LengthMismatch
from twistab.groups import is_abelian

__all__ = ['BranchKind', 'StabilityReport', 'is_prestable',
           'has_abelian_contraction', 'is_stable', 'classify_branch',
           'is_nonempty_type']


class BranchKind(Names):
    INTERIOR_BRANCH = NamedConstant()
    EXTREMAL_BRANCH = NamedConstant()
    NOT_A_BRANCH = NamedConstant()


class StabilityReport(object):
    """
    The outcome of :func:`is_stable`.

    :ivar offending: list of ``(vertex id, reason)`` pairs.
    """

    def __init__(self, prestable, representable, finite_autos, weighted_ok,
                 offending):
        self.prestable = prestable
        self.representable = representable
        self.finite_autos = finite_autos
        self.weighted_ok = weighted_ok
        self.offending = list(offending)

    @property
    def stable(self):
        return (self.prestable and self.representable and
                self.finite_autos and self.weighted_ok)

    def __repr__(self):
        return ('<StabilityReport stable={0} prestable={1} representable={2} '
                'finite_autos={3} weighted_ok={4}>').format(
                    self.stable, self.prestable, self.representable,
                    self.finite_autos, self.weighted_ok)


def is_prestable(graph, weights):
    """
    Coincident markings must have total weight at most 1.

    :returns: ``(ok, offending)`` where ``offending`` lists
        ``(vertex id, reason)`` for every overweight cluster.
    :raises LengthMismatch: if ``weights`` does not have one entry per
        marking.
    """
    if len(weights) != graph.n:
        raise LengthMismatch(graph.n, len(weights))
    offending = []
    for v in graph.vertices:
        for c in v.clusters:
            total = sum((weights.weight(i) for i in c.markings), Fraction(0))
            if total > 1:
                offending.append((v.id, 'cluster {0} has weight {1} > 1'
                                        .format(sorted(c.markings), total)))
    return not offending, offending


def has_abelian_contraction(graph, mono, vid):
    """
    A contracted component maps to a point, and its monodromy must generate
    an abelian subgroup.
    """
    if graph.vertex(vid).degree != 0:
        return False
    return is_abelian(mono.generated(vid))


def is_stable(graph, weights, mono):
    """
    Evaluate every stability condition and report which vertices fail.

    :returns: :class:`StabilityReport`
    """
    prestable, offending = is_prestable(graph, weights)
    if not prestable:
        return StabilityReport(False, False, False, False, offending)

    representable = True
    for violation in representability_violations(graph, mono):
        representable = False
        offending.append((violation.location, violation.message))

    finite_autos = True
    weighted_ok = True
    for v in graph.vertices:
        count = len(special_points(graph, v))
        if v.degree == 0 and v.genus == 0 and count < 3:
            finite_autos = False
            offending.append((v.id, 'rational component with {0} special '
                                    'points'.format(count)))
        elif v.degree == 0 and v.genus == 1 and count < 1:
            finite_autos = False
            offending.append((v.id, 'elliptic component without special '
                                    'points'))
        if v.genus == 0 and has_abelian_contraction(graph, mono, v.id):
            nodes = len(graph.half_edges(v.id))
            total = nodes + marking_weight(v, weights)
            if not total > 2:
                weighted_ok = False
                offending.append((v.id, 'abelian contraction with {0} nodes '
                                        'and weight {1}'.format(
                                            nodes, total - nodes)))
    return StabilityReport(True, representable, finite_autos, weighted_ok,
                           offending)


def classify_branch(graph, vid):
    """
    :returns: a :class:`BranchKind` constant.
    """
    v = graph.vertex(vid)
    if v.genus or v.degree:
        return BranchKind.NOT_A_BRANCH
    nodes = len(graph.half_edges(vid))
    if nodes == 1:
        return BranchKind.EXTREMAL_BRANCH
    if nodes == 2:
        return BranchKind.INTERIOR_BRANCH
    return BranchKind.NOT_A_BRANCH


def is_nonempty_type(declared_genus, weights, total_degree):
    """
    With abelian monodromy, stable maps of this type exist only for positive
    degree or when ``2g - 2 + sum(a) > 0``.

    Non-abelian monodromy can keep a light rational component stable, so
    this is no test of emptiness in general; :func:`stabilize` decides from
    the stability of its result instead.
    """
    if total_degree != 0:
        return True
    return 2 * declared_genus - 2 + sum(weights, Fraction(0)) > 0
