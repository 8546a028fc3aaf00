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

Finite groups given by multiplication tables.

Elements are the indices ``0 .. order - 1`` of the table.  Products are read
left to right: ``mul(a, b)`` is "apply ``a``, then ``b``", which is also the
convention of :class:`sympy.combinatorics.Permutation` multiplication, so the
permutation groups built here agree with sympy.

"""

import itertools
import re
from collections import namedtuple

from sympy import factorint
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import (
    AlternatingGroup, DihedralGroup, SymmetricGroup)

from twistab.errors import (
    ForeignElement, GroupTooLarge, NoIdentity, NoInverse, NonAssociative,
    UnknownGroup)

__all__ = ['FiniteGroup', 'GroupElement', 'FiniteAbelianGroup', 'HomClasses',
           'make_group', 'generated_subgroup', 'is_abelian',
           'conjugacy_classes', 'commutator_subgroup', 'abelian_type',
           'hom_classes', 'parse_cycles', 'format_cycles']

MAX_ORDER = 512
MAX_SYMMETRIC_DEGREE = 6

_cycle_re = re.compile(r"\(([^()]*)\)")
_shorthand_re = re.compile(r"^(S|C|Z|D|A|Q)(\d+)$", re.I)


class GroupElement(object):
    """
    An element of a :class:`FiniteGroup`, identified by its table index.
    """
    __slots__ = ('group', 'index')

    def __init__(self, group, index):
        if not 0 <= index < group.order:
            raise ForeignElement(index)
        self.group = group
        self.index = index

    def _check(self, other):
        if (not isinstance(other, GroupElement) or
                other.group is not self.group):
            raise ForeignElement(other)

    def __mul__(self, other):
        self._check(other)
        return GroupElement(self.group,
                            self.group.mul(self.index, other.index))

    def __pow__(self, k):
        return GroupElement(self.group, self.group.power(self.index, k))

    def inverse(self):
        return GroupElement(self.group, self.group.inverse(self.index))

    def order(self):
        return self.group.element_order(self.index)

    def is_identity(self):
        return self.index == self.group.identity

    def commutes_with(self, other):
        self._check(other)
        return self.group.commute(self.index, other.index)

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and
                other.group is self.group and other.index == self.index)

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.index < other.index

    def __hash__(self):
        return hash((id(self.group), self.index))

    def __repr__(self):
        return '<{0} in {1}>'.format(self.group.label(self.index),
                                     self.group.name)


class FiniteGroup(object):
    """
    A finite group backed by its multiplication table.

    :param mul: square table, ``mul[a][b]`` is the index of ``a * b``.
    :type mul: list of lists of int

    :param labels: optional human readable name for every element.
    :type labels: list of str

    :param name: a display name, e.g. ``S3``.
    :type name: str

    :param permutations: when the group is a permutation group, the
        :class:`sympy.combinatorics.Permutation` for every index.  Elements of
        such groups are read and written in cycle notation.

    The table is validated on construction: it must have a two-sided
    identity, two-sided inverses, and be associative.  Associativity is
    decided with Light's test over a generating set, which is exhaustive.
    """

    def __init__(self, mul, labels=None, name=None, permutations=None):
        order = len(mul)
        if order == 0:
            raise NoIdentity()
        if order > MAX_ORDER:
            raise GroupTooLarge(order, MAX_ORDER)
        for row in mul:
            if len(row) != order or any(
                    not isinstance(x, int) or not 0 <= x < order for x in row):
                raise UnknownGroup('table rows must list {0} indices in '
                                   '0..{1}'.format(order, order - 1))
        self.order = order
        self._mul = tuple(tuple(row) for row in mul)
        self.name = name or 'G{0}'.format(order)
        self.permutations = tuple(permutations) if permutations else None
        self.degree = self.permutations[0].size if self.permutations else None
        if labels is None:
            if self.permutations:
                labels = [format_cycles(p) for p in self.permutations]
            else:
                labels = [str(i) for i in range(order)]
        self._labels = tuple(labels)
        self._label_index = dict((l, i) for i, l in enumerate(self._labels))
        if self.permutations:
            self._perm_index = dict((tuple(p.array_form), i)
                                    for i, p in enumerate(self.permutations))

        self.identity = self._find_identity()
        self._inverse = self._find_inverses()
        self._check_associative()
        self._orders = None

    def _find_identity(self):
        for e in range(self.order):
            if all(self._mul[e][a] == a == self._mul[a][e]
                   for a in range(self.order)):
                return e
        raise NoIdentity()

    def _find_inverses(self):
        inverse = []
        for a in range(self.order):
            for b in range(self.order):
                if self._mul[a][b] == self.identity == self._mul[b][a]:
                    inverse.append(b)
                    break
            else:
                raise NoInverse(self._labels[a])
        return tuple(inverse)

    def _check_associative(self):
        gens, covered = [], set()
        for a in range(self.order):
            if a not in covered:
                gens.append(a)
                covered = self.closure(gens)
        m = self._mul
        for g in gens:
            for x in range(self.order):
                xg = m[x][g]
                for y in range(self.order):
                    if m[xg][y] != m[x][m[g][y]]:
                        raise NonAssociative(self._labels[x],
                                             self._labels[g],
                                             self._labels[y])

    def mul(self, a, b):
        return self._mul[a][b]

    def inverse(self, a):
        return self._inverse[a]

    def power(self, a, k):
        if k < 0:
            a, k = self._inverse[a], -k
        result = self.identity
        for _ in range(k % self.element_order(a)):
            result = self._mul[result][a]
        return result

    def element_order(self, a):
        if self._orders is None:
            orders = []
            for x in range(self.order):
                n, y = 1, x
                while y != self.identity:
                    y = self._mul[y][x]
                    n += 1
                orders.append(n)
            self._orders = tuple(orders)
        return self._orders[a]

    def commute(self, a, b):
        return self._mul[a][b] == self._mul[b][a]

    def conjugate(self, a, h):
        """
        ``h^-1 a h``
        """
        return self._mul[self._mul[self._inverse[h]][a]][h]

    def closure(self, indices):
        """
        The subgroup generated by ``indices``, as a frozenset of indices.

        This is the closure under products alone; a nonempty set in a finite
        group already reaches the identity.
        """
        found = set(indices) or set([self.identity])
        frontier = list(found)
        while frontier:
            new = []
            for a in frontier:
                for b in list(found):
                    for c in (self._mul[a][b], self._mul[b][a]):
                        if c not in found:
                            found.add(c)
                            new.append(c)
            frontier = new
        return frozenset(found)

    def element(self, index):
        return GroupElement(self, index)

    def elements(self):
        return [GroupElement(self, i) for i in range(self.order)]

    def identity_element(self):
        return GroupElement(self, self.identity)

    def label(self, index):
        return self._labels[index]

    def table(self):
        return [list(row) for row in self._mul]

    def labels(self):
        return list(self._labels)

    def lookup(self, label):
        """
        Find the element named by ``label``: cycle notation for permutation
        groups, otherwise the element index (as an int or a string).
        """
        if self.permutations and isinstance(label, str):
            perm = parse_cycles(label, self.degree)
            try:
                return GroupElement(
                    self, self._perm_index[tuple(perm.array_form)])
            except KeyError:
                raise ForeignElement(label)
        if isinstance(label, int) and not isinstance(label, bool):
            if not 0 <= label < self.order:
                raise ForeignElement(label)
            return GroupElement(self, label)
        if label in self._label_index:
            return GroupElement(self, self._label_index[label])
        raise ForeignElement(label)

    def is_commutative(self):
        return all(self.commute(a, b) for a in range(self.order)
                   for b in range(a + 1, self.order))

    def __len__(self):
        return self.order

    def __repr__(self):
        return '<FiniteGroup {0} of order {1}>'.format(self.name, self.order)


class FiniteAbelianGroup(object):
    """
    A finite abelian group ``Z/d_1 x ... x Z/d_k`` in invariant factor form.

    :param invariant_factors: ``d_1 | d_2 | ... | d_k``, each at least 2.
        The empty sequence is the trivial group.
    """

    def __init__(self, invariant_factors=()):
        factors = tuple(int(d) for d in invariant_factors)
        for i, d in enumerate(factors):
            if d < 2:
                raise UnknownGroup('invariant factor {0} < 2'.format(d))
            if i and d % factors[i - 1]:
                raise UnknownGroup('invariant factors {0} do not form a '
                                   'divisibility chain'.format(list(factors)))
        self.invariant_factors = factors

    @classmethod
    def from_cyclic_orders(cls, orders):
        """
        Normalise a direct sum of cyclic groups of the given orders.
        """
        exponents = {}
        for d in orders:
            d = int(d)
            if d == 0:
                raise UnknownGroup('infinite cyclic factor')
            for p, e in factorint(abs(d)).items():
                exponents.setdefault(p, []).append(e)
        length = max([len(es) for es in exponents.values()] or [0])
        factors = [1] * length
        for p, es in exponents.items():
            es = sorted(es, reverse=True)
            for j, e in enumerate(es):
                factors[j] *= p ** e
        return cls(sorted(factors))

    @property
    def order(self):
        result = 1
        for d in self.invariant_factors:
            result *= d
        return result

    def exponent(self):
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def elements(self):
        return itertools.product(*[range(d) for d in self.invariant_factors])

    def is_trivial(self):
        return not self.invariant_factors

    def __eq__(self, other):
        return (isinstance(other, FiniteAbelianGroup) and
                other.invariant_factors == self.invariant_factors)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.invariant_factors)

    def __repr__(self):
        if not self.invariant_factors:
            return '<FiniteAbelianGroup 1>'
        return '<FiniteAbelianGroup {0}>'.format(
            ' x '.join('Z/{0}'.format(d) for d in self.invariant_factors))


HomClasses = namedtuple('HomClasses', ['count', 'representatives'])


def format_cycles(perm):
    """
    Cycle notation with points numbered from 1; the identity is ``()``.
    """
    cycles = perm.cyclic_form
    if not cycles:
        return '()'
    return ''.join('(' + ' '.join(str(x + 1) for x in c) + ')' for c in cycles)


def parse_cycles(text, degree):
    """
    Parse cycle notation such as ``(1 2)(3 4)`` into a permutation of
    ``degree`` points.  Cycles are composed left to right.
    """
    stripped = text.strip()
    if stripped in ('', '()', 'e', '1'):
        return Permutation(list(range(degree)))
    if _cycle_re.sub('', stripped).strip():
        raise ForeignElement(text)
    perm = Permutation(list(range(degree)))
    for body in _cycle_re.findall(stripped):
        points = [int(x) for x in re.split(r'[\s,]+', body.strip()) if x]
        if (len(set(points)) != len(points) or
                any(not 1 <= x <= degree for x in points)):
            raise ForeignElement(text)
        if len(points) > 1:
            perm = perm * Permutation([[x - 1 for x in points]], size=degree)
    return perm


def _from_permutation_group(pgroup, name):
    perms = sorted(pgroup.generate(), key=lambda p: p.array_form)
    if len(perms) > MAX_ORDER:
        raise GroupTooLarge(len(perms), MAX_ORDER)
    index = dict((tuple(p.array_form), i) for i, p in enumerate(perms))
    mul = [[index[tuple((p * q).array_form)] for q in perms] for p in perms]
    return FiniteGroup(mul, name=name, permutations=perms)


def _cyclic(n):
    if n < 1:
        raise UnknownGroup({'kind': 'cyclic', 'n': n})
    if n > MAX_ORDER:
        raise GroupTooLarge(n, MAX_ORDER)
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(mul, name='C{0}'.format(n))


def _quaternion():
    # elements are (sign, unit) with units 1, i, j, k
    units = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
             (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
             (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
             (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0)}
    elements = [(s, u) for s in (1, -1) for u in range(4)]
    names = ['1', 'i', 'j', 'k', '-1', '-i', '-j', '-k']

    def mul(x, y):
        sign, unit = units[(x[1], y[1])]
        return (x[0] * y[0] * sign, unit)

    table = [[elements.index(mul(x, y)) for y in elements] for x in elements]
    return FiniteGroup(table, labels=names, name='Q8')


def _product(groups):
    if not groups:
        return _cyclic(1)
    result = groups[0]
    for other in groups[1:]:
        n, k = result.order, other.order
        if n * k > MAX_ORDER:
            raise GroupTooLarge(n * k, MAX_ORDER)
        mul = [[result.mul(a // k, b // k) * k + other.mul(a % k, b % k)
                for b in range(n * k)] for a in range(n * k)]
        labels = ['({0}, {1})'.format(result.label(a // k), other.label(a % k))
                  for a in range(n * k)]
        result = FiniteGroup(mul, labels=labels,
                             name='{0}x{1}'.format(result.name, other.name))
    return result


def _parse_shorthand(text):
    factors = []
    for part in re.split(r'\s*[x×*]\s*', text.strip()):
        if part.lower() in ('1', 'trivial'):
            factors.append({'kind': 'cyclic', 'n': 1})
            continue
        match = _shorthand_re.match(part)
        if not match:
            raise UnknownGroup(text)
        letter, n = match.group(1).upper(), int(match.group(2))
        if letter == 'S':
            factors.append({'kind': 'symmetric', 'degree': n})
        elif letter in ('C', 'Z'):
            factors.append({'kind': 'cyclic', 'n': n})
        elif letter == 'D':
            factors.append({'kind': 'dihedral', 'n': n})
        elif letter == 'A':
            factors.append({'kind': 'alternating', 'degree': n})
        elif n == 8:
            factors.append({'kind': 'quaternion'})
        else:
            raise UnknownGroup(text)
    if len(factors) == 1:
        return factors[0]
    return {'kind': 'product', 'factors': factors}


def make_group(spec):
    """
    Build a validated :class:`FiniteGroup` from a specification.

    :param spec: either a dict such as ``{"kind": "symmetric", "degree": 3}``,
        ``{"kind": "cyclic", "n": 6}``, ``{"kind": "dihedral", "n": 4}``
        (order 8), ``{"kind": "alternating", "degree": 4}``,
        ``{"kind": "quaternion"}``, ``{"kind": "product", "factors": [...]}``,
        ``{"kind": "table", "order": n, "mul": [[...], ...]}``; or a shorthand
        string such as ``S3``, ``C4``, ``D4``, ``Q8`` or ``C2xC2``.

    :returns: :class:`FiniteGroup`
    """
    if isinstance(spec, str):
        spec = _parse_shorthand(spec)
    if not isinstance(spec, dict):
        raise UnknownGroup(spec)
    kind = spec.get('kind')
    if kind == 'symmetric':
        degree = int(spec['degree'])
        if not 1 <= degree <= MAX_SYMMETRIC_DEGREE:
            raise UnknownGroup(spec)
        return _from_permutation_group(SymmetricGroup(degree),
                                       'S{0}'.format(degree))
    elif kind == 'cyclic':
        return _cyclic(int(spec['n']))
    elif kind == 'dihedral':
        n = int(spec['n'])
        if n < 1:
            raise UnknownGroup(spec)
        return _from_permutation_group(DihedralGroup(n), 'D{0}'.format(n))
    elif kind == 'alternating':
        degree = int(spec['degree'])
        if not 1 <= degree <= MAX_SYMMETRIC_DEGREE:
            raise UnknownGroup(spec)
        if degree < 3:
            return _cyclic(1)
        return _from_permutation_group(AlternatingGroup(degree),
                                       'A{0}'.format(degree))
    elif kind == 'quaternion':
        return _quaternion()
    elif kind == 'product':
        return _product([make_group(f) for f in spec.get('factors', [])])
    elif kind == 'table':
        mul = spec.get('mul') or []
        if 'order' in spec and int(spec['order']) != len(mul):
            raise UnknownGroup(
                'table declares order {0} but has {1} rows'.format(
                    spec['order'], len(mul)))
        return FiniteGroup(mul, labels=spec.get('labels'),
                           name=spec.get('name'))
    raise UnknownGroup(spec)


def _indices(group, elements):
    result = []
    for g in elements:
        if not isinstance(g, GroupElement) or g.group is not group:
            raise ForeignElement(g)
        result.append(g.index)
    return result


def generated_subgroup(group, gens):
    """
    The smallest subgroup of ``group`` containing ``gens``.

    :returns: frozenset of :class:`GroupElement`
    """
    closed = group.closure(_indices(group, gens))
    return frozenset(GroupElement(group, i) for i in closed)


def is_abelian(elements):
    """
    Whether all pairs of the given elements commute.
    """
    elements = list(elements)
    for i, a in enumerate(elements):
        for b in elements[i + 1:]:
            if not a.commutes_with(b):
                return False
    return True


def conjugacy_classes(group):
    """
    Partition ``group`` into conjugacy classes, ordered by smallest index.

    :returns: list of frozensets of :class:`GroupElement`
    """
    seen = set()
    classes = []
    for a in range(group.order):
        if a in seen:
            continue
        orbit = frozenset(group.conjugate(a, h) for h in range(group.order))
        seen.update(orbit)
        classes.append(frozenset(GroupElement(group, i) for i in orbit))
    return classes


def commutator_subgroup(group):
    commutators = set()
    for a in range(group.order):
        for b in range(group.order):
            ab = group.mul(a, b)
            ba = group.mul(b, a)
            commutators.add(group.mul(group.inverse(ba), ab))
    return frozenset(GroupElement(group, i)
                     for i in group.closure(commutators))


def abelian_type(elements):
    """
    The isomorphism type of an abelian subgroup, read off sympy's abelian
    invariants of its regular representation.

    :returns: :class:`FiniteAbelianGroup`
    """
    elements = sorted(elements)
    if len(elements) <= 1:
        return FiniteAbelianGroup()
    group = elements[0].group
    position = dict((g.index, i) for i, g in enumerate(elements))
    gens, covered = [], frozenset([group.identity])
    for g in elements:
        if g.index not in covered:
            gens.append(g.index)
            covered = group.closure(gens)
    perms = [Permutation([position[group.mul(h.index, g)] for h in elements])
             for g in gens]
    return FiniteAbelianGroup.from_cyclic_orders(
        PermutationGroup(perms).abelian_invariants())


def hom_classes(abelian, group):
    """
    Homomorphisms from a finite abelian group into ``group`` up to
    simultaneous conjugation.

    A homomorphism from ``Z/d_1 x ... x Z/d_k`` is a tuple ``(g_1, ..., g_k)``
    of pairwise commuting elements with ``g_i ** d_i == e``.

    :returns: :class:`HomClasses` with the count and one tuple of
        :class:`GroupElement` per class.
    """
    factors = abelian.invariant_factors
    candidates = [[g for g in range(group.order)
                   if group.power(g, d) == group.identity] for d in factors]

    def tuples(prefix):
        if len(prefix) == len(factors):
            yield tuple(prefix)
            return
        for g in candidates[len(prefix)]:
            if all(group.commute(g, h) for h in prefix):
                for t in tuples(prefix + [g]):
                    yield t

    seen = set()
    representatives = []
    for t in tuples([]):
        if t in seen:
            continue
        seen.update(tuple(group.conjugate(g, h) for g in t)
                    for h in range(group.order))
        representatives.append(tuple(GroupElement(group, g) for g in t))
    return HomClasses(len(representatives), representatives)
