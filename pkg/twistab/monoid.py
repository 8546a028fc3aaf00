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

Admissible monoids, their character groups and torsion Picard groups.

An admissible monoid ``N`` is a finitely generated submonoid of ``Q^n_{>=0}``
containing ``Z^n_{>=0}``.  Its quotient ``X = N^gp / Z^n`` is a finite abelian
group, computed here from the integer Smith normal form of the generator
matrix.  Membership in ``N`` itself is decided by saturation: a vector lies in
``N`` when it lies in ``N^gp`` and is nonnegative.

Elements of ``Q/Z`` are reduced :class:`fractions.Fraction` values in
``[0, 1)``.

"""

import itertools
from collections import namedtuple
from fractions import Fraction
from math import floor, gcd
from numbers import Rational

from sympy import Matrix, ZZ, diag
from sympy.matrices.normalforms import invariant_factors, smith_normal_decomp

from twistab.errors import NotAdmissible, NotInMonoid, NotInXm
from twistab.groups import FiniteAbelianGroup, hom_classes

__all__ = ['AdmissibleMonoid', 'XGroup', 'TorsionClass', 'XmSubgroup',
           'MinimalLift', 'x_group', 'chi', 'x_m', 'torsion_pic',
           'torsion_class', 'degree_of_generator_bundle', 'minimal_lift',
           'monoid_join', 'coordinate_data', 'count_abelian_torsors',
           'orbifold_abelianization']


def _lcm(values):
    result = 1
    for v in values:
        result = result * v // gcd(result, v)
    return result


def _rational(x):
    if isinstance(x, bool) or not isinstance(x, Rational):
        raise NotAdmissible("Monoid entries must be exact rationals, "
                            "got {0!r}".format(x))
    return Fraction(x)


class AdmissibleMonoid(object):
    """
    The monoid generated by ``generators`` and the standard basis of ``Z^n``.

    :param n: ambient dimension.
    :type n: int

    :param generators: vectors of nonnegative rationals of length ``n``.
    :type generators: list of sequences of :class:`fractions.Fraction`
    """

    def __init__(self, n, generators=()):
        if n < 0:
            raise NotAdmissible("Monoid dimension must be nonnegative")
        gens = []
        for index, g in enumerate(generators):
            g = tuple(_rational(x) for x in g)
            if len(g) != n:
                raise NotAdmissible(
                    "Generator {0} has {1} entries, expected {2}".format(
                        index, len(g), n), location=index)
            if any(x < 0 for x in g):
                raise NotAdmissible(
                    "Generator {0} has a negative entry".format(index),
                    location=index)
            gens.append(g)
        self.n = n
        self.generators = tuple(gens)
        self._x_group = None

    @classmethod
    def split(cls, root_orders):
        """
        ``(1/r_1) Z_{>=0} + ... + (1/r_k) Z_{>=0}``.
        """
        orders = [int(r) for r in root_orders]
        if any(r < 1 for r in orders):
            raise NotAdmissible("Root orders must be positive")
        k = len(orders)
        gens = []
        for i, r in enumerate(orders):
            if r > 1:
                gens.append(tuple(Fraction(1, r) if j == i else Fraction(0)
                                  for j in range(k)))
        return cls(k, gens)

    def x_group(self):
        if self._x_group is None:
            self._x_group = XGroup(self)
        return self._x_group

    def contains(self, vector):
        vector = tuple(Fraction(x) for x in vector)
        if any(x < 0 for x in vector):
            return False
        return self.x_group().contains(vector)

    def __eq__(self, other):
        return (isinstance(other, AdmissibleMonoid) and other.n == self.n and
                other.generators == self.generators)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.generators))

    def __repr__(self):
        return '<AdmissibleMonoid n={0} generators={1}>'.format(
            self.n, [[str(x) for x in g] for g in self.generators])


class XGroup(object):
    """
    ``X = N^gp / Z^n`` for an admissible monoid ``N``.

    With ``L`` the common denominator of the generators and
    ``D = S (L A) T`` the Smith decomposition of the scaled generator matrix,
    ``X`` is the direct sum of cyclic groups of order ``L / gcd(d_i, L)``.
    Components are kept in ascending order, so :attr:`invariant_factors` is a
    divisibility chain and :meth:`coordinates` returns one residue per
    component.
    """

    def __init__(self, monoid):
        self.monoid = monoid
        n = monoid.n
        gens = monoid.generators
        self.scale = scale = _lcm(x.denominator for g in gens for x in g)
        if n and gens:
            scaled = Matrix(n, len(gens), lambda i, j: int(gens[j][i] * scale))
            smith, s, _ = smith_normal_decomp(scaled, domain=ZZ)
            diagonal = [abs(int(smith[i, i])) if i < min(smith.shape) else 0
                        for i in range(n)]
            s_inv = s.inv()
            self._s = [[int(s[i, j]) for j in range(n)] for i in range(n)]
        else:
            diagonal = [0] * n
            s_inv = None
            self._s = [[int(i == j) for j in range(n)] for i in range(n)]
        self._divisors = [gcd(d, scale) for d in diagonal]
        components = []
        for i in reversed(range(n)):
            e = scale // self._divisors[i]
            if e > 1:
                basis = tuple(
                    Fraction(int(s_inv[r, i]) * self._divisors[i], scale) % 1
                    for r in range(n))
                components.append((i, e, basis))
        self._components = components
        self.invariant_factors = tuple(e for _, e, _ in components)
        self.basis = tuple(b for _, _, b in components)
        self.chi_basis = tuple(sum(b, Fraction(0)) % 1 for b in self.basis)

    @property
    def order(self):
        result = 1
        for e in self.invariant_factors:
            result *= e
        return result

    def abelian_group(self):
        return FiniteAbelianGroup(self.invariant_factors)

    def coordinates(self, vector):
        """
        The residues of ``vector`` against :attr:`basis`.

        :raises NotInMonoid: if ``vector`` is not in ``N^gp``.
        """
        vector = tuple(Fraction(x) for x in vector)
        if len(vector) != self.monoid.n:
            raise NotInMonoid(vector)
        scaled = [x * self.scale for x in vector]
        if any(x.denominator != 1 for x in scaled):
            raise NotInMonoid(vector)
        scaled = [int(x) for x in scaled]
        w = [sum(row[j] * scaled[j] for j in range(len(scaled)))
             for row in self._s]
        for i, d in enumerate(self._divisors):
            if w[i] % d:
                raise NotInMonoid(vector)
        return tuple((w[i] // self._divisors[i]) % e
                     for i, e, _ in self._components)

    def contains(self, vector):
        try:
            self.coordinates(vector)
        except NotInMonoid:
            return False
        return True

    def lift(self, coordinates):
        """
        The representative with every entry in ``[0, 1)``.
        """
        result = [Fraction(0)] * self.monoid.n
        for c, basis in zip(coordinates, self.basis):
            for j, b in enumerate(basis):
                result[j] += c * b
        return tuple(x % 1 for x in result)

    def element(self, coordinates):
        coordinates = tuple(int(c) % e for c, e in
                            zip(coordinates, self.invariant_factors))
        return TorsionClass(self, coordinates)

    def zero(self):
        return TorsionClass(self, (0,) * len(self.invariant_factors))

    def elements(self):
        for coords in itertools.product(
                *[range(e) for e in self.invariant_factors]):
            yield TorsionClass(self, coords)

    def generator_images(self):
        """
        The class of every monoid generator, the surjection onto ``X``.
        """
        return [TorsionClass(self, self.coordinates(g))
                for g in self.monoid.generators]

    def chi_values(self):
        return [chi(g) for g in self.monoid.generators]

    def __repr__(self):
        return '<XGroup {0}>'.format(list(self.invariant_factors))


class TorsionClass(object):
    """
    An element of an :class:`XGroup`.
    """
    __slots__ = ('group', 'coordinates')

    def __init__(self, group, coordinates):
        self.group = group
        self.coordinates = tuple(coordinates)

    @property
    def vector(self):
        return self.group.lift(self.coordinates)

    def chi(self):
        total = Fraction(0)
        for c, value in zip(self.coordinates, self.group.chi_basis):
            total += c * value
        return total % 1

    def __add__(self, other):
        return self.group.element(a + b for a, b in
                                  zip(self.coordinates, other.coordinates))

    def __neg__(self):
        return self.group.element(-a for a in self.coordinates)

    def __mul__(self, k):
        return self.group.element(k * a for a in self.coordinates)

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coordinates)

    def __eq__(self, other):
        return (isinstance(other, TorsionClass) and
                other.group is self.group and
                other.coordinates == self.coordinates)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((id(self.group), self.coordinates))

    def __repr__(self):
        return '<TorsionClass {0}>'.format([str(x) for x in self.vector])


class XmSubgroup(object):
    """
    ``X_m``, the classes ``x`` with ``m * chi(x) = 0``, with its own invariant
    factors and the inclusion map given by :attr:`generators`.
    """

    def __init__(self, parent, m, invariant_factors, generators):
        self.parent = parent
        self.m = m
        self.invariant_factors = tuple(invariant_factors)
        self.generators = tuple(generators)

    @property
    def order(self):
        result = 1
        for d in self.invariant_factors:
            result *= d
        return result

    def abelian_group(self):
        return FiniteAbelianGroup(self.invariant_factors)

    def contains(self, x):
        return (x.group is self.parent and (self.m * x.chi()) % 1 == 0)

    def elements(self):
        for ks in itertools.product(*[range(d) for d in
                                      self.invariant_factors]):
            x = self.parent.zero()
            for k, g in zip(ks, self.generators):
                x = x + k * g
            yield x

    def __repr__(self):
        return '<XmSubgroup m={0} {1}>'.format(
            self.m, list(self.invariant_factors))


MinimalLift = namedtuple('MinimalLift', ['n_lambda', 's_lambda', 'w_lambda'])


def x_group(monoid):
    return monoid.x_group()


def chi(x):
    """
    The summation character ``X -> Q/Z``.

    :param x: a :class:`TorsionClass` or a rational vector (any lift).
    :returns: :class:`fractions.Fraction` in ``[0, 1)``.
    """
    if isinstance(x, TorsionClass):
        return x.chi()
    return sum((Fraction(v) for v in x), Fraction(0)) % 1


def torsion_class(group, vector):
    """
    :raises NotInMonoid: if ``vector`` is not in ``N^gp``.
    """
    return TorsionClass(group, group.coordinates(vector))


def _int_matrix(m):
    return [[int(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def x_m(group, m):
    """
    The subgroup ``X_m = chi^{-1}(1/m Z / Z)`` of ``group``.

    In coordinates, ``X_m`` is ``K / diag(e) Z^r`` where ``K`` is the kernel of
    ``c -> sum c_j * m * chi(b_j)`` modulo ``Z``; ``K`` is read off a Smith
    decomposition of a single integer row, and the quotient off a second one.

    :param group: the ambient :class:`XGroup`.
    :param m: a positive integer.
    :returns: :class:`XmSubgroup`
    """
    m = int(m)
    if m < 1:
        raise NotAdmissible("m must be a positive integer, got {0}".format(m))
    r = len(group.invariant_factors)
    if r == 0:
        return XmSubgroup(group, m, (), ())
    targets = [(m * value) % 1 for value in group.chi_basis]
    modulus = _lcm(t.denominator for t in targets)
    row = Matrix(1, r + 1, [int(t * modulus) for t in targets] + [modulus])
    _, _, t = smith_normal_decomp(row, domain=ZZ)
    kernel = t[0:r, 1:r + 1]
    relations = kernel.inv() * diag(*group.invariant_factors)
    relations = relations.applyfunc(int)
    # D = S R T, so the columns of S^-1 generate Z^r / R Z^r
    smith, s2, _ = smith_normal_decomp(relations, domain=ZZ)
    inclusion = _int_matrix(kernel * s2.inv())
    factors, generators = [], []
    for j in range(r):
        d = abs(int(smith[j, j]))
        if d > 1:
            factors.append(d)
            generators.append(group.element(inclusion[i][j] for i in range(r)))
    return XmSubgroup(group, m, factors, generators)


def torsion_pic(root_orders, m):
    """
    The torsion Picard group of the stacky line with stacky points of orders
    ``root_orders`` and one of order ``m``.

    :returns: :class:`twistab.groups.FiniteAbelianGroup`
    """
    subgroup = x_m(AdmissibleMonoid.split(root_orders).x_group(), m)
    return FiniteAbelianGroup.from_cyclic_orders(subgroup.invariant_factors)


def degree_of_generator_bundle(monoid, ell):
    """
    ``deg L_ell = -(ell_1 + ... + ell_n)``.

    :raises NotInMonoid: if ``ell`` is not in ``monoid``.
    """
    ell = tuple(Fraction(x) for x in ell)
    if len(ell) != monoid.n or not monoid.contains(ell):
        raise NotInMonoid(ell)
    return -sum(ell, Fraction(0))


def minimal_lift(group, m, lam):
    """
    The lift of ``lam`` with all coordinates in ``[0, 1)`` together with the
    decomposition ``chi(n_lambda) = s_lambda + w_lambda / m``.

    :raises NotInXm: if ``m * chi(lam)`` is not an integer.
    """
    lift = lam.vector
    if (m * lam.chi()) % 1 != 0:
        raise NotInXm(lift, m)
    total = sum(lift, Fraction(0))
    s = int(floor(total))
    w = int(m * (total - s))
    return MinimalLift(lift, s, w)


def coordinate_data(monoid):
    """
    ``(r, m_sum)``: the projection of ``N`` to coordinate ``i`` is
    ``(1/r_i) Z_{>=0}`` and the summation image is ``(1/m_sum) Z_{>=0}``.
    """
    gens = monoid.generators
    r = [_lcm(g[i].denominator for g in gens) for i in range(monoid.n)]
    m_sum = _lcm(sum(g, Fraction(0)).denominator for g in gens)
    return r, m_sum


def monoid_join(monoids):
    """
    The split monoid ``+_i (1/lcm_j r_i^(j)) Z_{>=0}`` containing every input.
    """
    monoids = list(monoids)
    if not monoids:
        raise NotAdmissible("Nothing to join")
    n = monoids[0].n
    orders = [1] * n
    for index, monoid in enumerate(monoids):
        if monoid.n != n:
            raise NotAdmissible(
                "Monoid {0} has dimension {1}, expected {2}".format(
                    index, monoid.n, n), location=index)
        r, _ = coordinate_data(monoid)
        orders = [_lcm([a, b]) for a, b in zip(orders, r)]
    return AdmissibleMonoid.split(orders)


def count_abelian_torsors(root_orders, m, group):
    """
    Torsors with an abelian contraction on the stacky line, up to isomorphism.
    """
    return hom_classes(torsion_pic(root_orders, m), group).count


def orbifold_abelianization(root_orders, m):
    """
    Abelianization of
    ``<g_1 .. g_{k+1} | g_i^{r_i}, g_{k+1}^m, g_1...g_{k+1}>``.
    """
    orders = [int(r) for r in root_orders] + [int(m)]
    size = len(orders)
    rows = [[orders[i] if j == i else 0 for j in range(size)]
            for i in range(size)]
    rows.append([1] * size)
    factors = invariant_factors(Matrix(rows), domain=ZZ)
    return FiniteAbelianGroup.from_cyclic_orders(
        abs(int(d)) for d in factors if abs(int(d)) > 1)
