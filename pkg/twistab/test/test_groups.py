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
Tests for groups.py
"""

import random
from math import gcd

from sympy.combinatorics import Permutation
from twisted.trial.unittest import TestCase

from twistab import fuzz
from twistab.errors import (
    ForeignElement, GroupTooLarge, NoIdentity, NoInverse, NonAssociative,
    UnknownGroup)
from twistab.groups import (
    FiniteAbelianGroup, FiniteGroup, abelian_type, commutator_subgroup,
    conjugacy_classes, format_cycles, generated_subgroup, hom_classes,
    is_abelian, make_group, parse_cycles)

# a loop of order 5 in which every element is its own inverse
NON_ASSOCIATIVE = [[0, 1, 2, 3, 4],
                   [1, 0, 3, 4, 2],
                   [2, 4, 0, 1, 3],
                   [3, 2, 4, 0, 1],
                   [4, 3, 1, 2, 0]]


class MakeGroupTests(TestCase):
    """
    Building groups from specifications.
    """

    def test_symmetric(self):
        """
        symmetric(3) has order 6 and is not commutative.
        """
        group = make_group({'kind': 'symmetric', 'degree': 3})
        self.assertEqual(group.order, 6)
        self.assertFalse(group.is_commutative())

    def test_trivial(self):
        """
        cyclic(1) is the trivial group.
        """
        group = make_group({'kind': 'cyclic', 'n': 1})
        self.assertEqual(group.order, 1)
        self.assertTrue(group.identity_element().is_identity())

    def test_dihedral_order(self):
        """
        dihedral(n) is the symmetry group of the n-gon, of order 2n.
        """
        self.assertEqual(make_group({'kind': 'dihedral', 'n': 4}).order, 8)
        self.assertEqual(make_group('D4').order, 8)

    def test_shorthand(self):
        """
        Shorthand strings name the usual small groups.
        """
        orders = {'S3': 6, 'C4': 4, 'Z4': 4, 'A4': 12, 'Q8': 8, 'C2xC2': 4,
                  'C2*C3': 6, '1': 1}
        for spec, order in orders.items():
            self.assertEqual(make_group(spec).order, order, spec)
        self.assertTrue(make_group('C2xC2').is_commutative())
        self.assertFalse(make_group('Q8').is_commutative())

    def test_product_spec(self):
        """
        A product specification multiplies componentwise.
        """
        group = make_group({'kind': 'product',
                            'factors': [{'kind': 'cyclic', 'n': 2},
                                        {'kind': 'cyclic', 'n': 3}]})
        self.assertEqual(group.order, 6)
        self.assertTrue(group.is_commutative())
        self.assertEqual(sorted(g.order() for g in group.elements()),
                         [1, 2, 3, 3, 6, 6])

    def test_table(self):
        """
        An explicit table is accepted when it is a group.
        """
        group = make_group({'kind': 'table', 'order': 3,
                            'mul': [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})
        self.assertEqual(group.order, 3)
        self.assertEqual(group.element(1).order(), 3)

    def test_non_associative_table(self):
        """
        A table with identity and inverses that is not associative is refused.
        """
        self.assertRaises(NonAssociative, make_group,
                          {'kind': 'table', 'order': 5,
                           'mul': NON_ASSOCIATIVE})

    def test_tables_of_groups(self):
        """
        Tables copied from groups pass the associativity test, and closures
        start from the identity.
        """
        for spec in ('A4', 'Q8', 'C2xC2', 'D4'):
            group = make_group(spec)
            copy = make_group({'kind': 'table', 'mul': group.table()})
            self.assertEqual(copy.table(), group.table())
            self.assertEqual(copy.closure([]), frozenset([copy.identity]))
            self.assertEqual(copy.closure(range(copy.order)),
                             frozenset(range(copy.order)))

    def test_no_identity(self):
        """
        A table without a two-sided identity is refused.
        """
        self.assertRaises(NoIdentity, FiniteGroup, [[0, 0], [1, 1]])

    def test_no_inverse(self):
        """
        A monoid table without inverses is refused.
        """
        self.assertRaises(NoInverse, FiniteGroup, [[0, 1], [1, 1]])

    def test_order_mismatch(self):
        """
        The declared order must match the table.
        """
        self.assertRaises(UnknownGroup, make_group,
                          {'kind': 'table', 'order': 2, 'mul': [[0]]})

    def test_too_large(self):
        """
        Groups above the order cap are refused.
        """
        self.assertRaises(GroupTooLarge, make_group, 'S6')
        self.assertRaises(GroupTooLarge, make_group, {'kind': 'cyclic',
                                                      'n': 1000})

    def test_unknown(self):
        """
        Unrecognised specifications raise UnknownGroup.
        """
        self.assertRaises(UnknownGroup, make_group, 'X9')
        self.assertRaises(UnknownGroup, make_group, {'kind': 'free'})
        self.assertRaises(UnknownGroup, make_group, 42)


class ElementTests(TestCase):
    """
    Group elements and cycle notation.
    """

    def setUp(self):
        self.s3 = make_group('S3')

    def test_products_read_left_to_right(self):
        """
        ``a * b`` applies ``a`` first, as sympy does.
        """
        a = self.s3.lookup('(1 2)')
        b = self.s3.lookup('(1 3)')
        self.assertEqual(a * b, self.s3.lookup('(1 2 3)'))
        self.assertEqual(b * a, self.s3.lookup('(1 3 2)'))
        self.assertFalse(a.commutes_with(b))

    def test_inverse_and_power(self):
        """
        A 3-cycle cubes to the identity and its inverse is its square.
        """
        c = self.s3.lookup('(1 2 3)')
        self.assertEqual(c.order(), 3)
        self.assertTrue((c ** 3).is_identity())
        self.assertEqual(c.inverse(), c ** 2)
        self.assertEqual(c ** -1, c.inverse())

    def test_foreign_element(self):
        """
        Elements of different groups cannot be multiplied.
        """
        other = make_group('S3')
        self.assertRaises(ForeignElement, lambda: self.s3.element(1) *
                          other.element(1))
        self.assertRaises(ForeignElement, self.s3.lookup, '(1 4)')

    def test_cycle_notation(self):
        """
        Cycle notation numbers points from 1 and writes the identity as ().
        """
        self.assertEqual(format_cycles(Permutation([1, 0, 2])), '(1 2)')
        self.assertEqual(format_cycles(Permutation([0, 1, 2])), '()')
        self.assertEqual(parse_cycles('(1 2)(1 3)', 3),
                         Permutation([[0, 1]], size=3) *
                         Permutation([[0, 2]], size=3))
        self.assertEqual(parse_cycles('e', 3), Permutation([0, 1, 2]))
        self.assertEqual(self.s3.lookup('()'), self.s3.identity_element())

    def test_labels(self):
        """
        Permutation groups label elements in cycle notation, tables by index.
        """
        self.assertEqual(self.s3.label(self.s3.lookup('(1 2)').index),
                         '(1 2)')
        c3 = make_group('C3')
        self.assertEqual(c3.lookup(2), c3.element(2))
        self.assertEqual(c3.lookup('2'), c3.element(2))
        q8 = make_group('Q8')
        self.assertEqual(q8.lookup('i') * q8.lookup('i'), q8.lookup('-1'))
        self.assertEqual(q8.lookup('i') * q8.lookup('j'), q8.lookup('k'))


class SubgroupTests(TestCase):
    """
    Generated subgroups, abelianness and conjugacy.
    """

    def setUp(self):
        self.s3 = make_group('S3')

    def test_generated_by_transpositions(self):
        """
        Two transpositions generate all of S3.
        """
        result = generated_subgroup(self.s3, [self.s3.lookup('(1 2)'),
                                              self.s3.lookup('(1 3)')])
        self.assertEqual(len(result), 6)

    def test_generated_by_nothing(self):
        """
        The empty set generates the trivial subgroup.
        """
        self.assertEqual(generated_subgroup(self.s3, []),
                         frozenset([self.s3.identity_element()]))

    def test_generated_in_cyclic(self):
        """
        In Z/6, the element 2 generates {0, 2, 4}.
        """
        c6 = make_group('C6')
        result = generated_subgroup(c6, [c6.element(2)])
        self.assertEqual(sorted(g.index for g in result), [0, 2, 4])
        self.assertTrue(is_abelian(result))

    def test_is_abelian(self):
        """
        S3 is not abelian, the trivial subgroup is.
        """
        self.assertFalse(is_abelian(self.s3.elements()))
        self.assertTrue(is_abelian([self.s3.identity_element()]))

    def test_conjugacy_classes(self):
        """
        S3 has classes of sizes 1, 3 and 2; abelian groups have singletons.
        """
        self.assertEqual(sorted(len(c) for c in conjugacy_classes(self.s3)),
                         [1, 2, 3])
        self.assertEqual(len(conjugacy_classes(make_group('C1'))), 1)
        self.assertEqual([len(c) for c in conjugacy_classes(make_group('C4'))],
                         [1, 1, 1, 1])

    def test_commutator_subgroup(self):
        """
        The commutator subgroup of S3 is A3; abelian groups have a trivial one.
        """
        self.assertEqual(len(commutator_subgroup(self.s3)), 3)
        self.assertEqual(len(commutator_subgroup(make_group('C4'))), 1)

    def test_abelian_type(self):
        """
        The isomorphism type of an abelian subgroup.
        """
        klein = make_group('C2xC2')
        self.assertEqual(abelian_type(klein.elements()),
                         FiniteAbelianGroup([2, 2]))
        c4 = make_group('C4')
        self.assertEqual(abelian_type(c4.elements()), FiniteAbelianGroup([4]))
        self.assertEqual(abelian_type([c4.identity_element()]),
                         FiniteAbelianGroup())


class FiniteAbelianGroupTests(TestCase):
    """
    Invariant factor normal form.
    """

    def test_from_cyclic_orders(self):
        """
        Z/2 + Z/3 is Z/6 and Z/2 + Z/4 stays as it is.
        """
        self.assertEqual(FiniteAbelianGroup.from_cyclic_orders([2, 3]),
                         FiniteAbelianGroup([6]))
        self.assertEqual(FiniteAbelianGroup.from_cyclic_orders([4, 2]),
                         FiniteAbelianGroup([2, 4]))
        self.assertEqual(FiniteAbelianGroup.from_cyclic_orders([6, 4]),
                         FiniteAbelianGroup([2, 12]))
        self.assertTrue(
            FiniteAbelianGroup.from_cyclic_orders([1]).is_trivial())

    def test_chain_required(self):
        """
        Invariant factors must form a divisibility chain.
        """
        self.assertRaises(UnknownGroup, FiniteAbelianGroup, [2, 3])
        self.assertRaises(UnknownGroup, FiniteAbelianGroup, [1])

    def test_order_and_exponent(self):
        """
        Order is the product and exponent the last factor.
        """
        group = FiniteAbelianGroup([2, 6])
        self.assertEqual(group.order, 12)
        self.assertEqual(group.exponent(), 6)
        self.assertEqual(len(list(group.elements())), 12)


class HomClassesTests(TestCase):
    """
    Homomorphisms from abelian groups up to conjugation.
    """

    def test_z2_into_s3(self):
        """
        Z/2 -> S3: the trivial map and the class of transpositions.
        """
        self.assertEqual(hom_classes(FiniteAbelianGroup([2]),
                                     make_group('S3')).count, 2)

    def test_trivial_source(self):
        """
        The trivial group has one homomorphism into anything.
        """
        result = hom_classes(FiniteAbelianGroup(), make_group('D4'))
        self.assertEqual(result.count, 1)
        self.assertEqual(result.representatives, [()])

    def test_klein_into_s3(self):
        """
        Z/2 x Z/2 -> S3: distinct transpositions never commute, so 4 classes.
        """
        self.assertEqual(hom_classes(FiniteAbelianGroup([2, 2]),
                                     make_group('S3')).count, 4)

    def test_abelian_target(self):
        """
        Into an abelian group the count is the number of homomorphisms.
        """
        self.assertEqual(hom_classes(FiniteAbelianGroup([4]),
                                     make_group('C2')).count, 2)
        self.assertEqual(hom_classes(FiniteAbelianGroup([2]),
                                     make_group('C2xC2')).count, 4)

    def test_cyclic_counts(self):
        """
        Hom(Z/a, Z/b) has gcd(a, b) elements.
        """
        for b in range(1, 13):
            target = make_group({'kind': 'cyclic', 'n': b})
            for a in range(1, 13):
                self.assertEqual(
                    hom_classes(FiniteAbelianGroup([a]), target).count,
                    gcd(a, b), (a, b))


class DivisibilityTests(TestCase):
    """
    Orders of subgroups, elements and conjugacy classes divide the group
    order.
    """

    def test_subgroups(self):
        """
        Lagrange on random generating sets.
        """
        rng = random.Random(21)
        for _ in range(40):
            group = fuzz.random_group(rng)
            gens = [group.element(rng.randrange(group.order))
                    for _ in range(rng.randint(0, 3))]
            subgroup = generated_subgroup(group, gens)
            self.assertEqual(group.order % len(subgroup), 0)
            for g in gens:
                self.assertEqual(group.order % g.order(), 0)
                self.assertIn(g, subgroup)

    def test_class_sizes(self):
        """
        Conjugacy classes partition the group into divisors of its order.
        """
        rng = random.Random(22)
        for _ in range(20):
            group = fuzz.random_group(rng)
            classes = conjugacy_classes(group)
            self.assertEqual(sum(len(c) for c in classes), group.order)
            for c in classes:
                self.assertEqual(group.order % len(c), 0)
