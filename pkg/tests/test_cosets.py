# coding=UTF-8
"""Tests for double cosets, twisted C2 actions and orbit partitions."""
import unittest

import numpy

from amalgenus import catalog
from amalgenus import cosets
from amalgenus import errors
from amalgenus import groups
import amalgenus.testing
from amalgenus.testing import sampledata


class DoubleCosetTests(unittest.TestCase):
    """Tests for ``double_cosets`` and set products."""

    def setUp(self):
        """Build S3 and one of its reflection subgroups."""
        self.group = catalog.get_group('S3')
        self.reflection = groups.enumerate_subgroups(self.group).of_order(2)[0]
        self.rotation = groups.enumerate_subgroups(self.group).of_order(3)[0]

    def test_reflection_double_cosets(self):
        """AMG: C2 \\ S3 / C2 has a class of size 2 and one of size 4."""
        decomposition = cosets.double_cosets(
            self.group, self.reflection, self.reflection)
        amalgenus.testing.assert_partition(decomposition)
        self.assertEqual(decomposition.count, 2)
        self.assertEqual(
            sorted(len(members) for _, members in decomposition.classes),
            [2, 4])
        self.assertEqual(decomposition.representatives[0], 0)
        for representative, members in decomposition.classes:
            self.assertEqual(
                cosets.double_coset_size(
                    self.group, self.reflection, self.reflection,
                    representative),
                len(members))

    def test_normal_subgroup_double_cosets(self):
        """AMG: double cosets of a normal subgroup are its cosets."""
        decomposition = cosets.double_cosets(
            self.group, self.rotation, self.rotation)
        self.assertEqual(decomposition.count, 2)

    def test_trivial_subgroups(self):
        """AMG: trivial subgroups give one class per element."""
        trivial = groups.trivial_subgroup(self.group)
        decomposition = cosets.double_cosets(self.group, trivial, trivial)
        self.assertEqual(decomposition.count, 6)
        self.assertEqual(
            decomposition.class_of.tolist(), list(range(6)))

    def test_carrier_not_closed(self):
        """AMG: a carrier must be a union of double cosets."""
        with self.assertRaises(errors.CarrierNotClosed):
            cosets.double_cosets(
                self.group, self.reflection, self.reflection,
                carrier=[0, 2])

    def test_carrier_subset(self):
        """AMG: the subgroup itself is a closed carrier."""
        decomposition = cosets.double_cosets(
            self.group, self.reflection, self.reflection,
            carrier=self.reflection.elements)
        self.assertEqual(decomposition.count, 1)
        self.assertTrue((decomposition.class_of[
            [x for x in range(6) if x not in self.reflection]] == -1).all())

    def test_foreign_subgroup(self):
        """AMG: subgroups of another group are rejected."""
        other = catalog.get_group('C6')
        with self.assertRaises(errors.SubgroupNotInParent):
            cosets.double_cosets(
                other, self.reflection, groups.trivial_subgroup(other))

    def test_product_set(self):
        """AMG: a reflection times the rotations is the whole group."""
        self.assertEqual(
            cosets.product_set(self.group, self.rotation, self.reflection),
            tuple(range(6)))
        self.assertEqual(cosets.product_set(self.group), (0,))
        self.assertEqual(cosets.product_set(self.group, []), ())
        self.assertEqual(
            cosets.subset_inverse(self.group, self.rotation.elements),
            self.rotation.elements)


class TwistedInvolutionTests(unittest.TestCase):
    """Tests for the twisted rule ``alpha -> xi alpha**-1 xi``."""

    def test_plain_inversion(self):
        """AMG: without a twist the rule is inversion."""
        group = catalog.get_group('S3')
        twist = cosets.TwistedInvolution(group)
        for x_index in range(group.order):
            self.assertEqual(twist.apply(x_index), group.inv(x_index))

    def test_unknown_rule(self):
        """AMG: only the coset inversion rule exists."""
        with self.assertRaises(ValueError):
            cosets.TwistedInvolution(catalog.get_group('S3'), rule='swap')

    def test_twisted_inverse_set(self):
        """AMG: xi X**-1 xi of a subgroup with xi in it is the subgroup."""
        group = catalog.get_group('D8')
        klein = catalog.named_subgroup('D8', 'klein', group=group)
        self.assertEqual(
            cosets.twisted_inverse(group, klein, 4), klein.elements)

    def test_c2_orbits_inversion(self):
        """AMG: inversion fixes both reflection double cosets of S3."""
        group = catalog.get_group('S3')
        reflection = groups.enumerate_subgroups(group).of_order(2)[0]
        decomposition = cosets.double_cosets(group, reflection, reflection)
        c2 = cosets.c2_orbits(
            decomposition, cosets.TwistedInvolution(group))
        self.assertEqual(c2.count, 2)
        self.assertEqual(len(c2.fixed), 2)
        self.assertEqual(c2.pairs, [])

    def test_c2_orbits_pairs(self):
        """AMG: inversion pairs the classes of order three elements in C3."""
        group = catalog.cyclic_group(3)
        trivial = groups.trivial_subgroup(group)
        decomposition = cosets.double_cosets(group, trivial, trivial)
        c2 = cosets.c2_orbits(
            decomposition, cosets.TwistedInvolution(group))
        self.assertEqual(c2.count, 2)
        self.assertEqual(c2.fixed, [0])
        self.assertEqual(c2.pairs, [(1, 2)])

    def test_c2_not_well_defined(self):
        """AMG: a twist not conjugating A1 onto A2 is rejected."""
        group = catalog.get_group('S3')
        subgroup_list = groups.enumerate_subgroups(group)
        reflection_1, reflection_2 = subgroup_list.of_order(2)[:2]
        decomposition = cosets.double_cosets(
            group, reflection_2, reflection_1)
        xi = [
            x for x in range(group.order)
            if groups.conjugate_subgroup(group, reflection_1, x) !=
            reflection_2][0]
        with self.assertRaises(errors.InputValidationError):
            cosets.c2_orbits(
                decomposition, cosets.TwistedInvolution(group, xi))

    def test_random_c2_laws(self):
        """AMG: the twisted rule is well defined and an involution."""
        random_state = numpy.random.RandomState(1)
        pool = sampledata.c2_configuration_pool()
        for _ in range(1000):
            config = sampledata.random_c2_configuration(random_state, pool)
            self.assertLessEqual(config.ambient.order, 24)
            decomposition = cosets.double_cosets(
                config.ambient, config.a_2, config.a_1)
            twist = cosets.TwistedInvolution(config.ambient, config.xi)
            amalgenus.testing.assert_c2_laws(decomposition, twist)
            c2 = cosets.c2_orbits(decomposition, twist)
            self.assertEqual(
                len(c2.fixed) + 2 * len(c2.pairs), decomposition.count)


class OrbitTests(unittest.TestCase):
    """Tests for orbit partitions."""

    def test_generic_orbits(self):
        """AMG: two transpositions on six points give four orbits."""
        actors = [[1, 0, 2, 3, 4, 5], [0, 1, 2, 4, 3, 5]]
        partition = cosets.generic_orbits(6, actors)
        self.assertEqual(partition.count, 4)
        self.assertEqual(partition.labels.tolist(), [0, 0, 1, 2, 2, 3])

    def test_no_actors(self):
        """AMG: without actors every point is its own orbit."""
        partition = cosets.generic_orbits(3, [])
        self.assertEqual(partition.count, 3)

    def test_not_bijective(self):
        """AMG: actors must be permutations of the carrier."""
        with self.assertRaises(errors.NotBijective):
            cosets.generic_orbits(3, [[0, 0, 1]])
        with self.assertRaises(errors.NotBijective):
            cosets.generic_orbits(3, [[0, 1]])

    def test_against_naive_orbits(self):
        """AMG: the sparse graph orbits match breadth first closure."""
        random_state = numpy.random.RandomState(7)
        for _ in range(50):
            size = random_state.randint(1, 40)
            actors = [
                random_state.permutation(size)
                for _ in range(random_state.randint(0, 3))]
            fast = cosets.generic_orbits(size, actors)
            slow = cosets.naive_orbits(size, actors)
            self.assertEqual(fast.count, slow.count)
            self.assertEqual(fast.labels.tolist(), slow.labels.tolist())
