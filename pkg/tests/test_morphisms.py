# coding=UTF-8
"""Tests for morphisms, automorphism groups and restriction images."""
import unittest

import mock
import numpy

from amalgenus import catalog
from amalgenus import errors
from amalgenus import groups
from amalgenus import morphisms
import amalgenus.testing


class MorphismTests(unittest.TestCase):
    """Tests for the ``Morphism`` value type."""

    def setUp(self):
        """Build C4 and C2."""
        self.c4 = catalog.cyclic_group(4)
        self.c2 = catalog.cyclic_group(2)

    def test_homomorphism_checked(self):
        """AMG: the reduction C4 -> C2 is a homomorphism."""
        morphism = morphisms.Morphism(self.c4, self.c2, [0, 1, 0, 1])
        amalgenus.testing.assert_homomorphism(morphism)
        self.assertEqual(morphism(3), 1)
        self.assertEqual(morphism.image(), [0, 1])

    def test_not_homomorphism(self):
        """AMG: maps breaking a product are rejected."""
        with self.assertRaises(errors.InputValidationError):
            morphisms.Morphism(self.c4, self.c2, [0, 1, 1, 0])

    def test_wrong_length(self):
        """AMG: the map needs one image per source element."""
        with self.assertRaises(errors.InputValidationError):
            morphisms.Morphism(self.c4, self.c2, [0, 1])

    def test_not_injective(self):
        """AMG: injections must be injective."""
        with self.assertRaises(errors.NotBijective):
            morphisms.Morphism(
                self.c4, self.c2, [0, 1, 0, 1], kind='injection')

    def test_unknown_kind(self):
        """AMG: only the three kinds are accepted."""
        with self.assertRaises(ValueError):
            morphisms.Morphism(self.c4, self.c2, [0, 1, 0, 1], kind='iso')

    def test_compose_and_inverse(self):
        """AMG: composition applies the right factor first."""
        inversion = morphisms.Morphism(
            self.c4, self.c4, [0, 3, 2, 1], kind='automorphism')
        reduction = morphisms.Morphism(self.c4, self.c2, [0, 1, 0, 1])
        composed = reduction.compose(inversion)
        self.assertEqual(composed.map.tolist(), [0, 1, 0, 1])
        self.assertEqual(
            inversion.compose(inversion).map.tolist(), [0, 1, 2, 3])
        self.assertEqual(inversion.inverse(), inversion)
        with self.assertRaises(errors.IncompatibleShapes):
            inversion.compose(reduction)
        with self.assertRaises(errors.NotBijective):
            reduction.inverse()


class AutomorphismTests(unittest.TestCase):
    """Tests for ``compute_aut`` against the bijection scan."""

    def _check_against_bruteforce(self, group, order, inn_order):
        aut = morphisms.compute_aut(group)
        oracle = morphisms.compute_aut_bruteforce(group)
        self.assertEqual(aut.order, order)
        self.assertEqual(len(aut.inn_indices), inn_order)
        self.assertTrue(numpy.array_equal(aut.maps, oracle.maps))
        self.assertEqual(aut.inn_indices, oracle.inn_indices)
        for row in aut.maps:
            amalgenus.testing.assert_homomorphism(
                morphisms.Morphism(group, group, row, check=False))
        return aut

    def test_klein_four(self):
        """AMG: Aut(C2 x C2) has order 6 and trivial Inn."""
        aut = self._check_against_bruteforce(catalog.klein_group(), 6, 1)
        self.assertEqual(morphisms.out_quotient(aut).order, 6)

    def test_d8(self):
        """AMG: Aut(D8) has order 8 and Out(D8) has order 2."""
        aut = self._check_against_bruteforce(catalog.get_group('D8'), 8, 4)
        self.assertEqual(morphisms.out_quotient(aut).order, 2)

    def test_s3(self):
        """AMG: Aut(S3) has order 6 and trivial Out."""
        aut = self._check_against_bruteforce(catalog.get_group('S3'), 6, 6)
        self.assertEqual(morphisms.out_quotient(aut).order, 1)

    def test_q8(self):
        """AMG: Aut(Q8) has order 24 and Out(Q8) is S3."""
        aut = morphisms.compute_aut(catalog.get_group('Q8'))
        out_h = morphisms.out_quotient(aut)
        self.assertEqual(aut.order, 24)
        self.assertEqual(out_h.order, 6)
        self.assertFalse(groups.is_abelian(out_h.quotient_group))

    def test_identity_first(self):
        """AMG: the identity map has index 0."""
        aut = morphisms.compute_aut(catalog.get_group('D8'))
        self.assertEqual(aut.group.identity, 0)
        self.assertEqual(aut.maps[0].tolist(), list(range(8)))
        self.assertEqual(aut.index(numpy.arange(8)), 0)

    def test_composition_table(self):
        """AMG: the automorphism group table composes map tables."""
        aut = morphisms.compute_aut(catalog.get_group('D8'))
        for x_index in range(aut.order):
            for y_index in range(aut.order):
                composed = aut.maps[x_index][aut.maps[y_index]]
                self.assertEqual(
                    aut.index(composed), aut.group.mul(x_index, y_index))

    def test_out_quotient(self):
        """AMG: coset representatives are minimal and cosets partition."""
        aut = morphisms.compute_aut(catalog.get_group('D8'))
        out_h = morphisms.out_quotient(aut)
        self.assertEqual(out_h.coset_reps[0], 0)
        covered = []
        for coset_index in range(out_h.order):
            coset = out_h.coset(coset_index)
            self.assertEqual(min(coset), out_h.lift(coset_index))
            self.assertEqual(len(coset), 4)
            covered.extend(coset)
        self.assertEqual(sorted(covered), list(range(8)))
        self.assertEqual(
            out_h.preimage([0]), list(aut.inn_indices))
        self.assertEqual(len(out_h.project(aut.inn_indices)), 1)

    def test_bruteforce_limit(self):
        """AMG: the bijection scan refuses larger groups."""
        with self.assertRaises(errors.SizeExceeded):
            morphisms.compute_aut_bruteforce(catalog.get_group('A4'))

    def test_budget(self):
        """AMG: compute_aut honors its node budget."""
        with self.assertRaises(errors.BudgetExceeded):
            morphisms.compute_aut(catalog.get_group('D12'), node_budget=1)
        with self.assertRaises(errors.InputValidationError):
            morphisms.compute_aut(catalog.get_group('D12'), node_budget=0)


class EmbeddingTests(unittest.TestCase):
    """Tests for injections, isomorphisms and restriction images."""

    def setUp(self):
        """Build D8 and the Klein four group."""
        self.d8 = catalog.get_group('D8')
        self.klein = catalog.named_subgroup('D8', 'klein', group=self.d8)
        self.v4 = catalog.klein_group()

    def test_enumerate_injections(self):
        """AMG: Inj(C2 x C2, D8) has twelve elements on two images."""
        injections = morphisms.enumerate_injections(self.v4, self.d8)
        self.assertEqual(len(injections), 12)
        self.assertEqual(
            sorted(set(tuple(injection.image()) for injection in injections)),
            [(0, 1, 4, 5), (0, 2, 5, 7)])
        self.assertEqual(
            [injection.key for injection in injections],
            sorted(injection.key for injection in injections))

    def test_no_injection(self):
        """AMG: C3 does not embed in D8."""
        self.assertEqual(
            morphisms.enumerate_injections(catalog.cyclic_group(3), self.d8),
            [])

    def test_enumerate_homomorphisms(self):
        """AMG: there are four homomorphisms C4 -> C2 x C2."""
        homs = morphisms.enumerate_homomorphisms(
            catalog.cyclic_group(4), self.v4)
        self.assertEqual(len(homs), 4)
        fixed = morphisms.enumerate_homomorphisms(
            catalog.cyclic_group(4), self.v4, fixed={1: 0})
        self.assertEqual([hom.map.tolist() for hom in fixed], [[0, 0, 0, 0]])

    def test_find_isomorphism(self):
        """AMG: GL2(F2) is isomorphic to S3 but not to C6."""
        gl_group = catalog.get_group('GL2(F2)')
        iso = morphisms.find_isomorphism(catalog.get_group('S3'), gl_group)
        self.assertIsNotNone(iso)
        amalgenus.testing.assert_homomorphism(iso)
        self.assertIsNone(
            morphisms.find_isomorphism(catalog.get_group('C6'), gl_group))
        self.assertIsNone(
            morphisms.find_isomorphism(
                catalog.get_group('D8'), catalog.get_group('Q8')))

    def test_subgroup_preserving_iso(self):
        """AMG: an outer automorphism of D8 swaps the Klein subgroups."""
        klein2 = catalog.named_subgroup('D8', 'klein2', group=self.d8)
        gamma = morphisms.find_subgroup_preserving_iso(
            self.d8, self.klein, self.d8, klein2)
        self.assertIsNotNone(gamma)
        self.assertEqual(gamma.image(self.klein.elements), [0, 2, 5, 7])
        c4 = catalog.named_subgroup('D8', 'c4', group=self.d8)
        self.assertIsNone(morphisms.find_subgroup_preserving_iso(
            self.d8, self.klein, self.d8, c4))

    def test_extend_to_automorphism(self):
        """AMG: partial maps extend only when they respect orders."""
        extended = morphisms.extend_to_automorphism(self.d8, {3: 6})
        self.assertIsNotNone(extended)
        self.assertEqual(extended(3), 6)
        self.assertEqual(extended.kind, 'automorphism')
        self.assertIsNone(morphisms.extend_to_automorphism(self.d8, {3: 4}))

    def test_extend_to_isomorphism(self):
        """AMG: isomorphisms extend partial maps between equal profiles."""
        extended = morphisms.extend_to_isomorphism(self.d8, self.d8, {3: 6})
        self.assertIsNotNone(extended)
        self.assertEqual(extended(3), 6)
        self.assertIsNone(
            morphisms.extend_to_isomorphism(self.d8, self.d8, {3: 4}))
        self.assertIsNone(morphisms.extend_to_isomorphism(
            catalog.get_group('C4'), catalog.get_group('V4'), {}))

    def test_canonical_embedding(self):
        """AMG: the canonical embedding onto klein is the inclusion."""
        induced = groups.subgroup_as_group(self.klein)
        embedding = morphisms.canonical_subgroup_embedding(
            induced.group, self.d8, self.klein)
        self.assertEqual(embedding.map.tolist(), [0, 1, 4, 5])
        c4 = catalog.named_subgroup('D8', 'c4', group=self.d8)
        with self.assertRaises(errors.NotIsomorphicSubgroups):
            morphisms.canonical_subgroup_embedding(
                induced.group, self.d8, c4)
        with self.assertRaises(errors.NotIsomorphicSubgroups):
            morphisms.canonical_subgroup_embedding(
                induced.group, self.d8, groups.center(self.d8))

    def test_restriction_image_klein(self):
        """AMG: Aut_D8(klein) restricts to an order two subgroup of S3."""
        induced = groups.subgroup_as_group(self.klein)
        out_h = morphisms.out_quotient(morphisms.compute_aut(induced.group))
        image = morphisms.restriction_image(
            self.d8, self.klein, morphisms.compute_aut(self.d8), out_h)
        self.assertEqual(len(image.aut_stab), 4)
        self.assertEqual(len(image.bar_image), 2)
        self.assertEqual(len(image.tilde_image), 2)
        self.assertEqual(image.tilde_normalizer, image.tilde_image)
        self.assertTrue(
            image.bar_normalizer.issubset(image.bar_image.elements))

    def test_restriction_image_c4(self):
        """AMG: conjugation by a reflection inverts C4."""
        c4 = catalog.named_subgroup('D8', 'c4', group=self.d8)
        induced = groups.subgroup_as_group(c4)
        out_h = morphisms.out_quotient(morphisms.compute_aut(induced.group))
        image = morphisms.restriction_image(
            self.d8, c4, morphisms.compute_aut(self.d8), out_h)
        self.assertEqual(len(image.aut_stab), 8)
        self.assertEqual(len(image.tilde_image), 2)
        self.assertEqual(len(image.tilde_normalizer), 2)

    def test_restriction_normalizer_is_normal(self):
        """AMG: N bar is normal in A bar for every catalog subgroup."""
        for name, group in catalog.catalog_groups():
            aut_group = morphisms.compute_aut(group)
            for subgroup in groups.enumerate_subgroups(group):
                induced = groups.subgroup_as_group(subgroup)
                out_h = morphisms.out_quotient(
                    morphisms.compute_aut(induced.group))
                image = morphisms.restriction_image(
                    group, subgroup, aut_group, out_h)
                ambient = out_h.aut.group
                self.assertTrue(
                    image.bar_image.issubset(groups.normalizer(
                        ambient, image.bar_normalizer).elements),
                    msg='%s: %s' % (name, subgroup))
                self.assertTrue(
                    out_h.aut.inn.issubset(image.bar_normalizer.elements))

    def test_restriction_invariant_failure(self):
        """AMG: a restriction image failing normality is an internal error."""
        c4 = catalog.named_subgroup('D8', 'c4', group=self.d8)
        induced = groups.subgroup_as_group(c4)
        out_h = morphisms.out_quotient(morphisms.compute_aut(induced.group))
        normalizer = groups.normalizer

        def broken_normalizer(group, subgroup):
            if group == out_h.aut.group:
                return groups.trivial_subgroup(group)
            return normalizer(group, subgroup)

        with mock.patch.object(
                morphisms.groups, 'normalizer', new=broken_normalizer):
            with self.assertRaises(errors.InternalInvariantError):
                morphisms.restriction_image(
                    self.d8, c4, morphisms.compute_aut(self.d8), out_h)

    def test_injections_stable_under_automorphisms(self):
        """AMG: Aut(G) and Aut(H) permute Inj(H, G)."""
        pairs = [('C2', 'D8'), ('C4', 'Q8'), ('V4', 'D8'), ('V4', 'A4'),
                 ('C2', 'S3'), ('S3', 'D12'), ('C4', 'C2xC4')]
        for h_name, g_name in pairs:
            h_group = catalog.get_group(h_name)
            group = catalog.get_group(g_name)
            injections = morphisms.enumerate_injections(h_group, group)
            self.assertTrue(injections, msg='%s -> %s' % (h_name, g_name))
            keys = set(injection.key for injection in injections)
            aut_g = morphisms.compute_aut(group)
            aut_h = morphisms.compute_aut(h_group)
            for generator in aut_g.generators():
                alpha = aut_g.morphism(generator)
                self.assertEqual(
                    set(alpha.compose(injection).key
                        for injection in injections), keys)
            for generator in aut_h.generators():
                beta = aut_h.morphism(generator)
                self.assertEqual(
                    set(injection.compose(beta).key
                        for injection in injections), keys)

    def test_restriction_wrong_aut(self):
        """AMG: the automorphism group must belong to the ambient group."""
        induced = groups.subgroup_as_group(self.klein)
        out_h = morphisms.out_quotient(morphisms.compute_aut(induced.group))
        with self.assertRaises(errors.SubgroupNotInParent):
            morphisms.restriction_image(
                self.d8, self.klein,
                morphisms.compute_aut(catalog.get_group('Q8')), out_h)
