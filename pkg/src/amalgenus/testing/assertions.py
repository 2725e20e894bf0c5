# coding=UTF-8
"""Assertions for group, morphism and coset results."""
import json
import logging

import numpy

from .. import cosets
from . import utils

LOGGER = logging.getLogger(__name__)


def assert_subgroup(group, elements):
    """Assert that ``elements`` form a subgroup of ``group``.

    Parameters:
        group (FiniteGroup): the ambient group.
        elements (iterable): element indices.

    Raises:
        AssertionError: if the identity is missing or the set is not closed
            under products and inverses.

    """
    members = numpy.array(sorted(set(int(x) for x in elements)))
    if group.identity not in members:
        raise AssertionError(
            "%s does not contain the identity %d" % (
                members.tolist(), group.identity))
    products = numpy.unique(group.table[numpy.ix_(members, members)])
    if not numpy.array_equal(products, members):
        raise AssertionError(
            "%s is not closed under multiplication" % members.tolist())
    if not numpy.isin(group.inverse[members], members).all():
        raise AssertionError(
            "%s is not closed under inverses" % members.tolist())


def assert_homomorphism(morphism):
    """Assert ``f(x y) = f(x) f(y)`` for every pair of a ``Morphism``."""
    mapping = numpy.asarray(morphism.map)
    left = mapping[morphism.source.table]
    right = morphism.target.table[mapping[:, None], mapping[None, :]]
    if not numpy.array_equal(left, right):
        x_index, y_index = numpy.argwhere(left != right)[0]
        raise AssertionError(
            "%r is not a homomorphism at (%d, %d)" % (
                morphism, x_index, y_index))


def assert_partition(decomposition):
    """Assert that a ``DoubleCosetDecomposition`` partitions its carrier.

    Classes must be disjoint, cover the carrier, each equal ``A x B`` for
    its representative, and the representative must be its least member.

    Raises:
        AssertionError: on the first violated property.

    """
    ambient = decomposition.ambient
    seen = set()
    for representative, members in decomposition.classes:
        if representative != min(members):
            raise AssertionError(
                "Representative %d is not the least of %s" % (
                    representative, list(members)))
        expected = cosets.product_set(
            ambient, decomposition.left, [representative],
            decomposition.right)
        if tuple(members) != expected:
            raise AssertionError(
                "Class of %d is %s, expected %s" % (
                    representative, list(members), list(expected)))
        if seen.intersection(members):
            raise AssertionError(
                "Class of %d overlaps an earlier class" % representative)
        seen.update(members)
    if tuple(sorted(seen)) != tuple(decomposition.carrier):
        raise AssertionError(
            "Classes cover %s, carrier is %s" % (
                sorted(seen), list(decomposition.carrier)))


def assert_c2_laws(decomposition, twist):
    """Assert that a twisted rule is well defined and an involution.

    Every member of every class is sent through the rule and must land in
    the class of its representative's image; applying the rule twice must
    return every element.

    """
    class_of = decomposition.class_of
    for representative, members in decomposition.classes:
        target = class_of[twist.apply(representative)]
        for member in members:
            image = twist.apply(member)
            if class_of[image] != target:
                raise AssertionError(
                    "Rule sends %d and %d of one class to different "
                    "classes" % (representative, member))
            if twist.apply(image) != member:
                raise AssertionError(
                    "Rule applied twice moves %d to %d" % (
                        member, twist.apply(image)))


def assert_md5_equal(path, regression_hash):
    """Assert the MD5sum of a file against a regression MD5sum.

    Raises:
        AssertionError: if the digest of ``path`` differs.

    """
    digested_file = utils.digest_file(path)
    if digested_file != regression_hash:
        raise AssertionError('MD5 hashes differ: %s != %s' % (
            digested_file, regression_hash))


def assert_json_equal(json_1_path, json_2_path):
    """Assert two JSON files hold equal documents.

    Raises:
        AssertionError: if the two JSON objects differ.

    """
    with open(json_1_path) as json_file:
        document_1 = json.load(json_file)
    with open(json_2_path) as json_file:
        document_2 = json.load(json_file)
    if document_1 != document_2:
        raise AssertionError('JSON objects differ: %s\n%s' % (
            document_1, document_2))


def assert_text_equal(text_1_path, text_2_path):
    """Assert that two text files are equal line by line.

    Raises:
        AssertionError: if a line or the number of lines differs.

    """
    with open(text_1_path, 'rb') as text_file:
        lines_1 = text_file.readlines()
    with open(text_2_path, 'rb') as text_file:
        lines_2 = text_file.readlines()
    for index, (a_line, b_line) in enumerate(zip(lines_1, lines_2)):
        if a_line != b_line:
            raise AssertionError(
                'Line %s in %s does not match regression file %s. '
                'Output "%s" Regression "%s"' % (
                    index, text_1_path, text_2_path, a_line, b_line))
    if len(lines_1) != len(lines_2):
        raise AssertionError('%s has %d lines, %s has %d' % (
            text_1_path, len(lines_1), text_2_path, len(lines_2)))
