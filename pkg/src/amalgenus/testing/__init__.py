"""The testing subpackage provides assertions and sample data for tests of
group, coset and genus computations.

Assertions raise ``AssertionError`` on failure, so they can be used from
``unittest`` or plain pytest tests alike::

    import unittest
    import amalgenus
    import amalgenus.testing
    from amalgenus import catalog

    class ExampleTest(unittest.TestCase):
        def test_klein_classes(self):
            group = catalog.get_group('D8')
            klein = catalog.named_subgroup('D8', 'klein', group=group)
            report = amalgenus.count_classes_fixed_subgroups(
                group, klein, group, klein)
            amalgenus.testing.assert_partition(report.decomposition)

Random configurations are drawn from ``sampledata`` with a seeded
``numpy.random.RandomState`` so failures are reproducible.
"""
from .assertions import assert_subgroup, assert_homomorphism, \
    assert_partition, assert_c2_laws, assert_json_equal, assert_text_equal, \
    assert_md5_equal
from .utils import digest_file, digest_file_list, digest_folder
from .sampledata import random_c2_configuration, random_genus_input, \
    abstract_genus_fixtures, write_group_file

__all__ = [
    'abstract_genus_fixtures',
    'assert_c2_laws',
    'assert_homomorphism',
    'assert_json_equal',
    'assert_md5_equal',
    'assert_partition',
    'assert_subgroup',
    'assert_text_equal',
    'digest_file',
    'digest_file_list',
    'digest_folder',
    'random_c2_configuration',
    'random_genus_input',
    'write_group_file',
]
