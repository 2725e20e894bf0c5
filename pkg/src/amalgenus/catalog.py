# coding=UTF-8
"""Built-in example groups and named subgroups.

Groups are rebuilt on every call; they are cheap at these orders and the
element order of each construction is deterministic.
"""
import collections
import logging

import numpy

from . import errors
from . import groups

LOGGER = logging.getLogger(__name__)

MatrixGroup = collections.namedtuple('MatrixGroup', 'group matrices')


def cyclic_group(order):
    """Return ``C_n`` generated by the cycle ``i -> i + 1 mod n``."""
    if order < 1:
        raise errors.InputValidationError(
            "Cyclic group order must be positive, got %d" % order)
    return groups.group_from_permutations(
        [[(i + 1) % order for i in range(order)]], degree=order,
        label='C%d' % order)


def klein_group():
    """Return ``C2 x C2`` as ``{e, (01)(23), (02)(13), (03)(12)}``."""
    return groups.group_from_permutations(
        [[1, 0, 3, 2], [2, 3, 0, 1]], label='V4')


def dihedral_group(n_points):
    """Return the symmetries of an ``n``-gon, of order ``2n``.

    The rotation is ``r = (0 1 ... n-1)`` and the reflection is
    ``c: i -> 2 - i mod n``; for ``n = 4`` this is ``r = [1, 2, 3, 0]`` and
    ``c = [2, 1, 0, 3]``.
    """
    if n_points < 3:
        raise errors.InputValidationError(
            "Dihedral groups need at least 3 points, got %d" % n_points)
    rotation = [(i + 1) % n_points for i in range(n_points)]
    reflection = [(2 - i) % n_points for i in range(n_points)]
    return groups.group_from_permutations(
        [rotation, reflection], label='D%d' % (2 * n_points))


def symmetric_group(n_points):
    """Return ``S_n`` generated by ``(0 1)`` and ``(0 1 ... n-1)``."""
    if n_points < 2:
        return groups.group_from_permutations([], degree=1, label='S1')
    transposition = [1, 0] + list(range(2, n_points))
    cycle = [(i + 1) % n_points for i in range(n_points)]
    return groups.group_from_permutations(
        [transposition, cycle], label='S%d' % n_points)


def alternating_group(n_points):
    """Return ``A_n`` generated by the 3-cycles ``(0 1 k)``."""
    generators = []
    for k in range(2, n_points):
        perm = list(range(n_points))
        perm[0], perm[1], perm[k] = 1, k, 0
        generators.append(perm)
    return groups.group_from_permutations(
        generators, degree=max(n_points, 1), label='A%d' % n_points)


def quaternion_group():
    """Return ``Q8`` as a subgroup of ``SL2(F3)``."""
    return matrix_group(
        [[[0, 1], [2, 0]], [[1, 1], [1, 2]]], 3, label='Q8').group


def dicyclic_group(n):
    """Return the dicyclic group of order ``4n`` for odd ``n``.

    Built as ``C_n x| C_4`` where the generator of ``C_4`` inverts ``C_n``;
    ``n = 2`` gives ``Q8``.
    """
    if n == 2:
        return quaternion_group()
    if n < 3 or n % 2 == 0:
        raise errors.InputValidationError(
            "dicyclic_group supports n = 2 and odd n >= 3, got %d" % n)
    degree = n + 4
    rotation = [(i + 1) % n for i in range(n)] + [n, n + 1, n + 2, n + 3]
    inverter = [(-i) % n for i in range(n)] + [n + 1, n + 2, n + 3, n]
    return groups.group_from_permutations(
        [rotation, inverter], degree=degree, label='Q%d' % (4 * n))


def direct_product(*factors):
    """Return the direct product of permutation groups on disjoint points.

    Raises:
        InputValidationError: if a factor was not built from permutations.

    """
    generators = []
    offset = 0
    degrees = []
    for factor in factors:
        if factor.perm_elements is None:
            raise errors.InputValidationError(
                "%r has no permutation representation" % (factor,))
        degrees.append(len(factor.perm_elements[0]))
    total = sum(degrees)
    for factor, degree in zip(factors, degrees):
        for gen in factor.perm_gens:
            perm = list(range(total))
            perm[offset:offset + degree] = [x + offset for x in gen]
            generators.append(perm)
        offset += degree
    return groups.group_from_permutations(
        generators, degree=total,
        label='x'.join(factor.label for factor in factors))


def matrix_group(generators, modulus, label=None):
    """Close square matrices over ``Z/modulus`` into a ``FiniteGroup``.

    Elements are ordered lexicographically by their flattened entries.

    Returns:
        MatrixGroup namedtuple ``(group, matrices)`` where ``matrices[i]``
        is the matrix of element ``i``.

    Raises:
        SizeExceeded: if the closure has more than
            ``groups.MAX_GROUP_ORDER`` elements.

    """
    generators = [
        numpy.array(gen, dtype=numpy.int64) % modulus for gen in generators]
    size = generators[0].shape[0]
    identity = tuple(int(x) for x in numpy.eye(size, dtype=numpy.int64).ravel())
    found = set([identity])
    frontier = [identity]
    while frontier:
        discovered = []
        for flat in frontier:
            matrix = numpy.array(flat, dtype=numpy.int64).reshape(size, size)
            for gen in generators:
                product = tuple(
                    int(x) for x in (matrix.dot(gen) % modulus).ravel())
                if product not in found:
                    found.add(product)
                    discovered.append(product)
        if len(found) > groups.MAX_GROUP_ORDER:
            raise errors.SizeExceeded(
                "Matrix group %s exceeds %d elements" % (
                    label, groups.MAX_GROUP_ORDER))
        frontier = discovered
    elements = numpy.array(sorted(found), dtype=numpy.int64)
    order = elements.shape[0]
    matrices = elements.reshape(order, size, size)
    products = numpy.einsum('aij,bjk->abik', matrices, matrices) % modulus
    closure, flat_table = numpy.unique(
        products.reshape(-1, size * size), axis=0, return_inverse=True)
    if closure.shape != elements.shape or (closure != elements).any():
        raise errors.InternalInvariantError(
            "Matrix closure of %s is not closed" % label)
    table = numpy.asarray(flat_table).reshape(order, order)
    identity_index = sorted(found).index(identity)
    inverse = numpy.argmax(table == identity_index, axis=1)
    group = groups.FiniteGroup(table, identity_index, inverse, label=label)
    return MatrixGroup(group, matrices)


def general_linear_2_2():
    """Return ``GL2(F2)`` with its matrices."""
    return matrix_group(
        [[[1, 1], [0, 1]], [[0, 1], [1, 0]]], 2, label='GL2(F2)')


def matrix_index(matrix_group_result, matrix):
    """Return the element index of ``matrix`` in a ``MatrixGroup``."""
    target = numpy.array(matrix, dtype=numpy.int64)
    for index, candidate in enumerate(matrix_group_result.matrices):
        if numpy.array_equal(candidate, target):
            return index
    raise ValueError("%s is not in %r" % (target.tolist(),
                                          matrix_group_result.group))


_BUILDERS = collections.OrderedDict([
    ('C2', lambda: cyclic_group(2)),
    ('C3', lambda: cyclic_group(3)),
    ('C4', lambda: cyclic_group(4)),
    ('V4', klein_group),
    ('C6', lambda: cyclic_group(6)),
    ('S3', lambda: symmetric_group(3)),
    ('C8', lambda: cyclic_group(8)),
    ('D8', lambda: dihedral_group(4)),
    ('Q8', quaternion_group),
    ('C2xC4', lambda: direct_product(cyclic_group(2), cyclic_group(4))),
    ('C2xC2xC2', lambda: direct_product(
        cyclic_group(2), cyclic_group(2), cyclic_group(2))),
    ('A4', lambda: alternating_group(4)),
    ('D12', lambda: dihedral_group(6)),
    ('Q12', lambda: dicyclic_group(3)),
    ('C12', lambda: cyclic_group(12)),
    ('C2xC6', lambda: direct_product(cyclic_group(2), cyclic_group(6))),
    ('GL2(F2)', lambda: general_linear_2_2().group),
    ('GL2(F2)^op', lambda: groups.opposite_group(
        general_linear_2_2().group, label='GL2(F2)^op')),
])

# named subgroups: group name -> subgroup name -> generator description
_D8_SUBGROUPS = {
    'klein': [[2, 1, 0, 3], [2, 3, 0, 1]],
    'klein2': [[3, 2, 1, 0], [2, 3, 0, 1]],
    'c4': [[1, 2, 3, 0]],
    'center': [[2, 3, 0, 1]],
}
_UPPER_UNIPOTENT = [[1, 1], [0, 1]]
_LOWER_UNIPOTENT = [[1, 0], [1, 1]]


def group_names():
    """Return the catalog names in catalog order."""
    return list(_BUILDERS)


def get_group(name):
    """Build the catalog group called ``name``.

    Raises:
        InputValidationError: if the name is unknown.

    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise errors.InputValidationError(
            "Unknown catalog group %r, expected one of %s" % (
                name, group_names()))
    group = builder()
    group.label = name
    return group


def catalog_groups(max_order=None, names=None):
    """Return ``(name, group)`` pairs, optionally filtered by order."""
    result = []
    for name in (names if names is not None else group_names()):
        group = get_group(name)
        if max_order is None or group.order <= max_order:
            result.append((name, group))
    return result


def subgroup_names(group_name):
    """Return the named subgroups available for a catalog group."""
    names = ['center', 'trivial']
    if group_name == 'D8':
        names = sorted(_D8_SUBGROUPS) + ['trivial']
    elif group_name in ('GL2(F2)', 'GL2(F2)^op'):
        names = ['borel', 'center', 'trivial']
    return names


def named_subgroup(group_name, subgroup_name, group=None):
    """Return a named subgroup of a catalog group.

    Every group has 'center' and 'trivial'; D8 also has 'klein'
    (``<c, r^2>``), 'klein2' (``<rc, r^2>``) and 'c4' (``<r>``); GL2(F2)
    has the upper triangular 'borel' and its opposite group the lower
    triangular one.

    Parameters:
        group_name (string): catalog name.
        subgroup_name (string): subgroup name.
        group (FiniteGroup): the already built group, to avoid rebuilding.

    Raises:
        InputValidationError: if either name is unknown.

    """
    if group is None:
        group = get_group(group_name)
    if subgroup_name == 'trivial':
        return groups.trivial_subgroup(group)
    if subgroup_name == 'center':
        return groups.center(group)
    if group_name == 'D8' and subgroup_name in _D8_SUBGROUPS:
        return groups.subgroup_generated(group, [
            groups.element_index(group, perm)
            for perm in _D8_SUBGROUPS[subgroup_name]])
    if group_name in ('GL2(F2)', 'GL2(F2)^op') and subgroup_name == 'borel':
        unipotent = (
            _UPPER_UNIPOTENT if group_name == 'GL2(F2)' else
            _LOWER_UNIPOTENT)
        return groups.subgroup_generated(
            group, [matrix_index(general_linear_2_2(), unipotent)])
    raise errors.InputValidationError(
        "Unknown subgroup %r of %r, expected one of %s" % (
            subgroup_name, group_name, subgroup_names(group_name)))
