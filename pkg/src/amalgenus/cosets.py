# coding=UTF-8
"""Double cosets, set products, twisted C2 actions and orbit partitions."""
import collections
import logging

import numpy
import scipy.sparse
import scipy.sparse.csgraph

from . import errors
from . import groups

LOGGER = logging.getLogger(__name__)

C2Orbits = collections.namedtuple('C2Orbits', 'count fixed pairs')
OrbitPartition = collections.namedtuple('OrbitPartition', 'count labels')


class DoubleCosetDecomposition(object):
    """Partition of a carrier set into ``A x B`` double cosets.

    Attributes:
        ambient (FiniteGroup): group containing everything.
        left (Subgroup): the subgroup A acting on the left.
        right (Subgroup): the subgroup B acting on the right.
        carrier (tuple): sorted carrier elements.
        classes (list): ``(representative, members)`` pairs ordered by
            representative, where the representative is the smallest member.
        class_of (numpy.ndarray): class index of every ambient element, -1
            outside the carrier.

    """

    def __init__(self, ambient, left, right, carrier, classes):
        self.ambient = ambient
        self.left = left
        self.right = right
        self.carrier = tuple(carrier)
        self.classes = list(classes)
        class_of = numpy.full(ambient.order, -1, dtype=numpy.int64)
        for index, (_, members) in enumerate(self.classes):
            class_of[list(members)] = index
        class_of.setflags(write=False)
        self.class_of = class_of

    @property
    def count(self):
        """Number of double cosets."""
        return len(self.classes)

    @property
    def representatives(self):
        """Canonical representative of every class."""
        return [representative for representative, _ in self.classes]

    def __repr__(self):
        return 'DoubleCosetDecomposition(%s, |A|=%d, |B|=%d, classes=%d)' % (
            self.ambient.label, len(self.left), len(self.right), self.count)


class TwistedInvolution(object):
    """The coset inversion rule ``A alpha B -> A xi alpha**-1 xi B``.

    Parameters:
        ambient (FiniteGroup): group the rule acts in.
        xi (int): the twist element; the identity gives plain inversion.

    """

    RULES = ('coset_inversion',)

    def __init__(self, ambient, xi=None, rule='coset_inversion'):
        if rule not in TwistedInvolution.RULES:
            raise ValueError("Unknown twisted rule %r" % rule)
        self.ambient = ambient
        self.xi = ambient.identity if xi is None else int(xi)
        self.rule = rule

    def apply(self, x_index):
        """Return ``xi x**-1 xi``."""
        rows = self.ambient.rows
        return rows[rows[self.xi][self.ambient.inv(x_index)]][self.xi]

    def __repr__(self):
        return 'TwistedInvolution(%s, xi=%d)' % (self.ambient.label, self.xi)


def product_set(ambient, *factors):
    """Return the sorted setwise product ``F1 F2 ... Fk``.

    Parameters:
        ambient (FiniteGroup): the group multiplying the factors.
        *factors: Subgroups or iterables of element indices.

    Returns:
        tuple of element indices.

    """
    current = numpy.array([ambient.identity], dtype=numpy.int64)
    for factor in factors:
        elements = _elements(factor)
        if not elements.size:
            return ()
        current = numpy.unique(
            ambient.table[numpy.ix_(current, elements)])
    return tuple(int(x) for x in current)


def subset_inverse(ambient, subset):
    """Return the sorted set ``X**-1``."""
    return tuple(sorted(set(
        int(x) for x in ambient.inverse[_elements(subset)])))


def twisted_inverse(ambient, subset, xi):
    """Return the sorted set ``xi X**-1 xi``."""
    twist = TwistedInvolution(ambient, xi)
    return tuple(sorted(set(twist.apply(x) for x in _elements(subset))))


def double_coset_size(ambient, left, right, alpha):
    """Return ``|A alpha B| = |A| |B| / |B & alpha**-1 A alpha|``."""
    conjugate = ambient.table[
        ambient.table[ambient.inverse[alpha], left.members], alpha]
    meet = set(int(x) for x in conjugate).intersection(right.elements)
    return len(left) * len(right) // len(meet)


def double_cosets(ambient, left, right, carrier=None):
    """Partition ``carrier`` into ``(left, right)`` double cosets.

    Parameters:
        ambient (FiniteGroup): the group, typically Out(H) or Aut(H).
        left (Subgroup): A, acting on the left.
        right (Subgroup): B, acting on the right.
        carrier (iterable): the set S; defaults to the whole group.

    Returns:
        DoubleCosetDecomposition with the minimal element as representative
        of each class.

    Raises:
        SubgroupNotInParent: if A or B does not belong to ``ambient``.
        CarrierNotClosed: if ``A S B != S``.

    """
    groups._check_parent(ambient, left)
    groups._check_parent(ambient, right)
    if carrier is None:
        carrier = range(ambient.order)
    carrier = tuple(sorted(set(int(x) for x in carrier)))
    closure = product_set(ambient, left, carrier, right)
    if closure != carrier:
        raise errors.CarrierNotClosed(
            "Carrier %s is not a union of (A, B) double cosets: A S B = %s"
            % (list(carrier), list(closure)))

    assigned = numpy.zeros(ambient.order, dtype=bool)
    classes = []
    for x_index in carrier:
        if assigned[x_index]:
            continue
        members = numpy.unique(ambient.table[numpy.ix_(
            ambient.table[left.members, x_index], right.members)])
        assigned[members] = True
        classes.append((x_index, tuple(int(x) for x in members)))
    LOGGER.debug(
        "%d double cosets of |A|=%d, |B|=%d in a carrier of %d",
        len(classes), len(left), len(right), len(carrier))
    return DoubleCosetDecomposition(ambient, left, right, carrier, classes)


def c2_orbits(decomposition, twist):
    """Count the orbits of a twisted involution on double cosets.

    Every member of every class is pushed through the rule, so the result
    also certifies that the rule is well defined on classes and squares to
    the identity.

    Parameters:
        decomposition (DoubleCosetDecomposition): the classes acted on.
        twist (TwistedInvolution): the C2 rule.

    Returns:
        C2Orbits namedtuple ``(count, fixed, pairs)`` with the fixed class
        representatives and the swapped representative pairs.

    Raises:
        ActionNotClosed: if the rule leaves the carrier or sends members of
            one class to different classes.
        NotInvolution: if the rule applied twice moves a class.

    """
    class_of = decomposition.class_of
    image_class = []
    for index, (representative, members) in enumerate(
            decomposition.classes):
        targets = set()
        for member in members:
            target = int(class_of[twist.apply(member)])
            if target < 0:
                raise errors.ActionNotClosed(
                    "Twisted image of %d leaves the carrier" % member)
            targets.add(target)
        if len(targets) != 1:
            raise errors.ActionNotClosed(
                "Twisted rule is not well defined on the class of %d" % (
                    representative,))
        image_class.append(targets.pop())

    fixed = []
    pairs = []
    for index, target in enumerate(image_class):
        if image_class[target] != index:
            raise errors.NotInvolution(
                "Twisted rule applied twice moves the class of %d" % (
                    decomposition.classes[index][0],))
        if target == index:
            fixed.append(decomposition.classes[index][0])
        elif index < target:
            pairs.append((
                decomposition.classes[index][0],
                decomposition.classes[target][0]))
    return C2Orbits(len(fixed) + len(pairs), fixed, pairs)


def generic_orbits(size, actors):
    """Orbits of the group generated by ``actors`` on ``range(size)``.

    Parameters:
        size (int): carrier size.
        actors (list): permutations of ``range(size)`` as index arrays.

    Returns:
        OrbitPartition namedtuple ``(count, labels)``; orbits are numbered
        by their smallest member.

    Raises:
        NotBijective: if an actor is not a permutation of the carrier.

    """
    actors = [_check_actor(actor, size) for actor in actors]
    if not actors:
        return OrbitPartition(size, numpy.arange(size))
    rows = numpy.concatenate([numpy.arange(size)] * len(actors))
    columns = numpy.concatenate(actors)
    graph = scipy.sparse.coo_matrix(
        (numpy.ones(rows.size, dtype=numpy.int8), (rows, columns)),
        shape=(size, size)).tocsr()
    count, labels = scipy.sparse.csgraph.connected_components(
        graph, directed=True, connection='weak')
    return OrbitPartition(int(count), _canonical_labels(labels))


def naive_orbits(size, actors):
    """Breadth-first orbit closure; an oracle for ``generic_orbits``."""
    actors = [_check_actor(actor, size).tolist() for actor in actors]
    labels = numpy.full(size, -1, dtype=numpy.int64)
    count = 0
    for start in range(size):
        if labels[start] >= 0:
            continue
        labels[start] = count
        queue = collections.deque([start])
        while queue:
            point = queue.popleft()
            for actor in actors:
                image = actor[point]
                if labels[image] < 0:
                    labels[image] = count
                    queue.append(image)
        count += 1
    return OrbitPartition(count, labels)


def _canonical_labels(labels):
    relabel = {}
    result = numpy.empty(len(labels), dtype=numpy.int64)
    for index, label in enumerate(labels):
        result[index] = relabel.setdefault(label, len(relabel))
    return result


def _check_actor(actor, size):
    actor = numpy.asarray(actor, dtype=numpy.int64)
    if actor.shape != (size,) or not numpy.array_equal(
            numpy.sort(actor), numpy.arange(size)):
        raise errors.NotBijective(
            "Actor is not a permutation of a carrier of size %d" % size)
    return actor


def _elements(subset):
    if isinstance(subset, groups.Subgroup):
        return subset.members
    return numpy.array(sorted(set(int(x) for x in subset)),
                       dtype=numpy.int64)
