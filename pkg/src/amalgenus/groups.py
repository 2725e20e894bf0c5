# coding=UTF-8
"""Finite groups as dense multiplication tables, with subgroup utilities."""
import collections
import logging
import time

import numpy
import sympy.combinatorics

from . import errors

LOGGER = logging.getLogger(__name__)

MAX_GROUP_ORDER = 512
FULL_ASSOCIATIVITY_LIMIT = 128
MAX_SUBGROUPS = 20000
_LOGGING_PERIOD = 5.0  # min 5.0 seconds per progress log message

InducedGroup = collections.namedtuple('InducedGroup', 'group embedding')


class FiniteGroup(object):
    """A finite group on the element indices ``0..order-1``.

    Instances are immutable: the multiplication table and inverse table are
    read-only numpy arrays.  Build instances with ``validate_group`` or
    ``group_from_permutations``; the constructor trusts its arguments.

    Attributes:
        order (int): number of elements.
        table (numpy.ndarray): ``order x order`` table, ``table[x, y]`` is
            the index of ``x*y``.
        identity (int): index of the identity element.
        inverse (numpy.ndarray): ``inverse[x]`` is the index of ``x**-1``.
        label (string or None): human readable name.
        perm_gens (tuple or None): permutation generators the group was
            built from, as array forms.
        perm_elements (tuple or None): array form of every element when the
            group was built from permutations, in element index order.

    """

    def __init__(
            self, table, identity, inverse, label=None, perm_gens=None,
            perm_elements=None):
        table = numpy.array(table, dtype=numpy.int64)
        table.setflags(write=False)
        inverse = numpy.array(inverse, dtype=numpy.int64)
        inverse.setflags(write=False)
        self.table = table
        self.order = int(table.shape[0])
        self.identity = int(identity)
        self.inverse = inverse
        self.label = label
        self.perm_gens = (
            None if perm_gens is None else
            tuple(tuple(int(x) for x in gen) for gen in perm_gens))
        self.perm_elements = (
            None if perm_elements is None else
            tuple(tuple(int(x) for x in perm) for perm in perm_elements))
        self._rows = None
        self._orders = None
        self._hash = None

    @property
    def rows(self):
        """The multiplication table as nested python lists."""
        if self._rows is None:
            self._rows = self.table.tolist()
        return self._rows

    def mul(self, x_index, y_index):
        """Return the index of ``x*y``."""
        return self.rows[x_index][y_index]

    def inv(self, x_index):
        """Return the index of ``x**-1``."""
        return int(self.inverse[x_index])

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return (
            self.order == other.order and self.identity == other.identity
            and numpy.array_equal(self.table, other.table))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.table.tobytes()))
        return self._hash

    def __repr__(self):
        return 'FiniteGroup(label=%r, order=%d)' % (self.label, self.order)


class Subgroup(object):
    """A subgroup of a ``FiniteGroup`` given by its sorted element indices.

    Parameters:
        parent (FiniteGroup): the ambient group.
        elements (iterable): element indices of the subgroup.
        check (bool): if True, verify the elements are in range, contain the
            identity and are closed under multiplication and inverses.

    Raises:
        NotASubgroup: when ``check`` is True and the elements do not form a
            subgroup of ``parent``.

    """

    def __init__(self, parent, elements, check=True):
        self.parent = parent
        self.elements = tuple(sorted(set(int(x) for x in elements)))
        self._mask = None
        self._members = None
        if check:
            _check_subgroup(parent, self.elements)

    @property
    def order(self):
        """Number of elements of the subgroup."""
        return len(self.elements)

    @property
    def key(self):
        """Canonical ordering key: size, then the sorted element list."""
        return (len(self.elements), self.elements)

    @property
    def mask(self):
        """Boolean numpy membership mask over the parent's elements."""
        if self._mask is None:
            mask = numpy.zeros(self.parent.order, dtype=bool)
            mask[list(self.elements)] = True
            mask.setflags(write=False)
            self._mask = mask
        return self._mask

    @property
    def members(self):
        """The element indices as a numpy array."""
        if self._members is None:
            members = numpy.array(self.elements, dtype=numpy.int64)
            members.setflags(write=False)
            self._members = members
        return self._members

    def issubset(self, other):
        """Return True if every element of this subgroup is in ``other``."""
        return set(self.elements).issubset(other)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x_index):
        return 0 <= x_index < self.parent.order and bool(self.mask[x_index])

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return (
            self.elements == other.elements and
            (self.parent is other.parent or self.parent == other.parent))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return 'Subgroup(order=%d, elements=%s)' % (
            len(self.elements), list(self.elements))


class SubgroupList(object):
    """Deduplicated subgroups of one group, sorted by ``Subgroup.key``."""

    def __init__(self, parent, subgroups):
        self.parent = parent
        unique = {}
        for subgroup in subgroups:
            unique[subgroup.elements] = subgroup
        self.subgroups = tuple(
            sorted(unique.values(), key=lambda subgroup: subgroup.key))
        self._index = dict(
            (subgroup.elements, index)
            for index, subgroup in enumerate(self.subgroups))

    def index(self, subgroup):
        """Return the position of ``subgroup`` in the list."""
        try:
            return self._index[tuple(sorted(subgroup))]
        except KeyError:
            raise ValueError('%s is not in the subgroup list' % (subgroup,))

    def of_order(self, order):
        """Return the subgroups of the given order."""
        return [
            subgroup for subgroup in self.subgroups if len(subgroup) == order]

    def __contains__(self, subgroup):
        return tuple(sorted(subgroup)) in self._index

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, index):
        return self.subgroups[index]


def validate_group(table, label=None, max_order=MAX_GROUP_ORDER):
    """Verify a raw multiplication table and build a ``FiniteGroup``.

    The identity and inverse table are derived from ``table``; nothing but
    the table is trusted.

    Parameters:
        table (list or numpy.ndarray): square table of 0-based element
            indices, ``table[x][y]`` is the index of ``x*y``.
        label (string): optional name for the group.
        max_order (int): largest order accepted.

    Returns:
        FiniteGroup

    Raises:
        NotLatinSquare: if the table is not square or a row or column is not
            a permutation of ``0..n-1``.
        SizeExceeded: if the table has more than ``max_order`` rows.
        NoIdentity: if no two-sided identity exists.
        NonAssociative: if the operation is not associative.

    """
    try:
        table = numpy.array(table, dtype=numpy.int64)
    except (TypeError, ValueError):
        raise errors.NotLatinSquare(
            "Expected a square table of integers, got %r" % (table,))
    if table.ndim != 2 or table.shape[0] != table.shape[1] or (
            table.shape[0] == 0):
        raise errors.NotLatinSquare(
            "Expected a non-empty square table, got shape %s" % (
                table.shape,))
    order = table.shape[0]
    if order > max_order:
        raise errors.SizeExceeded(
            "Table of order %d exceeds the configured bound %d" % (
                order, max_order))
    if table.min() < 0 or table.max() >= order:
        raise errors.NotLatinSquare(
            "Table entries must lie in 0..%d" % (order - 1))

    everything = numpy.arange(order)
    bad_rows = numpy.flatnonzero(
        (numpy.sort(table, axis=1) != everything).any(axis=1))
    if bad_rows.size:
        raise errors.NotLatinSquare(
            "Row %d of the table is not a permutation" % bad_rows[0])
    bad_columns = numpy.flatnonzero(
        (numpy.sort(table, axis=0) != everything[:, None]).any(axis=0))
    if bad_columns.size:
        raise errors.NotLatinSquare(
            "Column %d of the table is not a permutation" % bad_columns[0])

    identity_candidates = numpy.flatnonzero(
        (table == everything).all(axis=1) &
        (table.T == everything).all(axis=1))
    if not identity_candidates.size:
        raise errors.NoIdentity("The table has no two-sided identity")
    identity = int(identity_candidates[0])

    _check_associative(table, identity)

    inverse = numpy.argmax(table == identity, axis=1)
    if (table[inverse, everything] != identity).any():
        raise errors.NonAssociative("Left and right inverses differ")
    LOGGER.debug("validated group %s of order %d", label, order)
    return FiniteGroup(table, identity, inverse, label=label)


def group_from_permutations(
        generators, degree=None, label=None, max_order=MAX_GROUP_ORDER):
    """Close a list of permutations into a ``FiniteGroup``.

    Elements are ordered lexicographically by array form, so the identity
    permutation always gets index 0.  The product ``x*y`` is the composition
    "apply ``y`` first, then ``x``".

    Parameters:
        generators (list): permutations of ``0..degree-1`` as array forms
            (``perm[i]`` is the image of ``i``).
        degree (int): number of points; defaults to the length of the first
            generator, or 1 when there are no generators.
        label (string): optional name for the group.
        max_order (int): largest group order accepted.

    Returns:
        FiniteGroup with ``perm_gens`` and ``perm_elements`` populated.

    Raises:
        NotBijective: if a generator is not a permutation of the points.
        SizeExceeded: if the closure has more than ``max_order`` elements.

    """
    generators = [tuple(int(x) for x in gen) for gen in generators]
    if degree is None:
        degree = len(generators[0]) if generators else 1
    for gen in generators:
        if len(gen) != degree or sorted(gen) != list(range(degree)):
            raise errors.NotBijective(
                "Generator %s is not a permutation of 0..%d" % (
                    list(gen), degree - 1))
    if not generators:
        return FiniteGroup(
            [[0]], 0, [0], label=label, perm_gens=(),
            perm_elements=(tuple(range(degree)),))

    perm_group = sympy.combinatorics.PermutationGroup(
        [sympy.combinatorics.Permutation(list(gen), size=degree)
         for gen in generators])
    order = int(perm_group.order())
    if order > max_order:
        raise errors.SizeExceeded(
            "Permutation group of order %d exceeds the configured bound %d"
            % (order, max_order))
    elements = numpy.array(
        sorted(set(
            tuple(perm.array_form) for perm in perm_group.generate())),
        dtype=numpy.int64)

    composed = elements[:, elements].reshape(-1, degree)
    closure, flat_table = numpy.unique(
        composed, axis=0, return_inverse=True)
    if closure.shape != elements.shape or (closure != elements).any():
        raise errors.InternalInvariantError(
            "Permutation closure is not closed under composition")
    table = numpy.asarray(flat_table).reshape(order, order)
    inverse = numpy.argmax(table == 0, axis=1)
    LOGGER.debug(
        "built permutation group %s of order %d on %d points",
        label, order, degree)
    return FiniteGroup(
        table, 0, inverse, label=label, perm_gens=generators,
        perm_elements=elements.tolist())


def opposite_group(group, label=None):
    """Return the opposite group, where ``x*y`` is computed as ``y*x``."""
    return FiniteGroup(
        group.table.T, group.identity, group.inverse,
        label=label if label is not None else '%s^op' % group.label,
        perm_elements=group.perm_elements)


def element_index(group, perm):
    """Return the element index of a permutation in a permutation group.

    Raises:
        ValueError: if the group was not built from permutations or does not
            contain ``perm``.

    """
    if group.perm_elements is None:
        raise ValueError("%r was not built from permutations" % (group,))
    try:
        return group.perm_elements.index(tuple(int(x) for x in perm))
    except ValueError:
        raise ValueError("%s is not an element of %r" % (list(perm), group))


def element_orders(group):
    """Return a read-only array with the order of every element."""
    if group._orders is None:
        orders = numpy.zeros(group.order, dtype=numpy.int64)
        everything = numpy.arange(group.order)
        power = everything.copy()
        for exponent in range(1, group.order + 1):
            orders[(power == group.identity) & (orders == 0)] = exponent
            if orders.all():
                break
            power = group.table[power, everything]
        orders.setflags(write=False)
        group._orders = orders
    return group._orders


def is_abelian(group):
    """Return True if the multiplication table is symmetric."""
    return bool((group.table == group.table.T).all())


def whole_group(group):
    """Return ``group`` as a subgroup of itself."""
    return Subgroup(group, range(group.order), check=False)


def trivial_subgroup(group):
    """Return the identity subgroup."""
    return Subgroup(group, [group.identity], check=False)


def subgroup_generated(group, seed):
    """Return the smallest subgroup containing ``seed``.

    Parameters:
        group (FiniteGroup): ambient group.
        seed (iterable): element indices.

    Returns:
        Subgroup

    Raises:
        InputValidationError: if an index of ``seed`` is out of range.

    """
    seed = sorted(set(int(x) for x in seed))
    for x_index in seed:
        if x_index < 0 or x_index >= group.order:
            raise errors.InputValidationError(
                "Seed element %d is not an element of %r" % (x_index, group))
    reached = numpy.zeros(group.order, dtype=bool)
    reached[group.identity] = True
    reached[seed] = True
    generators = numpy.array(seed, dtype=numpy.int64)
    frontier = numpy.flatnonzero(reached)
    while frontier.size and generators.size:
        products = numpy.unique(group.table[numpy.ix_(frontier, generators)])
        frontier = products[~reached[products]]
        reached[frontier] = True
    return Subgroup(group, numpy.flatnonzero(reached), check=False)


def generating_set(group, within=None, start=()):
    """Greedily pick a small generating set, maximal element orders first.

    Parameters:
        group (FiniteGroup): ambient group.
        within (Subgroup): if given, generate this subgroup instead of the
            whole group.
        start (iterable): elements that must open the generating set; the
            greedy choice only adds elements outside their closure.

    Returns:
        tuple of element indices.

    """
    target = within.elements if within is not None else range(group.order)
    orders = element_orders(group)
    candidates = sorted(target, key=lambda x: (-orders[x], x))
    generators = [int(x) for x in start]
    span = subgroup_generated(group, generators)
    for x_index in candidates:
        if len(span) == len(target):
            break
        if x_index in span:
            continue
        generators.append(int(x_index))
        span = subgroup_generated(group, generators)
    return tuple(generators)


def subgroup_as_group(subgroup, label=None):
    """Build the induced ``FiniteGroup`` of a subgroup.

    Element ``i`` of the induced group is ``subgroup.elements[i]``.

    Returns:
        InducedGroup namedtuple ``(group, embedding)`` where ``embedding`` is
        the numpy array of parent indices.

    """
    parent = subgroup.parent
    members = subgroup.members
    position = numpy.full(parent.order, -1, dtype=numpy.int64)
    position[members] = numpy.arange(len(members))
    table = position[parent.table[numpy.ix_(members, members)]]
    perm_elements = None
    if parent.perm_elements is not None:
        perm_elements = [parent.perm_elements[x] for x in subgroup.elements]
    induced = FiniteGroup(
        table, position[parent.identity], position[parent.inverse[members]],
        label=label if label is not None else '%s<%d>' % (
            parent.label, len(members)),
        perm_elements=perm_elements)
    return InducedGroup(induced, members)


def conjugate_subgroup(group, subgroup, g_index):
    """Return ``g H g**-1``."""
    _check_parent(group, subgroup)
    conjugates = group.table[
        group.table[g_index, subgroup.members], group.inverse[g_index]]
    return Subgroup(group, conjugates, check=False)


def is_normal(group, subgroup):
    """Return True if ``subgroup`` is normal in ``group``."""
    return len(normalizer(group, subgroup)) == group.order


def normalizer(group, subgroup):
    """Return ``N_G(H) = {g in G : g H g**-1 = H}``.

    Raises:
        SubgroupNotInParent: if ``subgroup`` does not belong to ``group``.

    """
    _check_parent(group, subgroup)
    left = group.table[:, subgroup.members]
    conjugates = group.table[left, group.inverse[:, None]]
    keep = subgroup.mask[conjugates].all(axis=1)
    return Subgroup(group, numpy.flatnonzero(keep), check=False)


def centralizer(group, subgroup):
    """Return ``C_G(H)``, the elements commuting with all of ``H``.

    Raises:
        SubgroupNotInParent: if ``subgroup`` does not belong to ``group``.

    """
    _check_parent(group, subgroup)
    members = subgroup.members
    keep = (group.table[:, members] == group.table[members, :].T).all(axis=1)
    return Subgroup(group, numpy.flatnonzero(keep), check=False)


def center(group):
    """Return ``Z(G)``."""
    return centralizer(group, whole_group(group))


def is_direct_factor(ambient, subgroup):
    """Decide whether ``subgroup`` is a direct factor of ``ambient``.

    A complement ``C`` must satisfy ``C & H = {e}``, ``C`` centralizes ``H``
    and ``|C| |H| = |K|``.

    Parameters:
        ambient (Subgroup): the group ``K``.
        subgroup (Subgroup): the group ``H``, contained in ``K``.

    Returns:
        ``(True, C)`` with a witness complement, or ``(False, None)``.

    Raises:
        SubgroupNotInParent: if the subgroups live in different groups.
        InputValidationError: if ``H`` is not contained in ``K``.

    """
    group = ambient.parent
    _check_parent(group, subgroup)
    if not subgroup.issubset(ambient):
        raise errors.InputValidationError(
            "%s is not contained in %s" % (subgroup, ambient))
    if len(subgroup) == len(ambient):
        return True, trivial_subgroup(group)
    if len(subgroup) == 1:
        return True, ambient
    if len(ambient) % len(subgroup):
        return False, None
    # direct factors are normal in K and the complement lives in C_K(H)
    ambient_group = subgroup_as_group(ambient)
    position = dict((x, i) for i, x in enumerate(ambient.elements))
    local_subgroup = Subgroup(
        ambient_group.group, [position[x] for x in subgroup], check=False)
    if not is_normal(ambient_group.group, local_subgroup):
        return False, None
    commuting = set(centralizer(group, subgroup).elements).intersection(
        ambient.elements)
    target_order = len(ambient) // len(subgroup)
    commuting_subgroup = Subgroup(group, commuting, check=False)
    for candidate in enumerate_subgroups(group, within=commuting_subgroup):
        if len(candidate) != target_order:
            continue
        if set(candidate.elements).intersection(subgroup.elements) == set(
                [group.identity]):
            return True, candidate
    return False, None


def is_retract(group, subgroup, node_budget=None):
    """Decide whether a homomorphism ``G -> H`` restricts to ``id_H``.

    Raises:
        SubgroupNotInParent: if ``subgroup`` does not belong to ``group``.
        BudgetExceeded: if the generator image search runs out of nodes.

    """
    _check_parent(group, subgroup)
    if len(subgroup) in (1, group.order):
        return True
    subgroup_generators = generating_set(group, within=subgroup)
    generators = generating_set(group, start=subgroup_generators)
    orders = element_orders(group)
    candidates = [[x] for x in subgroup_generators]
    for extra in generators[len(subgroup_generators):]:
        candidates.append([
            h for h in subgroup.elements if orders[extra] % orders[h] == 0])
    for _ in search_homomorphisms(
            group, group, generators, candidates, node_budget=node_budget):
        return True
    return False


def enumerate_subgroups(group, within=None, max_subgroups=MAX_SUBGROUPS):
    """List every subgroup of ``group`` (or of ``within``).

    Cyclic subgroups seed the search; joins with cyclic subgroups are closed
    layer by layer until no new subgroup appears.

    Parameters:
        group (FiniteGroup): ambient group.
        within (Subgroup): if given, only subgroups of this subgroup.
        max_subgroups (int): abort threshold for the lattice size.

    Returns:
        SubgroupList

    Raises:
        SizeExceeded: if the group or the lattice is larger than allowed.

    """
    if group.order > MAX_GROUP_ORDER:
        raise errors.SizeExceeded(
            "Group of order %d exceeds the configured bound %d" % (
                group.order, MAX_GROUP_ORDER))
    if within is not None:
        _check_parent(group, within)
        members = within.elements
    else:
        members = range(group.order)

    cyclic = {}
    for x_index in members:
        span = subgroup_generated(group, [x_index])
        cyclic.setdefault(span.elements, (x_index,))
    found = {trivial_subgroup(group).elements: ()}
    found.update(cyclic)
    layer = list(cyclic.items())
    last_time = time.time()
    while layer:
        next_layer = []
        for elements, generators in layer:
            element_set = set(elements)
            for cyclic_elements, cyclic_generator in cyclic.items():
                if element_set.issuperset(cyclic_elements):
                    continue
                join_generators = generators + cyclic_generator
                join = subgroup_generated(group, join_generators)
                if join.elements in found:
                    continue
                found[join.elements] = join_generators
                next_layer.append((join.elements, join_generators))
                if len(found) > max_subgroups:
                    raise errors.SizeExceeded(
                        "More than %d subgroups in %r" % (
                            max_subgroups, group))
            last_time = _invoke_timed_callback(
                last_time, lambda: LOGGER.info(
                    'subgroup enumeration of %s: %d found so far',
                    group.label, len(found)),
                _LOGGING_PERIOD)
        layer = next_layer
    return SubgroupList(
        group, [Subgroup(group, elements, check=False) for elements in found])


def search_homomorphisms(
        source, target, generators, candidates, injective=False,
        node_budget=None):
    """Enumerate homomorphisms by generator images with partial pruning.

    After each generator image is chosen the partial map is extended over
    the subgroup generated so far; an inconsistent extension prunes the
    branch.  Complete maps are yielded as python lists in the lexicographic
    order of the candidate lists.

    Parameters:
        source, target (FiniteGroup): domain and codomain.
        generators (sequence): generators of ``source``.
        candidates (list of lists): allowed images for each generator.
        injective (bool): if True only injective maps are yielded.
        node_budget (int or None): maximum number of search nodes.

    Yields:
        list mapping each source index to a target index.

    Raises:
        BudgetExceeded: if more than ``node_budget`` nodes are visited.

    """
    generators = list(generators)
    source_rows = source.rows
    target_rows = target.rows
    if not generators:
        if source.order == 1:
            yield [target.identity]
        return
    state = {'nodes': 0, 'last_time': time.time()}

    def _descend(depth, images):
        for candidate in candidates[depth]:
            state['nodes'] += 1
            if node_budget is not None and state['nodes'] > node_budget:
                raise errors.BudgetExceeded(
                    "Generator image search from %r to %r exceeded %d nodes"
                    % (source, target, node_budget))
            state['last_time'] = _invoke_timed_callback(
                state['last_time'], lambda: LOGGER.info(
                    'generator image search %s -> %s: %d nodes',
                    source.label, target.label, state['nodes']),
                _LOGGING_PERIOD)
            trial = images + [candidate]
            mapping = _extend_images(
                source_rows, target_rows, source.identity, target.identity,
                generators[:depth + 1], trial)
            if mapping is None:
                continue
            if injective and not _is_injective_where_defined(mapping):
                continue
            if depth + 1 < len(generators):
                for result in _descend(depth + 1, trial):
                    yield result
            elif -1 not in mapping:
                yield mapping

    for result in _descend(0, []):
        yield result


def extend_to_homomorphism(source, target, generators, images):
    """Extend generator images to a homomorphism if one exists.

    Returns:
        list mapping source indices to target indices, or None when the
        images violate a relation or ``generators`` do not generate
        ``source``.

    """
    mapping = _extend_images(
        source.rows, target.rows, source.identity, target.identity,
        list(generators), list(images))
    if mapping is None or -1 in mapping:
        return None
    return mapping


def _extend_images(
        source_rows, target_rows, source_identity, target_identity,
        generators, images):
    """Breadth-first extension over the Cayley graph of ``generators``.

    Returns a list with -1 on elements outside the generated subgroup, or
    None when two paths disagree.
    """
    mapping = [-1] * len(source_rows)
    mapping[source_identity] = target_identity
    queue = collections.deque([source_identity])
    pairs = list(zip(generators, images))
    while queue:
        x_index = queue.popleft()
        source_row = source_rows[x_index]
        target_row = target_rows[mapping[x_index]]
        for generator, image in pairs:
            y_index = source_row[generator]
            value = target_row[image]
            current = mapping[y_index]
            if current < 0:
                mapping[y_index] = value
                queue.append(y_index)
            elif current != value:
                return None
    return mapping


def _is_injective_where_defined(mapping):
    defined = [value for value in mapping if value >= 0]
    return len(defined) == len(set(defined))


def _check_associative(table, identity):
    """Raise NonAssociative unless ``table`` is associative.

    Small tables are checked on every triple; larger ones with Light's test
    on a generating set of the loop.
    """
    order = table.shape[0]
    if order <= FULL_ASSOCIATIVITY_LIMIT:
        left = table[table, :]
        right = table[numpy.arange(order)[:, None, None], table[None, :, :]]
        bad = numpy.argwhere(left != right)
        if bad.size:
            raise errors.NonAssociative(
                "(%d*%d)*%d != %d*(%d*%d)" % tuple(
                    list(bad[0]) + list(bad[0])))
        return
    for generator in _loop_generators(table, identity):
        left = table[table[:, generator], :]
        right = table[:, table[generator, :]]
        bad = numpy.argwhere(left != right)
        if bad.size:
            x_index, y_index = bad[0]
            raise errors.NonAssociative(
                "(%d*%d)*%d != %d*(%d*%d)" % (
                    x_index, generator, y_index, x_index, generator,
                    y_index))


def _loop_generators(table, identity):
    """Elements whose right-multiplication words reach every element."""
    order = table.shape[0]
    reached = numpy.zeros(order, dtype=bool)
    reached[identity] = True
    generators = []
    while not reached.all():
        generators.append(int(numpy.argmin(reached)))
        frontier = numpy.flatnonzero(reached)
        while frontier.size:
            products = numpy.unique(table[numpy.ix_(frontier, generators)])
            frontier = products[~reached[products]]
            reached[frontier] = True
    return generators


def _check_subgroup(group, elements):
    if not elements:
        raise errors.NotASubgroup("A subgroup cannot be empty")
    if elements[0] < 0 or elements[-1] >= group.order:
        raise errors.NotASubgroup(
            "Elements %s are not all indices of %r" % (
                list(elements), group))
    mask = numpy.zeros(group.order, dtype=bool)
    mask[list(elements)] = True
    if not mask[group.identity]:
        raise errors.NotASubgroup(
            "Elements %s do not contain the identity" % list(elements))
    members = numpy.array(elements)
    if not mask[group.table[numpy.ix_(members, members)]].all():
        raise errors.NotASubgroup(
            "Elements %s are not closed under multiplication" % (
                list(elements),))
    if not mask[group.inverse[members]].all():
        raise errors.NotASubgroup(
            "Elements %s are not closed under inverses" % list(elements))


def _check_parent(group, subgroup):
    if subgroup.parent is not group and subgroup.parent != group:
        raise errors.SubgroupNotInParent(
            "%s belongs to %r, not %r" % (subgroup, subgroup.parent, group))


def _invoke_timed_callback(
        reference_time, callback_lambda, callback_period):
    """Invoke callback if a certain amount of time has passed.

    Parameters:
        reference_time (float): time to base `callback_period` length from.
        callback_lambda (lambda): function to invoke if difference between
            current time and `reference_time` has exceeded `callback_period`.
        callback_period (float): time in seconds to pass until
            `callback_lambda` is invoked.

    Returns:
        `reference_time` if `callback_lambda` not invoked, otherwise the time
        when `callback_lambda` was invoked.

    """
    current_time = time.time()
    if current_time - reference_time > callback_period:
        callback_lambda()
        return current_time
    return reference_time
