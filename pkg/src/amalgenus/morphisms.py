# coding=UTF-8
"""Homomorphisms, automorphism groups, Out quotients and restriction images.

Automorphisms are stored as map tables (``map[x]`` is the image of element
``x``) sorted lexicographically, so the identity map always has index 0 and
the canonical representative of an Inn-coset is its smallest index.
Automorphisms compose like group elements: ``a*b`` applies ``b`` first.
"""
import functools
import itertools
import logging

import numpy

from . import errors
from . import groups

LOGGER = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10 ** 7
BRUTEFORCE_LIMIT = 8


class Morphism(object):
    """A map between two finite groups recorded element by element.

    Parameters:
        source (FiniteGroup): domain.
        target (FiniteGroup): codomain.
        mapping (sequence): ``mapping[x]`` is the image of source index x.
        kind (string): one of 'hom', 'injection' or 'automorphism'.
        check (bool): if True verify the homomorphism property on the full
            table and the injectivity/bijectivity required by ``kind``.

    Raises:
        InputValidationError: if ``check`` is set and the map is not a
            homomorphism.
        NotBijective: if ``check`` is set and the map is not injective
            (injection) or not bijective (automorphism).

    """

    KINDS = ('hom', 'injection', 'automorphism')

    def __init__(self, source, target, mapping, kind='hom', check=True):
        if kind not in Morphism.KINDS:
            raise ValueError(
                "Unknown morphism kind %r, expected one of %s" % (
                    kind, Morphism.KINDS))
        mapping = numpy.array(mapping, dtype=numpy.int64)
        mapping.setflags(write=False)
        self.source = source
        self.target = target
        self.map = mapping
        self.kind = kind
        if check:
            check_morphism(self)

    @property
    def key(self):
        """The map table as a tuple, the canonical ordering key."""
        return tuple(int(x) for x in self.map)

    def __call__(self, x_index):
        return int(self.map[x_index])

    def image(self, elements=None):
        """Return the sorted image of ``elements`` (default: everything)."""
        if elements is None:
            return sorted(set(self.map.tolist()))
        return sorted(set(int(self.map[x]) for x in elements))

    def compose(self, other):
        """Return ``self o other``: apply ``other`` first, then ``self``."""
        if other.target != self.source:
            raise errors.IncompatibleShapes(
                "Cannot compose %r after %r" % (self, other))
        kind = 'hom'
        if self.kind != 'hom' and other.kind != 'hom':
            kind = 'injection'
            if other.source == self.target and (
                    self.kind == other.kind == 'automorphism'):
                kind = 'automorphism'
        return Morphism(
            other.source, self.target, self.map[other.map], kind=kind,
            check=False)

    def inverse(self):
        """Return the inverse of a bijective morphism."""
        if self.source.order != self.target.order:
            raise errors.NotBijective("%r is not bijective" % (self,))
        inverse = numpy.empty(self.target.order, dtype=numpy.int64)
        inverse[self.map] = numpy.arange(self.source.order)
        return Morphism(
            self.target, self.source, inverse, kind=self.kind, check=False)

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            numpy.array_equal(self.map, other.map) and
            self.source == other.source and self.target == other.target)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.map.tobytes())

    def __repr__(self):
        return 'Morphism(%s -> %s, %s, map=%s)' % (
            self.source.label, self.target.label, self.kind,
            self.map.tolist())


class AutGroup(object):
    """The automorphism group of ``base`` as a group on automorphism indices.

    Attributes:
        base (FiniteGroup): the group whose automorphisms are listed.
        maps (numpy.ndarray): ``order x |base|`` array of map tables,
            lexicographically sorted.
        group (FiniteGroup): composition table on automorphism indices.
        inn_indices (tuple): indices of the inner automorphisms.
        inn (Subgroup): ``inn_indices`` as a subgroup of ``group``.

    """

    def __init__(self, base, maps):
        maps = numpy.array(
            sorted(set(tuple(int(x) for x in row) for row in maps)),
            dtype=numpy.int64).reshape(-1, base.order)
        maps.setflags(write=False)
        self.base = base
        self.maps = maps
        self.order = maps.shape[0]
        self._lookup = dict(
            (row.tobytes(), index) for index, row in enumerate(maps))

        composed = maps[:, maps].reshape(-1, base.order)
        closure, flat_table = numpy.unique(
            composed, axis=0, return_inverse=True)
        if closure.shape != maps.shape or (closure != maps).any():
            raise errors.InternalInvariantError(
                "Automorphisms of %r are not closed under composition" % (
                    base,))
        table = numpy.asarray(flat_table).reshape(self.order, self.order)
        identity = self.index(numpy.arange(base.order))
        inverse = numpy.argmax(table == identity, axis=1)
        self.group = groups.FiniteGroup(
            table, identity, inverse, label='Aut(%s)' % base.label)
        self.inn_indices = tuple(
            sorted(set(self.indices(_conjugation_maps(base)))))
        self.inn = groups.Subgroup(self.group, self.inn_indices)

    def index(self, mapping):
        """Return the index of an automorphism given by its map table.

        Raises:
            InternalInvariantError: if ``mapping`` is not in the group.

        """
        key = numpy.ascontiguousarray(mapping, dtype=numpy.int64).tobytes()
        try:
            return self._lookup[key]
        except KeyError:
            raise errors.InternalInvariantError(
                "%s is not an automorphism of %r" % (
                    list(mapping), self.base))

    def indices(self, mappings):
        """Return the indices of several map tables given as rows."""
        return [self.index(row) for row in numpy.asarray(mappings)]

    def morphism(self, index):
        """Return automorphism ``index`` as a ``Morphism``."""
        return Morphism(
            self.base, self.base, self.maps[index], kind='automorphism',
            check=False)

    def generators(self):
        """Return a small generating set of automorphism indices."""
        return groups.generating_set(self.group)

    def __len__(self):
        return self.order

    def __repr__(self):
        return 'AutGroup(%s, order=%d, inn=%d)' % (
            self.base.label, self.order, len(self.inn_indices))


class OutQuotient(object):
    """``Aut(H)/Inn(H)`` with canonical coset representatives.

    Attributes:
        aut (AutGroup): the automorphism group.
        coset_reps (tuple): smallest automorphism index of every Inn-coset,
            in increasing order; coset ``i`` has representative
            ``coset_reps[i]``.
        projection (numpy.ndarray): automorphism index to coset index.
        quotient_group (FiniteGroup): multiplication of cosets.

    """

    def __init__(self, aut):
        self.aut = aut
        inn = aut.inn.members
        cosets = aut.group.table[:, inn]
        representatives = cosets.min(axis=1)
        self.coset_reps = tuple(
            int(x) for x in numpy.unique(representatives))
        position = dict(
            (rep, index) for index, rep in enumerate(self.coset_reps))
        projection = numpy.array(
            [position[int(rep)] for rep in representatives],
            dtype=numpy.int64)
        projection.setflags(write=False)
        self.projection = projection
        reps = numpy.array(self.coset_reps, dtype=numpy.int64)
        table = projection[aut.group.table[numpy.ix_(reps, reps)]]
        self.quotient_group = groups.FiniteGroup(
            table, projection[aut.group.identity],
            projection[aut.group.inverse[reps]],
            label='Out(%s)' % aut.base.label)
        self.order = self.quotient_group.order

    def lift(self, coset_index):
        """Return the canonical automorphism index of a coset."""
        return self.coset_reps[coset_index]

    def coset(self, coset_index):
        """Return the automorphism indices of a coset."""
        return [int(x) for x in numpy.flatnonzero(
            self.projection == coset_index)]

    def project(self, aut_indices):
        """Return the subgroup of Out(H) generated by projected indices."""
        return groups.subgroup_generated(
            self.quotient_group,
            [int(self.projection[x]) for x in aut_indices])

    def preimage(self, coset_indices):
        """Return the automorphism indices lying over ``coset_indices``."""
        mask = numpy.isin(self.projection, list(coset_indices))
        return [int(x) for x in numpy.flatnonzero(mask)]

    def __repr__(self):
        return 'OutQuotient(%s, order=%d)' % (self.aut.base.label, self.order)


class RestrictionImage(object):
    """Restrictions of ``Aut_G(H)`` and of ``N_G(H)``-conjugations to H.

    The images live in the automorphism group of an abstract ``H`` (the base
    of ``out_h.aut``), transported through ``embedding``.

    Attributes:
        ambient (FiniteGroup): the group G.
        subgroup (Subgroup): H inside G.
        embedding (Morphism): injection of the abstract H onto ``subgroup``.
        aut_stab (tuple): indices of Aut(G) elements preserving H.
        bar_image (Subgroup): restrictions of ``aut_stab`` in Aut(H).
        tilde_image (Subgroup): image of ``bar_image`` in Out(H).
        bar_normalizer (Subgroup): restrictions of conjugations by
            ``N_G(H)`` in Aut(H).
        tilde_normalizer (Subgroup): image of ``bar_normalizer`` in Out(H).

    """

    def __init__(
            self, ambient, subgroup, embedding, aut_stab, bar_image,
            tilde_image, bar_normalizer, tilde_normalizer):
        self.ambient = ambient
        self.subgroup = subgroup
        self.embedding = embedding
        self.aut_stab = tuple(aut_stab)
        self.bar_image = bar_image
        self.tilde_image = tilde_image
        self.bar_normalizer = bar_normalizer
        self.tilde_normalizer = tilde_normalizer

    def __repr__(self):
        return (
            'RestrictionImage(%s, |H|=%d, |bar|=%d, |tilde|=%d, '
            '|N bar|=%d, |N tilde|=%d)' % (
                self.ambient.label, len(self.subgroup), len(self.bar_image),
                len(self.tilde_image), len(self.bar_normalizer),
                len(self.tilde_normalizer)))


def check_morphism(morphism):
    """Verify the homomorphism property and the injectivity of a kind.

    Raises:
        InputValidationError: if the map has the wrong length, leaves the
            target, or is not a homomorphism.
        NotBijective: if the kind requires injectivity or bijectivity and
            the map does not have it.

    """
    source, target, mapping = morphism.source, morphism.target, morphism.map
    if mapping.shape != (source.order,):
        raise errors.InputValidationError(
            "Map of length %d does not match source order %d" % (
                mapping.size, source.order))
    if mapping.min() < 0 or mapping.max() >= target.order:
        raise errors.InputValidationError(
            "Map %s leaves the target %r" % (mapping.tolist(), target))
    products = target.table[mapping[:, None], mapping[None, :]]
    if (products != mapping[source.table]).any():
        raise errors.InputValidationError(
            "Map %s is not a homomorphism %r -> %r" % (
                mapping.tolist(), source, target))
    if morphism.kind in ('injection', 'automorphism'):
        if numpy.unique(mapping).size != mapping.size:
            raise errors.NotBijective(
                "Map %s is not injective" % mapping.tolist())
    if morphism.kind == 'automorphism':
        if source != target:
            raise errors.NotBijective(
                "An automorphism needs source == target, got %r and %r" % (
                    source, target))


def enumerate_homomorphisms(source, target, fixed=None, node_budget=None):
    """List every homomorphism ``source -> target``.

    Parameters:
        source, target (FiniteGroup): domain and codomain.
        fixed (dict): optional ``{source index: target index}`` values the
            homomorphisms must take.
        node_budget (int): search node budget, default
            ``DEFAULT_NODE_BUDGET``.

    Returns:
        list of Morphism sorted by map table.

    Raises:
        BudgetExceeded: if the search runs out of nodes.

    """
    fixed = dict(fixed or {})
    start = sorted(fixed)
    generators = groups.generating_set(source, start=start)
    source_orders = groups.element_orders(source)
    target_orders = groups.element_orders(target)
    candidates = []
    for generator in generators:
        if generator in fixed:
            candidates.append([fixed[generator]])
        else:
            candidates.append([
                y for y in range(target.order)
                if source_orders[generator] % target_orders[y] == 0])
    result = [
        Morphism(source, target, mapping, kind='hom', check=False)
        for mapping in groups.search_homomorphisms(
            source, target, generators, candidates,
            node_budget=_resolve_budget(node_budget))]
    return sorted(result, key=lambda morphism: morphism.key)


def enumerate_injections(subgroup_group, group, node_budget=None):
    """List every injective homomorphism ``H -> G``, sorted by map table.

    Parameters:
        subgroup_group (FiniteGroup): the group H.
        group (FiniteGroup): the group G.
        node_budget (int): search node budget.

    Returns:
        list of Morphism of kind 'injection'; empty when none exist.

    Raises:
        BudgetExceeded: if the search runs out of nodes.

    """
    if subgroup_group.order > group.order or (
            group.order % subgroup_group.order):
        return []
    generators = groups.generating_set(subgroup_group)
    candidates = _order_matched_candidates(
        subgroup_group, group, generators)
    result = [
        Morphism(subgroup_group, group, mapping, kind='injection',
                 check=False)
        for mapping in groups.search_homomorphisms(
            subgroup_group, group, generators, candidates, injective=True,
            node_budget=_resolve_budget(node_budget))]
    LOGGER.debug(
        "%d injections %s -> %s", len(result), subgroup_group.label,
        group.label)
    return sorted(result, key=lambda morphism: morphism.key)


def compute_aut(group, node_budget=None):
    """Compute ``Aut(G)`` by generator-image search.

    A greedy generating set (maximal element orders first) is mapped to
    elements of the same order; every partial assignment is extended over
    the subgroup generated so far and pruned on a relation conflict or a
    collision.

    Parameters:
        group (FiniteGroup): the group G.
        node_budget (int): search node budget, default
            ``DEFAULT_NODE_BUDGET``.

    Returns:
        AutGroup

    Raises:
        SizeExceeded: if ``group`` is larger than ``groups.MAX_GROUP_ORDER``.
        BudgetExceeded: if the search runs out of nodes.

    """
    return _compute_aut_cached(
        group, group.label, _resolve_budget(node_budget))


@functools.lru_cache(maxsize=128)
def _compute_aut_cached(group, label, node_budget):
    if group.order > groups.MAX_GROUP_ORDER:
        raise errors.SizeExceeded(
            "Group of order %d exceeds the configured bound %d" % (
                group.order, groups.MAX_GROUP_ORDER))
    generators = groups.generating_set(group)
    candidates = _order_matched_candidates(group, group, generators)
    maps = list(groups.search_homomorphisms(
        group, group, generators, candidates, injective=True,
        node_budget=node_budget))
    aut = AutGroup(group, maps)
    LOGGER.debug("computed %r", aut)
    return aut


def compute_aut_bruteforce(group):
    """Compute ``Aut(G)`` by filtering every bijection fixing the identity.

    Only usable for tiny groups; it shares no search code with
    ``compute_aut`` and serves as its oracle.

    Raises:
        SizeExceeded: if ``group`` has more than ``BRUTEFORCE_LIMIT``
            elements.

    """
    if group.order > BRUTEFORCE_LIMIT:
        raise errors.SizeExceeded(
            "Bijection scan refuses order %d (limit %d)" % (
                group.order, BRUTEFORCE_LIMIT))
    others = [x for x in range(group.order) if x != group.identity]
    maps = []
    for images in itertools.permutations(others):
        mapping = numpy.empty(group.order, dtype=numpy.int64)
        mapping[group.identity] = group.identity
        mapping[others] = images
        products = group.table[mapping[:, None], mapping[None, :]]
        if (products == mapping[group.table]).all():
            maps.append(mapping)
    return AutGroup(group, maps)


def out_quotient(aut):
    """Return ``Out(H) = Aut(H)/Inn(H)`` for a computed ``AutGroup``."""
    return OutQuotient(aut)


def canonical_subgroup_embedding(subgroup_group, group, subgroup,
                                 node_budget=None):
    """Return the injection ``H -> G`` onto ``subgroup`` with minimal map.

    Raises:
        NotIsomorphicSubgroups: if ``subgroup`` is not isomorphic to
            ``subgroup_group``.
        BudgetExceeded: if the search runs out of nodes.

    """
    if len(subgroup) != subgroup_group.order:
        raise errors.NotIsomorphicSubgroups(
            "%r and %s have different orders" % (subgroup_group, subgroup))
    generators = groups.generating_set(subgroup_group)
    source_orders = groups.element_orders(subgroup_group)
    target_orders = groups.element_orders(group)
    candidates = [
        [y for y in subgroup.elements
         if target_orders[y] == source_orders[generator]]
        for generator in generators]
    best = None
    for mapping in groups.search_homomorphisms(
            subgroup_group, group, generators, candidates, injective=True,
            node_budget=_resolve_budget(node_budget)):
        if best is None or mapping < best:
            best = mapping
    if best is None:
        raise errors.NotIsomorphicSubgroups(
            "%r is not isomorphic to %s" % (subgroup_group, subgroup))
    return Morphism(subgroup_group, group, best, kind='injection',
                    check=False)


def restriction_image(group, subgroup, aut_group, out_h, embedding=None):
    """Restrict ``Aut_G(H)`` and the ``N_G(H)``-conjugations to ``H``.

    Parameters:
        group (FiniteGroup): ambient G.
        subgroup (Subgroup): H inside G.
        aut_group (AutGroup): ``Aut(G)``.
        out_h (OutQuotient): ``Out`` of the abstract H the images live in.
        embedding (Morphism): injection of the abstract H onto ``subgroup``;
            defaults to the element inclusion when the abstract H is the
            induced group of ``subgroup``, and to the canonical embedding
            otherwise.

    Returns:
        RestrictionImage

    Raises:
        SubgroupNotInParent: if ``subgroup`` does not belong to ``group``.
        InternalInvariantError: if ``Inn(H) <= N bar`` or ``N bar <| A bar``
            fails.

    """
    groups._check_parent(group, subgroup)
    if aut_group.base != group:
        raise errors.SubgroupNotInParent(
            "%r is not the automorphism group of %r" % (aut_group, group))
    h_group = out_h.aut.base
    if embedding is None:
        induced = groups.subgroup_as_group(subgroup)
        if induced.group == h_group:
            embedding = Morphism(
                h_group, group, induced.embedding, kind='injection',
                check=False)
        else:
            embedding = canonical_subgroup_embedding(h_group, group, subgroup)
    elif sorted(embedding.image()) != list(subgroup.elements):
        raise errors.NotEmbeddable(
            "Embedding image %s is not %s" % (embedding.image(), subgroup))

    epsilon = embedding.map
    position = numpy.full(group.order, -1, dtype=numpy.int64)
    position[epsilon] = numpy.arange(h_group.order)

    preserving = subgroup.mask[aut_group.maps[:, subgroup.members]].all(
        axis=1)
    aut_stab = [int(x) for x in numpy.flatnonzero(preserving)]
    restricted = position[aut_group.maps[aut_stab][:, epsilon]]
    bar_image = groups.Subgroup(
        out_h.aut.group, out_h.aut.indices(restricted), check=False)

    normalizer = groups.normalizer(group, subgroup).members
    conjugated = group.table[
        group.table[normalizer[:, None], epsilon[None, :]],
        group.inverse[normalizer][:, None]]
    bar_normalizer = groups.Subgroup(
        out_h.aut.group, out_h.aut.indices(position[conjugated]),
        check=False)

    inn = set(out_h.aut.inn_indices)
    if not (inn.issubset(bar_normalizer.elements) and
            bar_normalizer.issubset(bar_image.elements) and
            bar_image.issubset(groups.normalizer(
                out_h.aut.group, bar_normalizer).elements)):
        raise errors.InternalInvariantError(
            "Inn(H) <= N bar <| A bar fails for %s in %r" % (
                subgroup, group))
    tilde_image = groups.Subgroup(
        out_h.quotient_group,
        set(int(out_h.projection[x]) for x in bar_image), check=False)
    tilde_normalizer = groups.Subgroup(
        out_h.quotient_group,
        set(int(out_h.projection[x]) for x in bar_normalizer), check=False)
    return RestrictionImage(
        group, subgroup, embedding, aut_stab, bar_image, tilde_image,
        bar_normalizer, tilde_normalizer)


def find_isomorphism(group_1, group_2, node_budget=None):
    """Return some isomorphism ``G1 -> G2`` as a Morphism, or None.

    Raises:
        BudgetExceeded: if the search runs out of nodes.

    """
    if not _same_order_profile(group_1, group_2):
        return None
    generators = groups.generating_set(group_1)
    candidates = _order_matched_candidates(group_1, group_2, generators)
    for mapping in groups.search_homomorphisms(
            group_1, group_2, generators, candidates, injective=True,
            node_budget=_resolve_budget(node_budget)):
        return Morphism(group_1, group_2, mapping, kind='injection',
                        check=False)
    return None


def find_subgroup_preserving_iso(
        group_1, subgroup_1, group_2, subgroup_2, node_budget=None):
    """Return an isomorphism ``gamma: G1 -> G2`` with ``gamma(H1) = H2``.

    Generators of H1 open the generating set of G1 and may only map into
    H2, so the H-image condition prunes the search from the first level.

    Returns:
        Morphism or None when no such isomorphism exists.

    Raises:
        SubgroupNotInParent: if a subgroup does not belong to its group.
        BudgetExceeded: if the search runs out of nodes.

    """
    groups._check_parent(group_1, subgroup_1)
    groups._check_parent(group_2, subgroup_2)
    if len(subgroup_1) != len(subgroup_2) or not _same_order_profile(
            group_1, group_2):
        return None
    orders_1 = groups.element_orders(group_1)
    orders_2 = groups.element_orders(group_2)
    if sorted(orders_1[subgroup_1.members]) != sorted(
            orders_2[subgroup_2.members]):
        return None
    h_generators = groups.generating_set(group_1, within=subgroup_1)
    generators = groups.generating_set(group_1, start=h_generators)
    candidates = []
    for depth, generator in enumerate(generators):
        pool = subgroup_2.elements if depth < len(h_generators) else range(
            group_2.order)
        candidates.append(
            [y for y in pool if orders_2[y] == orders_1[generator]])
    for mapping in groups.search_homomorphisms(
            group_1, group_2, generators, candidates, injective=True,
            node_budget=_resolve_budget(node_budget)):
        if sorted(mapping[x] for x in subgroup_1) == list(
                subgroup_2.elements):
            return Morphism(group_1, group_2, mapping, kind='injection',
                            check=False)
    return None


def extend_to_isomorphism(group_1, group_2, partial, node_budget=None):
    """Extend a partial map ``{x: y}`` to an isomorphism ``G1 -> G2``.

    Returns:
        Morphism agreeing with ``partial`` on its whole domain, or None.

    Raises:
        BudgetExceeded: if the search runs out of nodes.

    """
    partial = dict((int(x), int(y)) for x, y in dict(partial).items())
    if not _same_order_profile(group_1, group_2):
        return None
    orders_1 = groups.element_orders(group_1)
    orders_2 = groups.element_orders(group_2)
    if any(orders_1[x] != orders_2[y] for x, y in partial.items()):
        return None
    domain = groups.subgroup_generated(group_1, partial)
    start = groups.generating_set(group_1, within=domain)
    generators = groups.generating_set(group_1, start=start)
    candidates = []
    for generator in generators:
        if generator in partial:
            candidates.append([partial[generator]])
        else:
            candidates.append([
                y for y in range(group_2.order)
                if orders_2[y] == orders_1[generator]])
    for mapping in groups.search_homomorphisms(
            group_1, group_2, generators, candidates, injective=True,
            node_budget=_resolve_budget(node_budget)):
        if all(mapping[x] == y for x, y in partial.items()):
            return Morphism(group_1, group_2, mapping, kind='injection',
                            check=False)
    return None


def extend_to_automorphism(group, partial, node_budget=None):
    """Extend a partial map ``{x: y}`` to an automorphism of ``group``."""
    result = extend_to_isomorphism(group, group, partial, node_budget)
    if result is None:
        return None
    return Morphism(group, group, result.map, kind='automorphism',
                    check=False)


def _conjugation_maps(group):
    """Rows ``tau_g(x) = g x g**-1`` for every g."""
    return group.table[group.table, group.inverse[:, None]]


def _order_matched_candidates(source, target, generators):
    source_orders = groups.element_orders(source)
    target_orders = groups.element_orders(target)
    return [
        [y for y in range(target.order)
         if target_orders[y] == source_orders[generator]]
        for generator in generators]


def _same_order_profile(group_1, group_2):
    return group_1.order == group_2.order and numpy.array_equal(
        numpy.sort(groups.element_orders(group_1)),
        numpy.sort(groups.element_orders(group_2)))


def _resolve_budget(node_budget):
    if node_budget is None:
        return DEFAULT_NODE_BUDGET
    if node_budget <= 0:
        raise errors.InputValidationError(
            "Search budget must be positive, got %s" % node_budget)
    return int(node_budget)
