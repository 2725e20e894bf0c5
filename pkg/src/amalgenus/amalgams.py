# coding=UTF-8
"""Push-outs of finite groups and isomorphism classes of their amalgams.

A push-out ``(lam, mu)`` is a pair of injections ``H -> G1`` and ``H -> G2``
and stands for the amalgamated free product of G1 and G2 along H.  Two
push-outs ``(lam, mu)`` and ``(eta, nu)`` give isomorphic amalgams exactly
when automorphisms ``beta1``, ``beta2`` and ``alpha`` of G1, G2 and H satisfy
``beta1 eta = lam alpha`` and ``beta2 nu = mu alpha``, possibly after
swapping the factors.

Counts are computed two ways: through double cosets in Out(H) (the formula
path) and by orbit enumeration over pairs of injections (the oracle path).
"""
import collections
import itertools
import logging
import multiprocessing
import multiprocessing.pool
import time

import numpy

from . import cosets
from . import errors
from . import groups
from . import morphisms

try:
    import psutil
    HAS_PSUTIL = True
    if psutil.WINDOWS:
        PROCESS_LOW_PRIORITY = psutil.BELOW_NORMAL_PRIORITY_CLASS
    else:
        # -20 is high priority, 0 is normal priority, 19 is low priority.
        PROCESS_LOW_PRIORITY = 10
except ImportError:
    HAS_PSUTIL = False

LOGGER = logging.getLogger(__name__)

DEFAULT_ORACLE_CARRIER = 10 ** 6
_LOGGING_PERIOD = 5.0

PushOutIsomorphism = collections.namedtuple(
    'PushOutIsomorphism', 'beta1 beta2 alpha swapped eta nu')
CrossCheck = collections.namedtuple(
    'CrossCheck', 'agree counts counterexample')


class PushOut(object):
    """Two injections ``lam: H -> G1`` and ``mu: H -> G2``.

    Parameters:
        subgroup_group (FiniteGroup): H.
        group_1, group_2 (FiniteGroup): the factors.
        lam (Morphism): injection ``H -> G1``.
        mu (Morphism): injection ``H -> G2``.
        check (bool): verify the injections and reject fictitious amalgams.

    Raises:
        FictitiousAmalgam: if ``lam(H) = G1`` or ``mu(H) = G2``.
        NotBijective, InputValidationError: if a map is not an injective
            homomorphism.

    """

    def __init__(self, subgroup_group, group_1, group_2, lam, mu, check=True):
        self.H = subgroup_group
        self.G1 = group_1
        self.G2 = group_2
        self.lam = lam
        self.mu = mu
        if check:
            for injection, group in ((lam, group_1), (mu, group_2)):
                if injection.source != subgroup_group or (
                        injection.target != group):
                    raise errors.IncompatibleShapes(
                        "%r does not map %r into %r" % (
                            injection, subgroup_group, group))
                morphisms.check_morphism(morphisms.Morphism(
                    injection.source, injection.target, injection.map,
                    kind='injection', check=False))
            if subgroup_group.order in (group_1.order, group_2.order):
                raise errors.FictitiousAmalgam(
                    "Amalgamated group of order %d is a whole factor" % (
                        subgroup_group.order,))

    def images(self):
        """Return the two image subgroups ``lam(H)`` and ``mu(H)``."""
        return (
            groups.Subgroup(self.G1, self.lam.map, check=False),
            groups.Subgroup(self.G2, self.mu.map, check=False))

    def __repr__(self):
        return 'PushOut(%s <- %s -> %s, lam=%s, mu=%s)' % (
            self.G1.label, self.H.label, self.G2.label,
            self.lam.map.tolist(), self.mu.map.tolist())


class IsoClassReport(object):
    """Number of isomorphism classes of amalgams with representatives.

    Attributes:
        count (int): number of classes.
        representatives (list): one PushOut per class.
        mode (string): 'pushout_family' or 'fixed_subgroups'.
        symmetric (bool): whether the factor swap was taken into account.
        method (string): 'formula' or 'oracle'.
        provenance (string): tag of the computation that produced ``count``.
        decomposition (DoubleCosetDecomposition or None): formula data.
        c2 (C2Orbits or None): the pairing of classes in symmetric mode.
        details (dict): additional counts, e.g. the Aut(H)-level count.
        out_h (OutQuotient or None): the Out(H) the decomposition lives in.

    """

    MODES = ('pushout_family', 'fixed_subgroups')
    METHODS = ('formula', 'oracle')

    def __init__(
            self, count, representatives, mode, symmetric, method,
            provenance, decomposition=None, c2=None, details=None,
            out_h=None):
        if mode not in IsoClassReport.MODES:
            raise ValueError("Unknown report mode %r" % mode)
        if method not in IsoClassReport.METHODS:
            raise ValueError("Unknown report method %r" % method)
        if count != len(representatives):
            raise errors.InternalInvariantError(
                "Count %d disagrees with %d representatives" % (
                    count, len(representatives)))
        self.count = count
        self.representatives = list(representatives)
        self.mode = mode
        self.symmetric = bool(symmetric)
        self.method = method
        self.provenance = provenance
        self.decomposition = decomposition
        self.c2 = c2
        self.details = dict(details or {})
        self.out_h = out_h

    def __repr__(self):
        return 'IsoClassReport(count=%d, mode=%s, method=%s, symmetric=%s)' % (
            self.count, self.mode, self.method, self.symmetric)


def pushout_isomorphic(first, second, allow_swap=False, node_budget=None):
    """Decide whether two push-outs give isomorphic amalgams.

    For every automorphism ``beta1`` of G1 with ``beta1(eta(H)) = lam(H)``
    the automorphism ``alpha = lam**-1 beta1 eta`` of H is forced; the
    push-outs are isomorphic when the partial map ``nu(h) -> mu(alpha(h))``
    extends to an automorphism of G2.  When the factors or amalgamated
    groups of ``second`` are different but isomorphic objects, ``second``
    is first transported onto the groups of ``first``.

    Parameters:
        first (PushOut): push-out ``(lam, mu)``.
        second (PushOut): push-out ``(eta, nu)``.
        allow_swap (bool): also try ``second`` with its factors exchanged.
        node_budget (int): search node budget.

    Returns:
        ``(True, PushOutIsomorphism)`` or ``(False, None)``.  The witness
        lives on the groups of ``first``: ``eta`` and ``nu`` are the
        injections of ``second`` transported onto ``first.H``, ``first.G1``
        and ``first.G2`` (after exchanging its factors when ``swapped``),
        and ``beta1 eta = lam alpha``, ``beta2 nu = mu alpha``.  When
        ``second`` already uses the groups of ``first`` and is not swapped,
        ``eta`` and ``nu`` equal its own injections.

    Raises:
        IncompatibleShapes: if neither orientation of ``second`` has factors
            isomorphic to those of ``first``.
        BudgetExceeded: if an extension search runs out of nodes.

    """
    orientations = []
    direct = _transport(second, first, False, node_budget)
    if direct is not None:
        orientations.append((False, direct))
    if allow_swap:
        swapped = _transport(second, first, True, node_budget)
        if swapped is not None:
            orientations.append((True, swapped))
    if not orientations:
        raise errors.IncompatibleShapes(
            "%r and %r do not have isomorphic factors" % (first, second))

    aut_1 = morphisms.compute_aut(first.G1, node_budget)
    lam_position = numpy.full(first.G1.order, -1, dtype=numpy.int64)
    lam_position[first.lam.map] = numpy.arange(first.H.order)
    lam_mask = lam_position >= 0
    for swapped, (eta, nu) in orientations:
        preserving = numpy.flatnonzero(
            lam_mask[aut_1.maps[:, eta]].all(axis=1))
        tried = set()
        for beta1_index in preserving:
            alpha = lam_position[aut_1.maps[beta1_index][eta]]
            if alpha.tobytes() in tried:
                continue
            tried.add(alpha.tobytes())
            partial = dict(zip(nu.tolist(), first.mu.map[alpha].tolist()))
            beta2 = morphisms.extend_to_automorphism(
                first.G2, partial, node_budget)
            if beta2 is not None:
                return True, PushOutIsomorphism(
                    aut_1.morphism(beta1_index), beta2,
                    morphisms.Morphism(
                        first.H, first.H, alpha, kind='automorphism',
                        check=False),
                    swapped,
                    morphisms.Morphism(
                        first.H, first.G1, eta, kind='injection',
                        check=False),
                    morphisms.Morphism(
                        first.H, first.G2, nu, kind='injection',
                        check=False))
    return False, None


def is_double(pushout, node_budget=None):
    """Decide whether the amalgam is isomorphic to a double.

    That is the case when some isomorphism ``gamma: G1 -> G2`` satisfies
    ``gamma lam = mu``; the amalgam is then the double of G1 along lam(H).

    Returns:
        ``(True, gamma)`` or ``(False, None)``.

    Raises:
        BudgetExceeded: if the extension search runs out of nodes.

    """
    partial = dict(zip(pushout.lam.map.tolist(), pushout.mu.map.tolist()))
    gamma = morphisms.extend_to_isomorphism(
        pushout.G1, pushout.G2, partial, node_budget)
    return gamma is not None, gamma


def subgroup_orbits(group, subgroup_group, aut_group=None, node_budget=None):
    """Aut(G)-orbits of the subgroups of G isomorphic to ``subgroup_group``.

    Returns:
        list of orbits, each a list of Subgroup sorted by key; orbits are
        ordered by their first (representative) subgroup.

    """
    if aut_group is None:
        aut_group = morphisms.compute_aut(group, node_budget)
    injections = morphisms.enumerate_injections(
        subgroup_group, group, node_budget)
    images = sorted(set(
        tuple(injection.image()) for injection in injections),
        key=lambda elements: (len(elements), elements))
    position = dict((elements, index) for index, elements in enumerate(
        images))
    actors = []
    for generator in aut_group.generators():
        row = aut_group.maps[generator]
        actors.append([
            position[tuple(sorted(row[list(elements)].tolist()))]
            for elements in images])
    partition = cosets.generic_orbits(len(images), actors)
    orbits = [[] for _ in range(partition.count)]
    for elements, label in zip(images, partition.labels):
        orbits[label].append(groups.Subgroup(group, elements, check=False))
    return orbits


def count_classes_fixed_subgroups(
        group_1, subgroup_1, group_2, subgroup_2, node_budget=None,
        gamma=None):
    """Count amalgams ``G1 *_{H1 = H2} G2`` through double cosets in Out(H).

    With ``A_i`` the image of ``Aut_{G_i}(H_i)`` in Out(H), the classes are
    ``A_2 \\ Out(H) / A_1``.  When an isomorphism ``gamma: G1 -> G2`` with
    ``gamma(H1) = H2`` exists, classes are further identified by the rule
    ``alpha -> xi alpha**-1 xi`` with ``xi`` the restriction of gamma.  The
    same count is recomputed at the Aut(H) level and must agree.

    Parameters:
        group_1, group_2 (FiniteGroup): the factors.
        subgroup_1, subgroup_2 (Subgroup): the amalgamated subgroups.
        node_budget (int): search node budget.
        gamma (Morphism): an isomorphism ``G1 -> G2`` carrying H1 onto H2
            to use for the swap; found by search when omitted.  Another
            choice changes the representatives, never the count.

    Returns:
        IsoClassReport with mode 'fixed_subgroups' and method 'formula';
        representatives are ``(eps1, eps2 alpha)`` for class
        representatives ``alpha``.

    Raises:
        NotIsomorphicSubgroups: if H1 and H2 are not isomorphic.
        FictitiousAmalgam: if ``H_i = G_i``.
        NotEmbeddable: if a given ``gamma`` does not carry H1 onto H2.
        BudgetExceeded: if a search runs out of nodes.

    """
    data = fixed_subgroup_data(
        group_1, subgroup_1, group_2, subgroup_2, node_budget, gamma)
    out_h = data.out_h
    decomposition = cosets.double_cosets(
        out_h.quotient_group, data.image_2.tilde_image,
        data.image_1.tilde_image)
    aut_decomposition = cosets.double_cosets(
        out_h.aut.group, data.image_2.bar_image, data.image_1.bar_image)

    c2 = None
    if data.gamma is None:
        count = decomposition.count
        aut_count = aut_decomposition.count
        representatives = decomposition.representatives
        provenance = 'iso.fixed.double_cosets'
    else:
        xi = int(out_h.projection[data.xi])
        conjugate = groups.conjugate_subgroup(
            out_h.quotient_group, data.image_1.tilde_image, xi)
        if conjugate != data.image_2.tilde_image:
            raise errors.ActionNotClosed(
                "xi does not conjugate the image of G1 onto that of G2")
        c2 = cosets.c2_orbits(
            decomposition, cosets.TwistedInvolution(
                out_h.quotient_group, xi))
        aut_c2 = cosets.c2_orbits(
            aut_decomposition, cosets.TwistedInvolution(
                out_h.aut.group, data.xi))
        count = c2.count
        aut_count = aut_c2.count
        representatives = sorted(
            c2.fixed + [pair[0] for pair in c2.pairs])
        provenance = 'iso.fixed.double_cosets_c2'
    if count != aut_count:
        raise errors.InternalInvariantError(
            "Out(H)-level count %d disagrees with Aut(H)-level count %d" % (
                count, aut_count))

    pushouts = [
        PushOut(
            data.h_group, group_1, group_2, data.epsilon_1,
            data.epsilon_2.compose(out_h.aut.morphism(out_h.lift(rep))),
            check=False)
        for rep in representatives]
    LOGGER.debug(
        "fixed subgroups %s/%s: %d classes (%s)", group_1.label,
        group_2.label, count, provenance)
    return IsoClassReport(
        count, pushouts, 'fixed_subgroups', data.gamma is not None,
        'formula', provenance, decomposition=decomposition, c2=c2,
        details={'aut_level_count': aut_count}, out_h=out_h)


FixedSubgroupData = collections.namedtuple(
    'FixedSubgroupData',
    'h_group epsilon_1 epsilon_2 aut_h out_h image_1 image_2 gamma xi')


def fixed_subgroup_data(
        group_1, subgroup_1, group_2, subgroup_2, node_budget=None,
        gamma=None):
    """Restriction data shared by the fixed-subgroup count and the genus.

    The abstract H is the induced group of ``subgroup_1``; ``epsilon_1`` is
    the inclusion and ``epsilon_2`` the canonical injection onto
    ``subgroup_2``.  ``xi`` is the Aut(H) index of
    ``epsilon_2**-1 gamma epsilon_1`` when a subgroup preserving ``gamma``
    exists, otherwise None.  A caller supplied ``gamma`` replaces the search.

    Raises:
        SubgroupNotInParent, NotIsomorphicSubgroups, FictitiousAmalgam.
        NotEmbeddable: if a given ``gamma`` does not carry H1 onto H2.

    """
    groups._check_parent(group_1, subgroup_1)
    groups._check_parent(group_2, subgroup_2)
    if len(subgroup_1) == group_1.order or len(subgroup_2) == group_2.order:
        raise errors.FictitiousAmalgam(
            "The amalgamated subgroup is a whole factor")
    induced = groups.subgroup_as_group(
        subgroup_1, label='H<%s>' % group_1.label)
    h_group = induced.group
    epsilon_1 = morphisms.Morphism(
        h_group, group_1, induced.embedding, kind='injection', check=False)
    epsilon_2 = morphisms.canonical_subgroup_embedding(
        h_group, group_2, subgroup_2, node_budget)
    aut_h = morphisms.compute_aut(h_group, node_budget)
    out_h = morphisms.out_quotient(aut_h)
    image_1 = morphisms.restriction_image(
        group_1, subgroup_1, morphisms.compute_aut(group_1, node_budget),
        out_h, epsilon_1)
    image_2 = morphisms.restriction_image(
        group_2, subgroup_2, morphisms.compute_aut(group_2, node_budget),
        out_h, epsilon_2)
    if gamma is None:
        gamma = morphisms.find_subgroup_preserving_iso(
            group_1, subgroup_1, group_2, subgroup_2, node_budget)
    else:
        _check_subgroup_preserving(gamma, group_1, subgroup_1, group_2,
                                   subgroup_2)
    xi = None
    if gamma is not None:
        position = numpy.full(group_2.order, -1, dtype=numpy.int64)
        position[epsilon_2.map] = numpy.arange(h_group.order)
        xi = aut_h.index(position[gamma.map[epsilon_1.map]])
    return FixedSubgroupData(
        h_group, epsilon_1, epsilon_2, aut_h, out_h, image_1, image_2,
        gamma, xi)


def _check_subgroup_preserving(gamma, group_1, subgroup_1, group_2,
                               subgroup_2):
    if gamma.source != group_1 or gamma.target != group_2:
        raise errors.IncompatibleShapes(
            "%r does not map %r onto %r" % (gamma, group_1, group_2))
    morphisms.check_morphism(morphisms.Morphism(
        group_1, group_2, gamma.map, kind='injection', check=False))
    if gamma.image(subgroup_1.elements) != list(subgroup_2.elements):
        raise errors.NotEmbeddable(
            "gamma carries %s to %s, not to %s" % (
                subgroup_1, gamma.image(subgroup_1.elements), subgroup_2))


def count_classes_fixed_subgroups_oracle(
        group_1, subgroup_1, group_2, subgroup_2, node_budget=None,
        max_carrier=DEFAULT_ORACLE_CARRIER, gamma=None):
    """Recount fixed-subgroup classes as orbits on pairs of injections.

    The carrier is every pair ``(lam, mu)`` with ``lam(H) = H1`` and
    ``mu(H) = H2``.  The acting group is generated by the stabilizers of
    H1 and H2 in Aut(G1) and Aut(G2) acting by post-composition, Aut(H)
    acting diagonally by pre-composition and, when a subgroup preserving
    isomorphism ``gamma`` exists, the swap
    ``(lam, mu) -> (gamma**-1 mu, gamma lam)``.  ``gamma`` may be given;
    by default the first one the search finds is used.

    Raises:
        SizeExceeded: if the carrier is larger than ``max_carrier``.
        NotEmbeddable: if a given ``gamma`` does not carry H1 onto H2.

    """
    data = fixed_subgroup_data(
        group_1, subgroup_1, group_2, subgroup_2, node_budget, gamma)
    h_group = data.h_group
    injections_1 = [
        injection for injection in morphisms.enumerate_injections(
            h_group, group_1, node_budget)
        if injection.image() == list(subgroup_1.elements)]
    injections_2 = [
        injection for injection in morphisms.enumerate_injections(
            h_group, group_2, node_budget)
        if injection.image() == list(subgroup_2.elements)]
    stabilizer_generators = []
    for group, image in ((group_1, data.image_1), (group_2, data.image_2)):
        aut_group = morphisms.compute_aut(group, node_budget).group
        stabilizer_generators.append(groups.generating_set(
            aut_group, within=groups.Subgroup(
                aut_group, image.aut_stab, check=False)))
    return _orbit_count(
        h_group, group_1, group_2, injections_1, injections_2,
        stabilizer_generators[0], stabilizer_generators[1], data.gamma,
        'fixed_subgroups', 'iso.fixed.oracle', node_budget, max_carrier)


def count_classes_pushout_family(
        subgroup_group, group_1, group_2, method='oracle', node_budget=None,
        max_carrier=DEFAULT_ORACLE_CARRIER):
    """Count amalgams ``G1 *_H G2`` over every pair of injections of H.

    Parameters:
        subgroup_group (FiniteGroup): H.
        group_1, group_2 (FiniteGroup): the factors.
        method (string): 'oracle' counts orbits of
            ``Aut(G1) x Aut(G2)`` (with the factor swap when G1 and G2 are
            isomorphic) and the diagonal Aut(H) on ``Inj(H, G1) x
            Inj(H, G2)``; 'formula' sums fixed-subgroup counts over
            unordered pairs of Aut(G_i)-orbits of subgroups isomorphic to H.
        node_budget (int): search node budget.
        max_carrier (int): largest injection-pair carrier the oracle
            accepts.

    Returns:
        IsoClassReport with mode 'pushout_family'.

    Raises:
        FictitiousAmalgam: if H has the order of a factor.
        NotEmbeddable: if H does not inject into a factor.
        SizeExceeded: if the oracle carrier is too large.

    """
    if method not in IsoClassReport.METHODS:
        raise ValueError("Unknown counting method %r" % method)
    if subgroup_group.order in (group_1.order, group_2.order):
        raise errors.FictitiousAmalgam(
            "Amalgamated group of order %d is a whole factor" % (
                subgroup_group.order,))
    gamma = morphisms.find_isomorphism(group_1, group_2, node_budget)
    if method == 'formula':
        return _family_formula(
            subgroup_group, group_1, group_2, gamma, node_budget)

    injections_1 = morphisms.enumerate_injections(
        subgroup_group, group_1, node_budget)
    injections_2 = morphisms.enumerate_injections(
        subgroup_group, group_2, node_budget)
    return _orbit_count(
        subgroup_group, group_1, group_2, injections_1, injections_2,
        morphisms.compute_aut(group_1, node_budget).generators(),
        morphisms.compute_aut(group_2, node_budget).generators(),
        gamma, 'pushout_family', 'iso.family.oracle', node_budget,
        max_carrier)


def _family_formula(subgroup_group, group_1, group_2, gamma, node_budget):
    orbits_1 = subgroup_orbits(
        group_1, subgroup_group, node_budget=node_budget)
    orbits_2 = subgroup_orbits(
        group_2, subgroup_group, node_budget=node_budget)
    if not orbits_1 or not orbits_2:
        raise errors.NotEmbeddable(
            "%r does not embed in both factors" % (subgroup_group,))
    orbit_of_1 = _orbit_lookup(orbits_1)
    orbit_of_2 = _orbit_lookup(orbits_2)

    total = 0
    representatives = []
    for index_1, index_2 in itertools.product(
            range(len(orbits_1)), range(len(orbits_2))):
        if gamma is not None:
            inverse = gamma.inverse()
            partner = (
                orbit_of_1[tuple(inverse.image(orbits_2[index_2][0]))],
                orbit_of_2[tuple(gamma.image(orbits_1[index_1][0]))])
            if partner < (index_1, index_2):
                continue
        report = count_classes_fixed_subgroups(
            group_1, orbits_1[index_1][0], group_2, orbits_2[index_2][0],
            node_budget)
        total += report.count
        representatives.extend(report.representatives)
    return IsoClassReport(
        total, representatives, 'pushout_family', gamma is not None,
        'formula', 'iso.family.orbit_pair_sum',
        details={'orbits_1': len(orbits_1), 'orbits_2': len(orbits_2)})


def _orbit_lookup(orbits):
    lookup = {}
    for index, orbit in enumerate(orbits):
        for subgroup in orbit:
            lookup[subgroup.elements] = index
    return lookup


def _orbit_count(
        subgroup_group, group_1, group_2, injections_1, injections_2,
        aut_generators_1, aut_generators_2, gamma, mode, provenance,
        node_budget, max_carrier):
    """Orbits on ``injections_1 x injections_2`` under the actor set."""
    if not injections_1 or not injections_2:
        raise errors.NotEmbeddable(
            "%r does not embed in both factors" % (subgroup_group,))
    size_1, size_2 = len(injections_1), len(injections_2)
    if size_1 * size_2 > max_carrier:
        raise errors.SizeExceeded(
            "Oracle carrier of %d injection pairs exceeds %d" % (
                size_1 * size_2, max_carrier))
    maps_1 = numpy.array([injection.map for injection in injections_1])
    maps_2 = numpy.array([injection.map for injection in injections_2])
    lookup_1 = _row_lookup(maps_1)
    lookup_2 = _row_lookup(maps_2)
    aut_1 = morphisms.compute_aut(group_1, node_budget)
    aut_2 = morphisms.compute_aut(group_2, node_budget)
    aut_h = morphisms.compute_aut(subgroup_group, node_budget)
    grid_1, grid_2 = numpy.meshgrid(
        numpy.arange(size_1), numpy.arange(size_2), indexing='ij')
    grid_1, grid_2 = grid_1.ravel(), grid_2.ravel()

    actors = []
    for generator in aut_generators_1:
        moved = lookup_1(aut_1.maps[generator][maps_1])
        actors.append(moved[grid_1] * size_2 + grid_2)
    for generator in aut_generators_2:
        moved = lookup_2(aut_2.maps[generator][maps_2])
        actors.append(grid_1 * size_2 + moved[grid_2])
    for generator in aut_h.generators():
        alpha = aut_h.maps[generator]
        moved_1 = lookup_1(maps_1[:, alpha])
        moved_2 = lookup_2(maps_2[:, alpha])
        actors.append(moved_1[grid_1] * size_2 + moved_2[grid_2])
    if gamma is not None:
        inverse = gamma.inverse().map
        swapped_1 = lookup_1(inverse[maps_2])
        swapped_2 = lookup_2(gamma.map[maps_1])
        actors.append(swapped_1[grid_2] * size_2 + swapped_2[grid_1])

    partition = cosets.generic_orbits(size_1 * size_2, actors)
    first_members = numpy.unique(partition.labels, return_index=True)[1]
    representatives = [
        PushOut(
            subgroup_group, group_1, group_2,
            injections_1[pair // size_2], injections_2[pair % size_2],
            check=False)
        for pair in sorted(first_members)]
    LOGGER.debug(
        "%s oracle %s/%s/%s: %d orbits on %d pairs", mode,
        group_1.label, subgroup_group.label, group_2.label,
        partition.count, size_1 * size_2)
    return IsoClassReport(
        partition.count, representatives, mode, gamma is not None, 'oracle',
        provenance, details={'carrier': size_1 * size_2})


def _row_lookup(rows):
    index = dict((row.tobytes(), position) for position, row in enumerate(
        numpy.ascontiguousarray(rows, dtype=numpy.int64)))

    def _lookup(moved):
        moved = numpy.ascontiguousarray(moved, dtype=numpy.int64)
        try:
            return numpy.array([index[row.tobytes()] for row in moved])
        except KeyError:
            raise errors.NotBijective(
                "An actor moves an injection outside the carrier")
    return _lookup


def _transport(source, reference, swap, node_budget):
    """Express ``source`` on the groups of ``reference``.

    Returns the two transported injection maps as numpy arrays, or None if
    a factor or the amalgamated group is not isomorphic.
    """
    if swap:
        first, second = source.mu, source.lam
        group_1, group_2 = source.G2, source.G1
    else:
        first, second = source.lam, source.mu
        group_1, group_2 = source.G1, source.G2
    transports = []
    for own, target in (
            (reference.H, source.H), (group_1, reference.G1),
            (group_2, reference.G2)):
        if own == target:
            transports.append(numpy.arange(own.order))
            continue
        iso = morphisms.find_isomorphism(own, target, node_budget)
        if iso is None:
            return None
        transports.append(iso.map)
    phi_h, phi_1, phi_2 = transports
    return phi_1[first.map[phi_h]], phi_2[second.map[phi_h]]


def oracle_cross_check(
        group_1, subgroup_1, group_2, subgroup_2, node_budget=None,
        max_carrier=DEFAULT_ORACLE_CARRIER):
    """Recompute the class counts of one amalgam by every available path.

    Counts compared: the Out(H) double coset formula, the fixed-subgroup
    orbit oracle, the pairwise ``pushout_isomorphic`` classification of the
    oracle representatives, and the push-out family count by formula and
    by oracle.

    Returns:
        CrossCheck namedtuple ``(agree, counts, counterexample)``; the
        counterexample is a pair of oracle representatives from distinct
        orbits that ``pushout_isomorphic`` identifies, or None.

    """
    formula = count_classes_fixed_subgroups(
        group_1, subgroup_1, group_2, subgroup_2, node_budget)
    oracle = count_classes_fixed_subgroups_oracle(
        group_1, subgroup_1, group_2, subgroup_2, node_budget, max_carrier)
    counterexample = None
    classes = []
    for representative in oracle.representatives:
        for known in classes:
            if pushout_isomorphic(
                    known, representative, allow_swap=True,
                    node_budget=node_budget)[0]:
                if counterexample is None:
                    counterexample = (known, representative)
                break
        else:
            classes.append(representative)
    h_group = formula.representatives[0].H
    family_formula = count_classes_pushout_family(
        h_group, group_1, group_2, method='formula', node_budget=node_budget)
    family_oracle = count_classes_pushout_family(
        h_group, group_1, group_2, method='oracle', node_budget=node_budget,
        max_carrier=max_carrier)
    counts = collections.OrderedDict([
        ('fixed_formula', formula.count),
        ('fixed_oracle', oracle.count),
        ('fixed_pairwise', len(classes)),
        ('family_formula', family_formula.count),
        ('family_oracle', family_oracle.count),
    ])
    agree = (
        formula.count == oracle.count == len(classes) and
        family_formula.count == family_oracle.count and
        counterexample is None)
    if not agree:
        LOGGER.warning(
            "oracle disagreement for %s/%s: %s", group_1.label,
            group_2.label, dict(counts))
    return CrossCheck(agree, counts, counterexample)


def sweep_instances(
        catalog, max_order=12, max_subgroup_order=6, node_budget=None):
    """List the amalgams an oracle sweep covers.

    Every unordered pair of catalog groups of order at most ``max_order``
    is combined with every pair of isomorphic proper subgroups of order at
    most ``max_subgroup_order``, one subgroup per Aut(G_i)-orbit.

    Parameters:
        catalog (list): ``(name, FiniteGroup)`` pairs.

    Returns:
        list of ``(name_1, G1, H1, name_2, G2, H2)`` tuples.

    """
    entries = [
        (name, group) for name, group in catalog if group.order <= max_order]
    representatives = {}
    for name, group in entries:
        subgroup_list = groups.enumerate_subgroups(group)
        seen = set()
        chosen = []
        for subgroup in subgroup_list:
            if len(subgroup) > max_subgroup_order or (
                    len(subgroup) == group.order) or subgroup.elements in seen:
                continue
            induced = groups.subgroup_as_group(subgroup).group
            for orbit in subgroup_orbits(
                    group, induced, node_budget=node_budget):
                seen.update(member.elements for member in orbit)
                chosen.append((orbit[0], induced))
        representatives[name] = chosen

    instances = []
    for (name_1, group_1), (name_2, group_2) in (
            itertools.combinations_with_replacement(entries, 2)):
        for subgroup_1, induced_1 in representatives[name_1]:
            for subgroup_2, induced_2 in representatives[name_2]:
                if len(subgroup_1) != len(subgroup_2):
                    continue
                if morphisms.find_isomorphism(
                        induced_1, induced_2, node_budget) is None:
                    continue
                instances.append(
                    (name_1, group_1, subgroup_1, name_2, group_2,
                     subgroup_2))
    LOGGER.info("oracle sweep covers %d amalgams", len(instances))
    return instances


def oracle_sweep(
        catalog, max_order=12, max_subgroup_order=6, n_workers=-1,
        node_budget=None, max_carrier=DEFAULT_ORACLE_CARRIER):
    """Cross-check every small amalgam of a catalog, possibly in parallel.

    Parameters:
        catalog (list): ``(name, FiniteGroup)`` pairs.
        max_order (int): largest factor order swept.
        max_subgroup_order (int): largest amalgamated subgroup order.
        n_workers (int): number of worker processes; -1 uses every CPU, 1
            runs in a single thread.
        node_budget (int): search node budget per search.
        max_carrier (int): oracle carrier bound per instance.

    Returns:
        list of dicts, one per instance, with the names, subgroup elements,
        counts and an ``agree`` flag, in instance order.

    """
    instances = sweep_instances(
        catalog, max_order, max_subgroup_order, node_budget)
    if n_workers is None or n_workers < 0:
        n_workers = multiprocessing.cpu_count()
    n_workers = max(min(n_workers, len(instances)), 1)

    if n_workers > 1:
        LOGGER.info(
            "n_workers > 1 (%d) so starting a processes pool.", n_workers)
        worker_pool = multiprocessing.Pool(n_workers)
        if HAS_PSUTIL:
            parent = psutil.Process()
            for child in parent.children():
                try:
                    child.nice(PROCESS_LOW_PRIORITY)
                except psutil.NoSuchProcess:
                    LOGGER.warning(
                        "NoSuchProcess exception encountered when trying "
                        "to nice a worker of %s; ignoring.", parent)
    else:
        LOGGER.info("n_workers == 1 so a threadpool is sufficient")
        worker_pool = multiprocessing.pool.ThreadPool(n_workers)

    results = []
    last_time = time.time()
    try:
        pending = [
            worker_pool.apply_async(
                func=_sweep_worker, args=(instance, node_budget, max_carrier))
            for instance in instances]
        for index, result in enumerate(pending):
            results.append(result.get())
            last_time = groups._invoke_timed_callback(
                last_time, lambda: LOGGER.info(
                    'oracle sweep: %d of %d amalgams checked',
                    index + 1, len(pending)),
                _LOGGING_PERIOD)
    except BaseException:
        worker_pool.terminate()
        LOGGER.exception("Exception occurred in worker")
        raise
    finally:
        worker_pool.close()
        worker_pool.join()
    LOGGER.info(
        "oracle sweep finished: %d of %d amalgams agree",
        sum(result['agree'] for result in results), len(results))
    return results


def _sweep_worker(instance, node_budget, max_carrier):
    """Cross-check one sweep instance; runs inside a worker."""
    name_1, group_1, subgroup_1, name_2, group_2, subgroup_2 = instance
    check = oracle_cross_check(
        group_1, subgroup_1, group_2, subgroup_2, node_budget, max_carrier)
    return {
        'g1': name_1,
        'h1': list(subgroup_1.elements),
        'g2': name_2,
        'h2': list(subgroup_2.elements),
        'counts': dict(check.counts),
        'agree': check.agree,
    }
