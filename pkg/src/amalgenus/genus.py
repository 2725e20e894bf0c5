# coding=UTF-8
"""Genus of amalgamated free products computed in Out(H).

Every count here is a number of double cosets, optionally quotiented by a
twisted C2 action, inside Out(H).  The inputs are the images ``A_i`` of the
discrete groups, ``Ahat_i`` of their profinite completions, the set
``Nplus`` of normalizer elements that keep the factors generating the
completion, and a twist ``xi`` when the completion is symmetric.  For finite
factors these are derived from the groups; for anything else they are
supplied directly.
"""
import collections
import itertools
import logging

from . import amalgams
from . import cosets
from . import errors
from . import groups
from . import morphisms

LOGGER = logging.getLogger(__name__)

MODES = (
    'profinitely_nonsymmetric', 'profsymmetric_nonsymmetric', 'symmetric',
    'double')
NPLUS_POLICIES = ('exact', 'lower', 'upper')

SimplificationReport = collections.namedtuple(
    'SimplificationReport',
    'conditions any_holds normalizer_product nplus_eliminable')


class GenusInput(object):
    """Out(H)-level data consumed by the genus formulas.

    Parameters:
        out_h (OutQuotient or FiniteGroup): Out(H), or a bare group playing
            its role in abstract case studies.
        a_1, a_2 (Subgroup): discrete images ``A_1``, ``A_2``.
        ahat_1, ahat_2 (Subgroup): profinite images, containing ``A_i``.
        nplus (iterable): the set ``Nplus``; must contain the identity.
        xi (int or None): twist element, needed by the symmetric modes.
        mode (string): one of ``MODES``.
        normalizers (tuple or None): ``(N_1, N_2)`` tilde normalizer
            subgroups when known; ``Nplus`` must then lie in the subgroup
            they generate.
        nplus_policy (string): how ``nplus`` was chosen, one of
            ``NPLUS_POLICIES``.

    Raises:
        InvalidGenusInput: if a containment invariant fails or the mode is
            unknown.

    """

    def __init__(
            self, out_h, a_1, a_2, ahat_1, ahat_2, nplus, xi=None,
            mode='profinitely_nonsymmetric', normalizers=None,
            nplus_policy='exact'):
        if isinstance(out_h, morphisms.OutQuotient):
            self.out_h = out_h
            self.ambient = out_h.quotient_group
        else:
            self.out_h = None
            self.ambient = out_h
        if mode not in MODES:
            raise errors.InvalidGenusInput(
                "Unknown genus mode %r, expected one of %s" % (mode, MODES))
        if nplus_policy not in NPLUS_POLICIES:
            raise errors.InvalidGenusInput(
                "Unknown Nplus policy %r" % nplus_policy)
        for subgroup in (a_1, a_2, ahat_1, ahat_2):
            if subgroup.parent != self.ambient:
                raise errors.InvalidGenusInput(
                    "%s is not a subgroup of %r" % (subgroup, self.ambient))
        for name, small, large in (
                ('A1', a_1, ahat_1), ('A2', a_2, ahat_2)):
            if not small.issubset(large.elements):
                raise errors.InvalidGenusInput(
                    "%s = %s is not contained in its profinite image %s" % (
                        name, list(small.elements), list(large.elements)))
        nplus = tuple(sorted(set(int(x) for x in nplus)))
        if self.ambient.identity not in nplus:
            raise errors.InvalidGenusInput(
                "Nplus %s does not contain the identity" % list(nplus))
        if nplus[-1] >= self.ambient.order or nplus[0] < 0:
            raise errors.InvalidGenusInput(
                "Nplus %s is not a subset of %r" % (list(nplus), self.ambient))
        if normalizers is not None:
            generated = groups.subgroup_generated(
                self.ambient, normalizers[0].elements + normalizers[1].elements)
            if not set(nplus).issubset(generated.elements):
                raise errors.InvalidGenusInput(
                    "Nplus %s is not inside the generated normalizer %s" % (
                        list(nplus), list(generated.elements)))
        self.a_1 = a_1
        self.a_2 = a_2
        self.ahat_1 = ahat_1
        self.ahat_2 = ahat_2
        self.nplus = nplus
        self.xi = None if xi is None else int(xi)
        self.mode = mode
        self.normalizers = normalizers
        self.nplus_policy = nplus_policy

    def replace(self, **kwargs):
        """Return a copy with some fields replaced."""
        fields = dict(
            out_h=self.out_h if self.out_h is not None else self.ambient,
            a_1=self.a_1, a_2=self.a_2, ahat_1=self.ahat_1,
            ahat_2=self.ahat_2, nplus=self.nplus, xi=self.xi,
            mode=self.mode, normalizers=self.normalizers,
            nplus_policy=self.nplus_policy)
        fields.update(kwargs)
        return GenusInput(**fields)

    def __repr__(self):
        return 'GenusInput(%s, mode=%s, |A1|=%d, |A2|=%d, |Nplus|=%d)' % (
            self.ambient.label, self.mode, len(self.a_1), len(self.a_2),
            len(self.nplus))


class GenusReport(object):
    """Result of a genus computation with everything needed to audit it.

    Attributes:
        value (int): the genus, or an upper bound when ``kind == 'bound'``.
        kind (string): 'exact' or 'bound'.
        mode (string): the genus mode the value was computed in.
        carrier_k (tuple or None): ``Ahat_2 Nplus Ahat_1``.
        carrier_s (tuple or None): ``K`` joined with its twisted inverse.
        decomposition (DoubleCosetDecomposition): the counted partition.
        c2 (C2Orbits or None): the C2 pairing in symmetric modes.
        conditions (SimplificationReport or None): simplification flags.
        provenance (list): tags of the formulas that fired, in order.
        annotations (dict): secondary values such as bounds or k_i counts.
        nplus_policy (string or None): how Nplus was chosen.

    """

    def __init__(
            self, value, kind, mode, decomposition, provenance,
            carrier_k=None, carrier_s=None, c2=None, conditions=None,
            annotations=None, nplus_policy=None):
        self.value = int(value)
        self.kind = kind
        self.mode = mode
        self.decomposition = decomposition
        self.provenance = list(provenance)
        self.carrier_k = carrier_k
        self.carrier_s = carrier_s
        self.c2 = c2
        self.conditions = conditions
        self.annotations = dict(annotations or {})
        self.nplus_policy = nplus_policy
        expected = (
            c2.count if c2 is not None else
            decomposition.count if decomposition is not None else None)
        if expected is not None and expected != self.value:
            raise errors.InternalInvariantError(
                "Genus %d disagrees with its decomposition count %d" % (
                    self.value, expected))

    def __repr__(self):
        return 'GenusReport(value=%d, kind=%s, mode=%s, provenance=%s)' % (
            self.value, self.kind, self.mode, self.provenance)


def derive_genus_input(
        group_1, subgroup_1, group_2, subgroup_2, overrides=None,
        nplus_policy='upper', node_budget=None):
    """Build a ``GenusInput`` from finite factors.

    For finite groups the profinite images equal the discrete ones.  The
    mode is 'symmetric' when an isomorphism ``G1 -> G2`` carries H1 onto H2
    and 'profinitely_nonsymmetric' otherwise; ``xi`` is the Out(H) class
    of its restriction.

    Parameters:
        group_1, group_2 (FiniteGroup): the factors.
        subgroup_1, subgroup_2 (Subgroup): the amalgamated subgroups.
        overrides (dict): optional replacements for 'a_1', 'a_2', 'ahat_1',
            'ahat_2' (subgroups or element lists), 'nplus', 'xi' and 'mode'.
        nplus_policy (string): 'upper' uses the subgroup generated by the
            two tilde normalizers, 'lower' uses the identity only and
            'exact' takes 'nplus' from ``overrides``.  An 'nplus' override
            always makes the policy 'exact'.
        node_budget (int): search node budget.

    Returns:
        GenusInput

    Raises:
        NotIsomorphicSubgroups: if H1 and H2 are not isomorphic.
        InvalidGenusInput: if 'exact' is requested without an 'nplus'
            override or an override breaks an invariant.

    """
    overrides = dict(overrides or {})
    data = amalgams.fixed_subgroup_data(
        group_1, subgroup_1, group_2, subgroup_2, node_budget)
    out_h = data.out_h
    ambient = out_h.quotient_group
    normalizers = (
        data.image_1.tilde_normalizer, data.image_2.tilde_normalizer)
    if nplus_policy == 'exact' and 'nplus' not in overrides:
        raise errors.InvalidGenusInput(
            "The exact Nplus policy needs an explicit 'nplus' override")
    if 'nplus' in overrides:
        nplus_policy = 'exact'
    fields = {
        'a_1': data.image_1.tilde_image,
        'a_2': data.image_2.tilde_image,
        'ahat_1': data.image_1.tilde_image,
        'ahat_2': data.image_2.tilde_image,
        'nplus': (
            overrides.get('nplus') if nplus_policy == 'exact' else
            _policy_nplus(ambient, normalizers, nplus_policy)),
        'xi': None if data.xi is None else int(out_h.projection[data.xi]),
        'mode': (
            'symmetric' if data.gamma is not None else
            'profinitely_nonsymmetric'),
    }
    for key, value in overrides.items():
        if key not in fields:
            raise errors.InvalidGenusInput("Unknown override %r" % key)
        if key.startswith('a') and not isinstance(value, groups.Subgroup):
            value = groups.Subgroup(ambient, value)
        fields[key] = value
    genus_input = GenusInput(
        out_h, fields['a_1'], fields['a_2'], fields['ahat_1'],
        fields['ahat_2'], fields['nplus'], xi=fields['xi'],
        mode=fields['mode'], normalizers=normalizers,
        nplus_policy=nplus_policy)
    LOGGER.debug("derived %r", genus_input)
    return genus_input


def apply_nplus_policy(genus_input, policy):
    """Return ``genus_input`` with Nplus chosen by ``policy``.

    Raises:
        InvalidGenusInput: if 'upper' is requested but the normalizers are
            unknown.

    """
    if policy == 'exact':
        return genus_input.replace(nplus_policy='exact')
    if policy == 'upper' and genus_input.normalizers is None:
        raise errors.InvalidGenusInput(
            "The upper Nplus policy needs the tilde normalizers")
    return genus_input.replace(
        nplus=_policy_nplus(
            genus_input.ambient, genus_input.normalizers, policy),
        nplus_policy=policy)


def genus_fixed(genus_input):
    """Genus of the amalgams with fixed amalgamated subgroups.

    ``K = Ahat_2 Nplus Ahat_1``.  In the profinitely nonsymmetric mode the
    genus is the number of ``(A_2, A_1)`` double cosets in K.  If the
    completion is symmetric the carrier becomes
    ``S = K | xi K**-1 xi``, and if the amalgam itself is symmetric the
    classes in S are further identified by ``alpha -> xi alpha**-1 xi``.
    The double mode delegates to ``genus_double``: with ``xi`` set (it must
    be the identity, and ``A_2 = A_1``) the classes are identified by
    inversion, without ``xi`` the profinite double without abstract
    symmetry counts ``(A_2, A_1)`` double cosets of ``Ahat_1``.

    Parameters:
        genus_input (GenusInput): Out(H)-level data.

    Returns:
        GenusReport

    Raises:
        MissingXi: if a symmetric mode has no twist.
        CarrierNotClosed: if K or S is not a union of double cosets.
        ActionNotClosed: if the C2 rule does not act on the classes of S.
        InvalidGenusInput: if a symmetric double has a nontrivial ``xi`` or
            ``A_2 != A_1``.
        InternalInvariantError: if the count is zero.

    """
    ambient = genus_input.ambient
    mode = genus_input.mode
    if mode == 'double':
        if genus_input.xi is None:
            return genus_double(
                genus_input.a_1, genus_input.ahat_1, a_2=genus_input.a_2,
                symmetric=False)
        if genus_input.xi != ambient.identity or (
                genus_input.a_2 != genus_input.a_1):
            raise errors.InvalidGenusInput(
                "A symmetric double needs xi = identity and A2 = A1, got "
                "xi = %d" % genus_input.xi)
        return genus_double(
            genus_input.a_1, genus_input.ahat_1, symmetric=True)
    carrier_k = cosets.product_set(
        ambient, genus_input.ahat_2, genus_input.nplus, genus_input.ahat_1)
    carrier_s = None
    c2 = None
    if mode == 'profinitely_nonsymmetric':
        decomposition = cosets.double_cosets(
            ambient, genus_input.a_2, genus_input.a_1, carrier_k)
        value = decomposition.count
        provenance = ['genus.fixed.nonsymmetric']
    else:
        if genus_input.xi is None:
            raise errors.MissingXi(
                "Mode %s needs the twist xi" % mode)
        carrier_s = tuple(sorted(set(carrier_k).union(
            cosets.twisted_inverse(ambient, carrier_k, genus_input.xi))))
        decomposition = cosets.double_cosets(
            ambient, genus_input.a_2, genus_input.a_1, carrier_s)
        if mode == 'profsymmetric_nonsymmetric':
            value = decomposition.count
            provenance = ['genus.fixed.profinitely_symmetric']
        else:
            c2 = cosets.c2_orbits(
                decomposition,
                cosets.TwistedInvolution(ambient, genus_input.xi))
            value = c2.count
            provenance = ['genus.fixed.symmetric']
    if value < 1:
        raise errors.InternalInvariantError(
            "Genus count %d is not positive" % value)

    annotations = {}
    if genus_input.normalizers is not None and (
            mode == 'profinitely_nonsymmetric'):
        annotations['normalizer_bound'] = _normalizer_bound(
            ambient, *genus_input.normalizers).count
        provenance.append('genus.bound.normalizers')
    return GenusReport(
        value, 'exact', mode, decomposition, provenance,
        carrier_k=carrier_k, carrier_s=carrier_s, c2=c2,
        annotations=annotations, nplus_policy=genus_input.nplus_policy)


def genus_double(a_1, ahat_1, a_2=None, symmetric=True):
    """Genus of a double ``G1 *_H G1`` from its Out(H) images.

    With ``symmetric`` set the ``(A_1, A_1)`` double cosets of ``Ahat_1``
    are counted up to inversion.  Otherwise the profinite double without
    abstract symmetry counts ``(A_2, A_1)`` double cosets of ``Ahat_1``
    without a C2 quotient; ``a_2`` defaults to ``a_1``.

    Returns:
        GenusReport in mode 'double'.

    Raises:
        CarrierNotClosed: if ``A_2 Ahat_1 A_1 != Ahat_1``.

    """
    ambient = ahat_1.parent
    left = a_1 if a_2 is None else a_2
    decomposition = cosets.double_cosets(ambient, left, a_1, ahat_1.elements)
    c2 = None
    if symmetric and a_2 is None:
        c2 = cosets.c2_orbits(
            decomposition, cosets.TwistedInvolution(ambient))
        value = c2.count
        provenance = ['genus.double.inversion']
    else:
        value = decomposition.count
        provenance = ['genus.double.profinite']
    if value < 1:
        raise errors.InternalInvariantError(
            "Genus count %d is not positive" % value)
    return GenusReport(
        value, 'exact', 'double', decomposition, provenance,
        carrier_k=tuple(ahat_1.elements), c2=c2)


def check_simplifications(
        group_1, subgroup_1, group_2, subgroup_2, node_budget=None):
    """Evaluate the conditions under which Nplus drops out of the genus.

    Conditions, each evaluated per factor except (iii):
        'central': H lies in the center of G_i.
        'direct_factor': H is a direct factor of ``N_{G_i}(H)``.
        'out_abelian': Out(H) is abelian.
        'self_normalizing': ``N_{G_i}(H) = H``.
        'retract': some homomorphism ``G_i -> H`` restricts to ``id_H``.

    Returns:
        SimplificationReport namedtuple ``(conditions, any_holds,
        normalizer_product, nplus_eliminable)`` where ``conditions`` maps
        every condition name to a tuple of booleans and
        ``normalizer_product`` tells whether the generated normalizer
        equals the set ``N_2 N_1``.

    Raises:
        InternalInvariantError: if a condition holds but the normalizer
            product check fails.

    """
    data = amalgams.fixed_subgroup_data(
        group_1, subgroup_1, group_2, subgroup_2, node_budget)
    factors = ((group_1, subgroup_1), (group_2, subgroup_2))
    conditions = collections.OrderedDict()
    conditions['central'] = tuple(
        subgroup.issubset(groups.center(group).elements)
        for group, subgroup in factors)
    conditions['direct_factor'] = tuple(
        groups.is_direct_factor(
            groups.normalizer(group, subgroup), subgroup)[0]
        for group, subgroup in factors)
    conditions['out_abelian'] = (
        groups.is_abelian(data.out_h.quotient_group),)
    conditions['self_normalizing'] = tuple(
        len(groups.normalizer(group, subgroup)) == len(subgroup)
        for group, subgroup in factors)
    conditions['retract'] = tuple(
        groups.is_retract(group, subgroup, node_budget=node_budget)
        for group, subgroup in factors)
    any_holds = any(any(flags) for flags in conditions.values())

    ambient = data.out_h.quotient_group
    normalizer_1 = data.image_1.tilde_normalizer
    normalizer_2 = data.image_2.tilde_normalizer
    generated = groups.subgroup_generated(
        ambient, normalizer_1.elements + normalizer_2.elements)
    normalizer_product = cosets.product_set(
        ambient, normalizer_2, normalizer_1) == generated.elements
    if any_holds and not normalizer_product:
        raise errors.InternalInvariantError(
            "A simplification condition holds but N_G != N_2 N_1")
    return SimplificationReport(
        conditions, any_holds, normalizer_product, normalizer_product)


def genus_bound_finite(
        group_1, subgroup_1, group_2, subgroup_2, node_budget=None):
    """Upper bound ``|N_2 \\ N_G / N_1|`` for a nonsymmetric finite amalgam.

    ``N_G`` is the subgroup of Out(H) generated by the tilde normalizers
    ``N_1`` and ``N_2``.

    Returns:
        GenusReport of kind 'bound'.

    Raises:
        SymmetricInputForNonsymmetricBound: if some isomorphism
            ``G1 -> G2`` carries H1 onto H2.

    """
    data = amalgams.fixed_subgroup_data(
        group_1, subgroup_1, group_2, subgroup_2, node_budget)
    if data.gamma is not None:
        raise errors.SymmetricInputForNonsymmetricBound(
            "%s/%s is symmetric; the normalizer bound does not apply" % (
                group_1.label, group_2.label))
    decomposition = _normalizer_bound(
        data.out_h.quotient_group, data.image_1.tilde_normalizer,
        data.image_2.tilde_normalizer)
    return GenusReport(
        decomposition.count, 'bound', 'profinitely_nonsymmetric',
        decomposition, ['genus.bound.normalizers'],
        carrier_k=decomposition.carrier)


def nplus_bracket(genus_input):
    """Return the genus under the lower and the upper Nplus proxies.

    Returns:
        ``(lower_report, upper_report)``; the lower proxy uses only the
        identity, the upper proxy the whole generated normalizer.

    """
    lower = genus_fixed(apply_nplus_policy(genus_input, 'lower'))
    upper = genus_fixed(apply_nplus_policy(genus_input, 'upper'))
    if lower.value > upper.value:
        raise errors.InternalInvariantError(
            "Lower Nplus proxy gave %d, more than the upper proxy %d" % (
                lower.value, upper.value))
    return lower, upper


def genus_pushout(
        group_1, subgroup_1, group_2, subgroup_2, orbit_data=None,
        nplus_policy='upper', node_budget=None):
    """Genus over every choice of amalgamated subgroups.

    The genus is summed over unordered pairs ``{H1', H2'}`` of
    Aut(G_i)-orbit representatives of the candidate subgroups; when the
    factors are isomorphic, the pairs ``(O1, O2)`` and
    ``(gamma**-1 O2, gamma O1)`` are identified.  For finite factors the
    candidates are the Aut(G_i)-orbit of ``H_i``, so each side contributes
    one orbit.

    Parameters:
        group_1, group_2 (FiniteGroup): the factors.
        subgroup_1, subgroup_2 (Subgroup): the amalgamated subgroups.
        orbit_data (dict): optional ``{'candidates_1': [...],
            'candidates_2': [...]}`` lists of candidate subgroups.
        nplus_policy (string): Nplus policy for every summand.
        node_budget (int): search node budget.

    Returns:
        GenusReport with the per-pair values and ``k_1``, ``k_2`` in its
        annotations.

    Raises:
        SizeExceeded: if subgroup orbits cannot be enumerated.

    """
    h_group = groups.subgroup_as_group(subgroup_1).group
    orbit_data = dict(orbit_data or {})
    candidate_orbits = []
    for index, (group, subgroup) in enumerate(
            ((group_1, subgroup_1), (group_2, subgroup_2))):
        orbits = amalgams.subgroup_orbits(
            group, h_group, node_budget=node_budget)
        candidates = orbit_data.get(
            'candidates_%d' % (index + 1), [subgroup])
        keys = set(tuple(sorted(candidate)) for candidate in candidates)
        chosen = [
            orbit for orbit in orbits
            if keys.intersection(member.elements for member in orbit)]
        candidate_orbits.append((orbits, chosen))
    (orbits_1, chosen_1), (orbits_2, chosen_2) = candidate_orbits
    gamma = morphisms.find_isomorphism(group_1, group_2, node_budget)
    lookup_1 = amalgams._orbit_lookup(orbits_1)
    lookup_2 = amalgams._orbit_lookup(orbits_2)

    total = 0
    summands = []
    for orbit_1, orbit_2 in itertools.product(chosen_1, chosen_2):
        representative_1, representative_2 = orbit_1[0], orbit_2[0]
        if gamma is not None:
            key = (lookup_1[representative_1.elements],
                   lookup_2[representative_2.elements])
            partner = (
                lookup_1[tuple(gamma.inverse().image(representative_2))],
                lookup_2[tuple(gamma.image(representative_1))])
            if partner < key and orbits_1[partner[0]] in chosen_1 and (
                    orbits_2[partner[1]] in chosen_2):
                continue
        report = genus_fixed(derive_genus_input(
            group_1, representative_1, group_2, representative_2,
            nplus_policy=nplus_policy, node_budget=node_budget))
        total += report.value
        summands.append({
            'h1': list(representative_1.elements),
            'h2': list(representative_2.elements),
            'value': report.value,
            'provenance': report.provenance,
        })
    if total < 1:
        raise errors.InternalInvariantError(
            "Push-out genus %d is not positive" % total)
    return GenusReport(
        total, 'exact', 'pushout_family', None, ['genus.pushout.pair_sum'],
        annotations={
            'k_1': len(chosen_1), 'k_2': len(chosen_2),
            'summands': summands},
        nplus_policy=nplus_policy)


def _normalizer_bound(ambient, normalizer_1, normalizer_2):
    generated = groups.subgroup_generated(
        ambient, normalizer_1.elements + normalizer_2.elements)
    return cosets.double_cosets(
        ambient, normalizer_2, normalizer_1, generated.elements)


def _policy_nplus(ambient, normalizers, policy):
    if policy == 'lower':
        return (ambient.identity,)
    if policy == 'upper':
        return groups.subgroup_generated(
            ambient, normalizers[0].elements + normalizers[1].elements
        ).elements
    raise errors.InvalidGenusInput(
        "Nplus policy %r needs explicit data" % policy)
