# coding=UTF-8
"""JSON input and output for groups, catalogs, genus data and reports.

Every document carries ``"schema": "amalgenus/1"``.  Reports are written
with sorted keys and a fixed indent so identical computations produce
byte-identical files.  Elements of Out(H) and Aut(H) are written as the map
tables of their canonical automorphisms rather than bare indices.
"""
import json
import logging

from . import catalog
from . import errors
from . import genus
from . import groups
from . import morphisms

LOGGER = logging.getLogger(__name__)

SCHEMA = 'amalgenus/1'


def load_json(path):
    """Read a JSON document and check its schema tag when present.

    Raises:
        SchemaError: if the file is not JSON or has another schema.

    """
    try:
        with open(path, 'r') as json_file:
            document = json.load(json_file)
    except ValueError as error:
        raise errors.SchemaError("%s is not valid JSON: %s" % (path, error))
    schema = document.get('schema', SCHEMA) if isinstance(
        document, dict) else SCHEMA
    if schema != SCHEMA:
        raise errors.SchemaError(
            "%s has schema %r, expected %r" % (path, schema, SCHEMA))
    return document


def group_from_document(document, default_label=None):
    """Build a group and its named subgroups from a parsed document.

    Accepted forms: ``{"table": [[...]]}``, ``{"permgens": [[...], ...]}``
    or ``{"catalog": "D8"}``, each with an optional ``"label"`` and
    ``"subgroups": {"name": {"elements": [...]}}``.

    Returns:
        ``(FiniteGroup, {name: Subgroup})``

    Raises:
        SchemaError: if no group description is present.

    """
    if not isinstance(document, dict):
        raise errors.SchemaError(
            "A group document must be an object, got %r" % (document,))
    label = document.get('label', default_label)
    catalog_name = document.get('catalog')
    if 'table' in document:
        group = groups.validate_group(document['table'], label=label)
    elif 'permgens' in document:
        group = groups.group_from_permutations(
            document['permgens'], degree=document.get('degree'), label=label)
    elif catalog_name is not None:
        group = catalog.get_group(catalog_name)
        if label is not None:
            group.label = label
    else:
        raise errors.SchemaError(
            "Group document needs 'table', 'permgens' or 'catalog'")
    subgroups = {}
    if catalog_name is not None:
        for name in catalog.subgroup_names(catalog_name):
            subgroups[name] = catalog.named_subgroup(
                catalog_name, name, group=group)
    for name, entry in sorted(document.get('subgroups', {}).items()):
        if 'elements' in entry:
            subgroups[name] = groups.Subgroup(group, entry['elements'])
        elif 'generators' in entry:
            subgroups[name] = groups.subgroup_generated(
                group, entry['generators'])
        else:
            raise errors.SchemaError(
                "Subgroup %r needs 'elements' or 'generators'" % name)
    return group, subgroups


def load_group(path):
    """Load a group file; see ``group_from_document`` for the format."""
    document = load_json(path)
    group, subgroups = group_from_document(document, default_label=path)
    LOGGER.info("loaded %r from %s", group, path)
    return group, subgroups


def resolve_subgroup(group, subgroups, reference):
    """Find a subgroup by name, or from a comma separated element list.

    Raises:
        SchemaError: if ``reference`` is neither.

    """
    if reference in subgroups:
        return subgroups[reference]
    try:
        elements = [int(x) for x in reference.split(',') if x.strip()]
    except ValueError:
        raise errors.SchemaError(
            "Unknown subgroup %r; named subgroups are %s" % (
                reference, sorted(subgroups)))
    return groups.Subgroup(group, elements)


def load_catalog(path):
    """Load a catalog file.

    The document has ``"groups"``: a list whose entries are catalog names
    or objects with a ``"name"`` plus a group description.

    Returns:
        list of ``(name, FiniteGroup)`` pairs.

    Raises:
        SchemaError: if ``"groups"`` is missing.

    """
    document = load_json(path)
    if 'groups' not in document:
        raise errors.SchemaError("Catalog %s has no 'groups' list" % path)
    entries = []
    for entry in document['groups']:
        if isinstance(entry, str):
            entries.append((entry, catalog.get_group(entry)))
        else:
            name = entry.get('name', entry.get('label'))
            if name is None:
                raise errors.SchemaError(
                    "Catalog entry %r has no name" % (entry,))
            group, _ = group_from_document(entry, default_label=name)
            entries.append((name, group))
    return entries


def load_genus_input(path):
    """Load abstract Out(H)-level genus data.

    The document names H (a group description under ``"h"``) and gives
    ``"a_1"``, ``"a_2"``, ``"ahat_1"``, ``"ahat_2"`` as lists of generating
    automorphism map tables, ``"nplus"`` as the full list of map tables of
    Nplus, an optional ``"xi"`` map table, a ``"mode"`` and optional
    ``"normalizers"`` (two lists of generating map tables).  Map tables are
    mapped to their Out(H) classes.

    Returns:
        GenusInput

    Raises:
        SchemaError: if a required field is missing.

    """
    document = load_json(path)
    for key in ('h', 'a_1', 'a_2', 'ahat_1', 'ahat_2', 'nplus'):
        if key not in document:
            raise errors.SchemaError(
                "Genus input %s lacks %r" % (path, key))
    h_group, _ = group_from_document(document['h'], default_label='H')
    out_h = morphisms.out_quotient(morphisms.compute_aut(h_group))

    def _classes(maps):
        return [
            int(out_h.projection[out_h.aut.index(mapping)])
            for mapping in maps]

    def _generated(maps):
        return groups.subgroup_generated(
            out_h.quotient_group, _classes(maps))

    normalizers = None
    if document.get('normalizers') is not None:
        normalizers = tuple(
            _generated(maps) for maps in document['normalizers'])
    xi = document.get('xi')
    return genus.GenusInput(
        out_h, _generated(document['a_1']), _generated(document['a_2']),
        _generated(document['ahat_1']), _generated(document['ahat_2']),
        _classes(document['nplus']),
        xi=None if xi is None else _classes([xi])[0],
        mode=document.get('mode', 'profinitely_nonsymmetric'),
        normalizers=normalizers,
        nplus_policy=document.get('nplus_policy', 'exact'))


def group_to_json(group):
    """Serialize a group as its label, order and table."""
    document = {
        'label': group.label,
        'order': group.order,
        'identity': group.identity,
        'table': group.table.tolist(),
    }
    if group.perm_gens is not None:
        document['permgens'] = [list(gen) for gen in group.perm_gens]
    return document


def subgroup_to_json(subgroup):
    """Serialize a subgroup as its sorted elements."""
    return {'order': len(subgroup), 'elements': list(subgroup.elements)}


def morphism_to_json(morphism):
    """Serialize a morphism with source and target labels."""
    return {
        'source': morphism.source.label,
        'target': morphism.target.label,
        'kind': morphism.kind,
        'map': morphism.map.tolist(),
    }


def aut_group_to_json(aut_group):
    """Serialize ``Aut(G)`` with its map tables and inner automorphisms."""
    out_h = morphisms.out_quotient(aut_group)
    return {
        'base': aut_group.base.label,
        'order': aut_group.order,
        'inn_order': len(aut_group.inn_indices),
        'out_order': out_h.order,
        'maps': aut_group.maps.tolist(),
        'inn_indices': list(aut_group.inn_indices),
        'out_representatives': [
            aut_group.maps[rep].tolist() for rep in out_h.coset_reps],
    }


def element_maps(ambient, elements, out_h=None):
    """Map tables of Out(H) or Aut(H) elements; bare indices otherwise."""
    if out_h is not None and ambient == out_h.quotient_group:
        return [out_h.aut.maps[out_h.lift(x)].tolist() for x in elements]
    if out_h is not None and ambient == out_h.aut.group:
        return [out_h.aut.maps[x].tolist() for x in elements]
    return [int(x) for x in elements]


def decomposition_to_json(decomposition, out_h=None):
    """Serialize a double coset decomposition."""
    ambient = decomposition.ambient
    return {
        'ambient': ambient.label,
        'left': element_maps(ambient, decomposition.left.elements, out_h),
        'right': element_maps(ambient, decomposition.right.elements, out_h),
        'carrier_size': len(decomposition.carrier),
        'count': decomposition.count,
        'classes': [
            {
                'representative': element_maps(
                    ambient, [representative], out_h)[0],
                'size': len(members),
            }
            for representative, members in decomposition.classes],
    }


def c2_to_json(c2, ambient, out_h=None):
    """Serialize a C2 pairing."""
    return {
        'count': c2.count,
        'fixed': element_maps(ambient, c2.fixed, out_h),
        'pairs': [
            element_maps(ambient, pair, out_h) for pair in c2.pairs],
    }


def genus_input_to_json(genus_input):
    """Serialize a ``GenusInput``."""
    ambient = genus_input.ambient
    out_h = genus_input.out_h
    document = {
        'schema': SCHEMA,
        'mode': genus_input.mode,
        'nplus_policy': genus_input.nplus_policy,
        'out_order': ambient.order,
        'a_1': element_maps(ambient, genus_input.a_1.elements, out_h),
        'a_2': element_maps(ambient, genus_input.a_2.elements, out_h),
        'ahat_1': element_maps(ambient, genus_input.ahat_1.elements, out_h),
        'ahat_2': element_maps(ambient, genus_input.ahat_2.elements, out_h),
        'nplus': element_maps(ambient, genus_input.nplus, out_h),
        'xi': (
            None if genus_input.xi is None else
            element_maps(ambient, [genus_input.xi], out_h)[0]),
    }
    if out_h is not None:
        document['h'] = group_to_json(out_h.aut.base)
    if genus_input.normalizers is not None:
        document['normalizers'] = [
            element_maps(ambient, normalizer.elements, out_h)
            for normalizer in genus_input.normalizers]
    return document


def genus_report_to_json(report, out_h=None):
    """Serialize a ``GenusReport`` including carriers and decomposition."""
    document = {
        'value': report.value,
        'kind': report.kind,
        'mode': report.mode,
        'provenance': report.provenance,
        'nplus_policy': report.nplus_policy,
        'annotations': report.annotations,
    }
    ambient = None
    if report.decomposition is not None:
        ambient = report.decomposition.ambient
        document['decomposition'] = decomposition_to_json(
            report.decomposition, out_h)
    if ambient is not None:
        for key in ('carrier_k', 'carrier_s'):
            carrier = getattr(report, key)
            if carrier is not None:
                document[key] = element_maps(ambient, carrier, out_h)
        if report.c2 is not None:
            document['c2'] = c2_to_json(report.c2, ambient, out_h)
    if report.conditions is not None:
        document['conditions'] = simplifications_to_json(report.conditions)
    return document


def simplifications_to_json(simplifications):
    """Serialize a ``SimplificationReport``."""
    return {
        'conditions': dict(
            (name, list(flags))
            for name, flags in simplifications.conditions.items()),
        'any_holds': simplifications.any_holds,
        'normalizer_product': simplifications.normalizer_product,
        'nplus_eliminable': simplifications.nplus_eliminable,
    }


def pushout_to_json(pushout):
    """Serialize a push-out as its two injections."""
    return {
        'h': pushout.H.label,
        'g1': pushout.G1.label,
        'g2': pushout.G2.label,
        'lambda': pushout.lam.map.tolist(),
        'mu': pushout.mu.map.tolist(),
    }


def iso_report_to_json(report):
    """Serialize an ``IsoClassReport``."""
    document = {
        'count': report.count,
        'mode': report.mode,
        'method': report.method,
        'symmetric': report.symmetric,
        'provenance': report.provenance,
        'representatives': [
            pushout_to_json(pushout) for pushout in report.representatives],
        'details': report.details,
    }
    if report.decomposition is not None:
        document['decomposition'] = decomposition_to_json(
            report.decomposition, report.out_h)
    return document


def dumps_report(document):
    """Return the canonical text of a report document."""
    document = dict(document)
    document['schema'] = SCHEMA
    return json.dumps(document, sort_keys=True, indent=2) + '\n'


def write_report(document, path=None):
    """Write a report canonically to ``path`` and return its text."""
    text = dumps_report(document)
    if path is not None:
        with open(path, 'w') as report_file:
            report_file.write(text)
        LOGGER.info("wrote report to %s", path)
    return text
