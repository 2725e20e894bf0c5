# coding=UTF-8
"""Command line entry point: ``amalgenus <command> [options]``.

Groups are given either as paths to JSON group files or as catalog names
(``D8``, ``GL2(F2)``, ...).  Subgroups are named subgroups of the group
(``klein``, ``borel``, ``center``, ...) or comma separated element indices.

Exit status: 0 on success, 2 for invalid input, 3 when a search budget is
exhausted and 4 when an internal invariant fails.
"""
import argparse
import logging
import os
import sys

from . import amalgams
from . import catalog
from . import errors
from . import fileio
from . import genus
from . import groups
from . import morphisms

LOGGER = logging.getLogger(__name__)

COMMANDS = (
    'aut', 'subgroups', 'iso-classes', 'genus', 'genus-pushout',
    'oracle-sweep', 'conditions')
BUDGET_ENVIRONMENT_VARIABLE = 'AMALGENUS_BUDGET'
EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4


class RunConfig(object):
    """Everything one CLI run needs.

    Parameters:
        command (string): one of ``COMMANDS``.
        inputs (dict): command inputs, e.g. ``{'g1': 'D8', 'h1': 'klein'}``.
        output (string or None): report path; None writes to stdout.
        output_format (string): 'json' or 'text'.
        node_budget (int): search node budget.
        max_carrier (int): oracle carrier bound.
        nplus_policy (string): 'exact', 'lower' or 'upper'.
        n_workers (int): worker processes for the oracle sweep.

    Raises:
        InputValidationError: if the command is unknown or a budget is not
            positive.

    """

    def __init__(
            self, command, inputs=None, output=None, output_format='json',
            node_budget=morphisms.DEFAULT_NODE_BUDGET,
            max_carrier=amalgams.DEFAULT_ORACLE_CARRIER,
            nplus_policy='upper', n_workers=1):
        if command not in COMMANDS:
            raise errors.InputValidationError(
                "Unknown command %r, expected one of %s" % (
                    command, COMMANDS))
        if output_format not in ('json', 'text'):
            raise errors.InputValidationError(
                "Unknown output format %r" % output_format)
        if node_budget <= 0 or max_carrier <= 0:
            raise errors.InputValidationError(
                "Budgets must be positive, got %s and %s" % (
                    node_budget, max_carrier))
        if nplus_policy not in genus.NPLUS_POLICIES:
            raise errors.InputValidationError(
                "Unknown Nplus policy %r" % nplus_policy)
        self.command = command
        self.inputs = dict(inputs or {})
        self.output = output
        self.output_format = output_format
        self.node_budget = int(node_budget)
        self.max_carrier = int(max_carrier)
        self.nplus_policy = nplus_policy
        self.n_workers = n_workers


def default_budget(environ=None):
    """Return the node budget, honoring ``AMALGENUS_BUDGET``.

    Raises:
        InputValidationError: if the variable is not a positive integer.

    """
    environ = os.environ if environ is None else environ
    value = environ.get(BUDGET_ENVIRONMENT_VARIABLE)
    if value is None:
        return morphisms.DEFAULT_NODE_BUDGET
    try:
        budget = int(value)
    except ValueError:
        budget = 0
    if budget <= 0:
        raise errors.InputValidationError(
            "%s must be a positive integer, got %r" % (
                BUDGET_ENVIRONMENT_VARIABLE, value))
    return budget


def build_parser():
    """Build the argparse parser with one subcommand per command."""
    parser = argparse.ArgumentParser(
        prog='amalgenus',
        description=(
            'Isomorphism classes and genus of amalgamated free products '
            'of finite groups.'))
    parser.add_argument(
        '-v', '--verbose', action='count', default=0,
        help='increase logging verbosity (repeatable)')
    subparsers = parser.add_subparsers(dest='command')

    def _common(subparser):
        subparser.add_argument(
            '--output', default=None, help='report path (default stdout)')
        subparser.add_argument(
            '--format', dest='output_format', default='json',
            choices=('json', 'text'), help='report format')
        subparser.add_argument(
            '--budget', type=int, default=None,
            help='search node budget (default %s or %d)' % (
                BUDGET_ENVIRONMENT_VARIABLE, morphisms.DEFAULT_NODE_BUDGET))
        subparser.add_argument(
            '--max-carrier', type=int,
            default=amalgams.DEFAULT_ORACLE_CARRIER,
            help='largest oracle carrier of injection pairs')

    def _amalgam(subparser):
        for name in ('g1', 'h1', 'g2', 'h2'):
            subparser.add_argument('--%s' % name, required=True)

    aut_parser = subparsers.add_parser('aut', help='automorphism group')
    aut_parser.add_argument('--group', required=True)
    aut_parser.add_argument(
        '--bruteforce-check', action='store_true',
        help='compare with the full bijection scan (order <= 8)')
    _common(aut_parser)

    subgroups_parser = subparsers.add_parser(
        'subgroups', help='subgroup lattice')
    subgroups_parser.add_argument('--group', required=True)
    _common(subgroups_parser)

    iso_parser = subparsers.add_parser(
        'iso-classes', help='isomorphism classes of amalgams')
    _amalgam(iso_parser)
    iso_parser.add_argument(
        '--method', default='both', choices=('formula', 'oracle', 'both'))
    iso_parser.add_argument(
        '--family', action='store_true',
        help='also count over every pair of injections of H')
    _common(iso_parser)

    genus_parser = subparsers.add_parser('genus', help='genus of an amalgam')
    genus_parser.add_argument('--g1')
    genus_parser.add_argument('--h1')
    genus_parser.add_argument('--g2')
    genus_parser.add_argument('--h2')
    genus_parser.add_argument(
        '--input', default=None,
        help='abstract Out(H)-level genus data instead of finite groups')
    genus_parser.add_argument(
        '--nplus-policy', default='upper', choices=genus.NPLUS_POLICIES)
    _common(genus_parser)

    pushout_parser = subparsers.add_parser(
        'genus-pushout', help='genus over all amalgamated subgroups')
    _amalgam(pushout_parser)
    pushout_parser.add_argument(
        '--nplus-policy', default='upper', choices=('lower', 'upper'))
    _common(pushout_parser)

    sweep_parser = subparsers.add_parser(
        'oracle-sweep', help='cross-check formulas against the orbit oracle')
    sweep_parser.add_argument(
        '--catalog', default=None,
        help='catalog file (default: the built-in catalog)')
    sweep_parser.add_argument('--max-order', type=int, default=12)
    sweep_parser.add_argument('--max-subgroup-order', type=int, default=6)
    sweep_parser.add_argument('--workers', type=int, default=1)
    _common(sweep_parser)

    conditions_parser = subparsers.add_parser(
        'conditions', help='simplification conditions for Nplus')
    _amalgam(conditions_parser)
    _common(conditions_parser)
    return parser


def config_from_args(args, environ=None):
    """Turn parsed arguments into a ``RunConfig``."""
    reserved = set([
        'command', 'verbose', 'output', 'output_format', 'budget',
        'max_carrier', 'nplus_policy', 'workers'])
    inputs = dict(
        (key, value) for key, value in vars(args).items()
        if key not in reserved)
    budget = args.budget if args.budget is not None else default_budget(
        environ)
    return RunConfig(
        args.command, inputs=inputs, output=args.output,
        output_format=args.output_format, node_budget=budget,
        max_carrier=args.max_carrier,
        nplus_policy=getattr(args, 'nplus_policy', 'upper'),
        n_workers=getattr(args, 'workers', 1))


def run(config):
    """Execute one command and return ``(exit_status, report_text)``.

    Errors are mapped to exit statuses and logged; the report text is the
    canonical JSON (or text) rendering, or None on failure.
    """
    try:
        document = _COMMAND_HANDLERS[config.command](config)
    except errors.InputValidationError as error:
        LOGGER.error("invalid input: %s", error)
        return EXIT_INPUT, None
    except errors.BudgetExceeded as error:
        LOGGER.error("search budget exhausted: %s", error)
        return EXIT_BUDGET, None
    except (errors.InternalInvariantError, AssertionError) as error:
        LOGGER.exception("internal invariant violated: %s", error)
        return EXIT_INTERNAL, None
    document['command'] = config.command
    if config.output_format == 'json':
        text = fileio.dumps_report(document)
    else:
        text = render_text(document)
    if config.output is not None:
        with open(config.output, 'w') as report_file:
            report_file.write(text)
        LOGGER.info("wrote %s report to %s", config.command, config.output)
    return EXIT_OK, text


def render_text(document, prefix=''):
    """Flatten a report into sorted ``key: value`` lines."""
    lines = []
    for key in sorted(document):
        value = document[key]
        name = prefix + str(key)
        if isinstance(value, dict):
            lines.append(render_text(value, prefix=name + '.').rstrip('\n'))
        elif isinstance(value, list) and any(
                isinstance(item, (list, dict)) for item in value):
            lines.append('%s: [%d entries]' % (name, len(value)))
        else:
            lines.append('%s: %s' % (name, value))
    return '\n'.join(line for line in lines if line) + '\n'


def main(argv=None):
    """Console script entry point; returns the exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=max(logging.WARNING - 10 * args.verbose, logging.DEBUG),
        format='%(asctime)s %(name)-20s %(levelname)-8s %(message)s')
    if args.command is None:
        parser.print_help()
        return EXIT_INPUT
    try:
        config = config_from_args(args)
    except errors.InputValidationError as error:
        LOGGER.error("invalid configuration: %s", error)
        return EXIT_INPUT
    status, text = run(config)
    if text is not None and config.output is None:
        sys.stdout.write(text)
    return status


def load_group_argument(reference):
    """Load a group from a JSON path or a catalog name.

    Returns:
        ``(FiniteGroup, {name: Subgroup}, name)``

    """
    if os.path.exists(reference):
        group, subgroups = fileio.load_group(reference)
        return group, subgroups, reference
    group = catalog.get_group(reference)
    subgroups = dict(
        (name, catalog.named_subgroup(reference, name, group=group))
        for name in catalog.subgroup_names(reference))
    return group, subgroups, reference


def _amalgam_inputs(config):
    group_1, subgroups_1, _ = load_group_argument(config.inputs['g1'])
    if config.inputs['g2'] == config.inputs['g1']:
        group_2, subgroups_2 = group_1, subgroups_1
    else:
        group_2, subgroups_2, _ = load_group_argument(config.inputs['g2'])
    subgroup_1 = fileio.resolve_subgroup(
        group_1, subgroups_1, config.inputs['h1'])
    subgroup_2 = fileio.resolve_subgroup(
        group_2, subgroups_2, config.inputs['h2'])
    return group_1, subgroup_1, group_2, subgroup_2


def _run_aut(config):
    group, _, _ = load_group_argument(config.inputs['group'])
    aut_group = morphisms.compute_aut(group, config.node_budget)
    document = fileio.aut_group_to_json(aut_group)
    document['provenance'] = 'aut.generator_image_search'
    if config.inputs.get('bruteforce_check'):
        oracle = morphisms.compute_aut_bruteforce(group)
        if oracle.order != aut_group.order or (
                oracle.maps != aut_group.maps).any():
            raise errors.InternalInvariantError(
                "Automorphism search and bijection scan disagree on %r" % (
                    group,))
        document['bruteforce_order'] = oracle.order
    return document


def _run_subgroups(config):
    group, _, _ = load_group_argument(config.inputs['group'])
    subgroup_list = groups.enumerate_subgroups(group)
    return {
        'group': group.label,
        'order': group.order,
        'count': len(subgroup_list),
        'subgroups': [
            {
                'order': len(subgroup),
                'elements': list(subgroup.elements),
                'normal': groups.is_normal(group, subgroup),
            }
            for subgroup in subgroup_list],
        'provenance': 'groups.cyclic_join_closure',
    }


def _run_iso_classes(config):
    group_1, subgroup_1, group_2, subgroup_2 = _amalgam_inputs(config)
    method = config.inputs.get('method', 'both')
    document = {'g1': group_1.label, 'g2': group_2.label}
    if method in ('formula', 'both'):
        document['fixed_formula'] = fileio.iso_report_to_json(
            amalgams.count_classes_fixed_subgroups(
                group_1, subgroup_1, group_2, subgroup_2,
                config.node_budget))
    if method in ('oracle', 'both'):
        document['fixed_oracle'] = fileio.iso_report_to_json(
            amalgams.count_classes_fixed_subgroups_oracle(
                group_1, subgroup_1, group_2, subgroup_2,
                config.node_budget, config.max_carrier))
    if config.inputs.get('family'):
        h_group = groups.subgroup_as_group(subgroup_1).group
        for family_method in ('formula', 'oracle'):
            if method in (family_method, 'both'):
                document['family_%s' % family_method] = (
                    fileio.iso_report_to_json(
                        amalgams.count_classes_pushout_family(
                            h_group, group_1, group_2, family_method,
                            config.node_budget, config.max_carrier)))
    counts = set(
        value['count'] for key, value in document.items()
        if key.startswith('fixed_'))
    if len(counts) > 1:
        raise errors.InternalInvariantError(
            "Formula and oracle disagree: %s" % sorted(counts))
    return document


def _run_genus(config):
    if config.inputs.get('input'):
        genus_input = fileio.load_genus_input(config.inputs['input'])
        if config.nplus_policy != 'exact':
            genus_input = genus.apply_nplus_policy(
                genus_input, config.nplus_policy)
        report = genus.genus_fixed(genus_input)
        return {
            'input': fileio.genus_input_to_json(genus_input),
            'genus': fileio.genus_report_to_json(report, genus_input.out_h),
        }
    for name in ('g1', 'h1', 'g2', 'h2'):
        if not config.inputs.get(name):
            raise errors.InputValidationError(
                "genus needs --%s or --input" % name)
    group_1, subgroup_1, group_2, subgroup_2 = _amalgam_inputs(config)
    genus_input = genus.derive_genus_input(
        group_1, subgroup_1, group_2, subgroup_2,
        nplus_policy=config.nplus_policy, node_budget=config.node_budget)
    report = genus.genus_fixed(genus_input)
    report.conditions = genus.check_simplifications(
        group_1, subgroup_1, group_2, subgroup_2, config.node_budget)
    iso_classes = amalgams.count_classes_fixed_subgroups(
        group_1, subgroup_1, group_2, subgroup_2, config.node_budget)
    if report.value > iso_classes.count:
        raise errors.InternalInvariantError(
            "Genus %d exceeds the %d isomorphism classes" % (
                report.value, iso_classes.count))
    return {
        'g1': group_1.label,
        'g2': group_2.label,
        'input': fileio.genus_input_to_json(genus_input),
        'genus': fileio.genus_report_to_json(report, genus_input.out_h),
        'iso_classes': iso_classes.count,
        'iso_provenance': iso_classes.provenance,
    }


def _run_genus_pushout(config):
    group_1, subgroup_1, group_2, subgroup_2 = _amalgam_inputs(config)
    report = genus.genus_pushout(
        group_1, subgroup_1, group_2, subgroup_2,
        nplus_policy=config.nplus_policy, node_budget=config.node_budget)
    return {
        'g1': group_1.label,
        'g2': group_2.label,
        'genus': fileio.genus_report_to_json(report),
    }


def _run_oracle_sweep(config):
    if config.inputs.get('catalog'):
        entries = fileio.load_catalog(config.inputs['catalog'])
    else:
        entries = catalog.catalog_groups()
    results = amalgams.oracle_sweep(
        entries, max_order=config.inputs.get('max_order', 12),
        max_subgroup_order=config.inputs.get('max_subgroup_order', 6),
        n_workers=config.n_workers, node_budget=config.node_budget,
        max_carrier=config.max_carrier)
    disagreements = [result for result in results if not result['agree']]
    if disagreements:
        raise errors.InternalInvariantError(
            "%d of %d amalgams disagree, first: %s" % (
                len(disagreements), len(results), disagreements[0]))
    return {
        'instances': len(results),
        'all_agree': True,
        'results': results,
        'provenance': 'iso.oracle_sweep',
    }


def _run_conditions(config):
    group_1, subgroup_1, group_2, subgroup_2 = _amalgam_inputs(config)
    return {
        'g1': group_1.label,
        'g2': group_2.label,
        'conditions': fileio.simplifications_to_json(
            genus.check_simplifications(
                group_1, subgroup_1, group_2, subgroup_2,
                config.node_budget)),
        'provenance': 'genus.simplification_conditions',
    }


_COMMAND_HANDLERS = {
    'aut': _run_aut,
    'subgroups': _run_subgroups,
    'iso-classes': _run_iso_classes,
    'genus': _run_genus,
    'genus-pushout': _run_genus_pushout,
    'oracle-sweep': _run_oracle_sweep,
    'conditions': _run_conditions,
}


if __name__ == '__main__':
    sys.exit(main())
