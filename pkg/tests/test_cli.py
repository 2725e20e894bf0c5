# coding=UTF-8
"""Tests for the command line entry point and the package namespace."""
import importlib
import json
import os
import shutil
import tempfile
import unittest

import mock

from amalgenus import catalog
from amalgenus import cli
from amalgenus import errors
from amalgenus import fileio
from amalgenus import genus
import amalgenus.testing


class RunConfigTests(unittest.TestCase):
    """Tests for configuration validation."""

    def test_unknown_command(self):
        """AMG: only known commands are configurable."""
        with self.assertRaises(errors.InputValidationError):
            cli.RunConfig('render')

    def test_bad_values(self):
        """AMG: formats, budgets and policies are validated."""
        with self.assertRaises(errors.InputValidationError):
            cli.RunConfig('aut', output_format='yaml')
        with self.assertRaises(errors.InputValidationError):
            cli.RunConfig('aut', node_budget=0)
        with self.assertRaises(errors.InputValidationError):
            cli.RunConfig('aut', max_carrier=-1)
        with self.assertRaises(errors.InputValidationError):
            cli.RunConfig('genus', nplus_policy='middle')

    def test_default_budget(self):
        """AMG: the budget environment variable overrides the default."""
        self.assertEqual(cli.default_budget({}), cli.morphisms.DEFAULT_NODE_BUDGET)
        self.assertEqual(
            cli.default_budget({cli.BUDGET_ENVIRONMENT_VARIABLE: '77'}), 77)
        for value in ('0', '-3', 'lots'):
            with self.assertRaises(errors.InputValidationError):
                cli.default_budget({cli.BUDGET_ENVIRONMENT_VARIABLE: value})

    def test_config_from_args(self):
        """AMG: parsed arguments become command inputs."""
        args = cli.build_parser().parse_args([
            'genus', '--g1', 'D8', '--h1', 'klein', '--g2', 'D8',
            '--h2', 'klein', '--nplus-policy', 'lower', '--budget', '500'])
        config = cli.config_from_args(args, environ={})
        self.assertEqual(config.command, 'genus')
        self.assertEqual(config.node_budget, 500)
        self.assertEqual(config.nplus_policy, 'lower')
        self.assertEqual(config.inputs['h1'], 'klein')
        self.assertNotIn('budget', config.inputs)


class CommandTests(unittest.TestCase):
    """Tests for ``main`` on the individual commands."""

    def setUp(self):
        """Create a temporary workspace."""
        self.workspace_dir = tempfile.mkdtemp()

    def tearDown(self):
        """Remove the temporary workspace."""
        shutil.rmtree(self.workspace_dir)

    def _main(self, argv):
        path = os.path.join(self.workspace_dir, 'report.json')
        status = cli.main(argv + ['--output', path])
        document = None
        if os.path.exists(path):
            with open(path) as report_file:
                document = json.load(report_file)
        return status, document

    def _klein(self, command, *extra):
        return [command, '--g1', 'D8', '--h1', 'klein', '--g2', 'D8',
                '--h2', 'klein'] + list(extra)

    def test_aut(self):
        """AMG: the aut command reports Aut(D8) and checks it by scan."""
        status, document = self._main(
            ['aut', '--group', 'D8', '--bruteforce-check'])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertEqual(document['order'], 8)
        self.assertEqual(document['out_order'], 2)
        self.assertEqual(document['bruteforce_order'], 8)
        self.assertEqual(document['command'], 'aut')
        self.assertEqual(document['schema'], fileio.SCHEMA)

    def test_subgroups(self):
        """AMG: the subgroups command lists the lattice of D8."""
        status, document = self._main(['subgroups', '--group', 'D8'])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertEqual(document['count'], 10)
        self.assertEqual(
            sum(entry['normal'] for entry in document['subgroups']), 6)

    def test_iso_classes(self):
        """AMG: formula and oracle both find two D8 Klein amalgams."""
        status, document = self._main(self._klein('iso-classes', '--family'))
        self.assertEqual(status, cli.EXIT_OK)
        self.assertEqual(document['fixed_formula']['count'], 2)
        self.assertEqual(document['fixed_oracle']['count'], 2)
        self.assertEqual(document['family_formula']['count'], 2)
        self.assertEqual(document['family_oracle']['count'], 2)

    def test_genus(self):
        """AMG: the D8 Klein amalgams form one genus of two classes."""
        status, document = self._main(self._klein('genus'))
        self.assertEqual(status, cli.EXIT_OK)
        self.assertEqual(document['genus']['value'], 1)
        self.assertEqual(document['iso_classes'], 2)
        self.assertEqual(document['input']['mode'], 'symmetric')
        self.assertIn('conditions', document['genus'])

    def test_genus_from_input_file(self):
        """AMG: abstract genus data is read with --input."""
        group = catalog.get_group('D8')
        klein = catalog.named_subgroup('D8', 'klein', group=group)
        input_path = os.path.join(self.workspace_dir, 'input.json')
        fileio.write_report(
            fileio.genus_input_to_json(
                genus.derive_genus_input(group, klein, group, klein)),
            input_path)
        status, document = self._main(
            ['genus', '--input', input_path, '--nplus-policy', 'lower'])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertEqual(document['genus']['value'], 1)
        self.assertEqual(document['genus']['nplus_policy'], 'lower')

    def test_genus_needs_groups(self):
        """AMG: genus without groups or input is an input error."""
        status, document = self._main(['genus', '--g1', 'D8'])
        self.assertEqual(status, cli.EXIT_INPUT)
        self.assertIsNone(document)

    def test_genus_pushout(self):
        """AMG: the GL2(F2) Borel amalgams have push-out genus one."""
        status, document = self._main([
            'genus-pushout', '--g1', 'GL2(F2)', '--h1', 'borel',
            '--g2', 'GL2(F2)^op', '--h2', 'borel'])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertEqual(document['genus']['value'], 1)
        self.assertEqual(document['genus']['annotations']['k_1'], 1)

    def test_conditions(self):
        """AMG: the center of D8 is central."""
        status, document = self._main([
            'conditions', '--g1', 'D8', '--h1', 'center', '--g2', 'D8',
            '--h2', 'center'])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertEqual(
            document['conditions']['conditions']['central'], [True, True])
        self.assertTrue(document['conditions']['any_holds'])

    def test_oracle_sweep(self):
        """AMG: a small catalog sweep agrees everywhere."""
        catalog_path = os.path.join(self.workspace_dir, 'catalog.json')
        with open(catalog_path, 'w') as catalog_file:
            json.dump({'groups': ['C2', 'C4', 'V4', 'S3']}, catalog_file)
        status, document = self._main([
            'oracle-sweep', '--catalog', catalog_path, '--max-order', '6',
            '--max-subgroup-order', '2'])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertTrue(document['all_agree'])
        self.assertGreater(document['instances'], 0)

    def test_group_file_argument(self):
        """AMG: groups may be given as JSON files."""
        group = catalog.get_group('S3')
        path = amalgenus.testing.write_group_file(
            os.path.join(self.workspace_dir, 's3.json'), group)
        status, document = self._main(['aut', '--group', path])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertEqual(document['order'], 6)
        self.assertEqual(document['inn_order'], 6)

    def test_unknown_group(self):
        """AMG: unknown groups exit with the input status."""
        status, _ = self._main(['aut', '--group', 'M11'])
        self.assertEqual(status, cli.EXIT_INPUT)

    def test_fictitious_amalgam(self):
        """AMG: amalgamating a whole factor is an input error."""
        status, _ = self._main([
            'iso-classes', '--g1', 'S3', '--h1', '0,1,2,3,4,5',
            '--g2', 'S3', '--h2', '0,1,2,3,4,5'])
        self.assertEqual(status, cli.EXIT_INPUT)

    def test_budget_exhausted(self):
        """AMG: a tiny budget exits with the budget status."""
        status, document = self._main(
            ['aut', '--group', 'D12', '--budget', '1'])
        self.assertEqual(status, cli.EXIT_BUDGET)
        self.assertIsNone(document)

    def test_budget_environment(self):
        """AMG: AMALGENUS_BUDGET applies when --budget is absent."""
        with mock.patch.dict(
                os.environ, {cli.BUDGET_ENVIRONMENT_VARIABLE: '1'}):
            status, _ = self._main(['aut', '--group', 'D12'])
        self.assertEqual(status, cli.EXIT_BUDGET)
        with mock.patch.dict(
                os.environ, {cli.BUDGET_ENVIRONMENT_VARIABLE: 'none'}):
            status, _ = self._main(['aut', '--group', 'D12'])
        self.assertEqual(status, cli.EXIT_INPUT)

    def test_internal_error_status(self):
        """AMG: a failed invariant exits with the internal status."""
        with mock.patch(
                'amalgenus.amalgams.count_classes_fixed_subgroups',
                side_effect=errors.InternalInvariantError('broken')):
            status, _ = self._main(
                self._klein('iso-classes', '--method', 'formula'))
        self.assertEqual(status, cli.EXIT_INTERNAL)

    def test_text_format(self):
        """AMG: text reports are sorted key: value lines."""
        config = cli.RunConfig(
            'aut', inputs={'group': 'V4'}, output_format='text')
        status, text = cli.run(config)
        self.assertEqual(status, cli.EXIT_OK)
        lines = text.splitlines()
        self.assertIn('order: 6', lines)
        self.assertIn('command: aut', lines)
        self.assertIn('maps: [6 entries]', lines)
        self.assertEqual(
            cli.render_text({'b': {'c': 1}, 'a': [1, 2]}), 'a: [1, 2]\nb.c: 1\n')

    def test_reports_are_reproducible(self):
        """AMG: repeated runs write byte-identical reports."""
        digests = []
        for name in ('first.json', 'second.json'):
            path = os.path.join(self.workspace_dir, name)
            self.assertEqual(
                cli.main(self._klein('genus') + ['--output', path]),
                cli.EXIT_OK)
            digests.append(amalgenus.testing.digest_file(path))
        self.assertEqual(digests[0], digests[1])
        amalgenus.testing.assert_json_equal(
            os.path.join(self.workspace_dir, 'first.json'),
            os.path.join(self.workspace_dir, 'second.json'))

    def test_report_folders_are_reproducible(self):
        """AMG: two runs of several commands write identical folders."""
        commands = [
            ('aut.json', ['aut', '--group', 'D8']),
            ('subgroups.json', ['subgroups', '--group', 'Q8']),
            ('iso.json', self._klein('iso-classes', '--method', 'formula')),
            ('genus.json', self._klein('genus')),
        ]
        digests = []
        for run in ('run_a', 'run_b'):
            run_dir = os.path.join(self.workspace_dir, run)
            os.makedirs(run_dir)
            for name, args in commands:
                self.assertEqual(
                    cli.main(args + ['--output', os.path.join(
                        run_dir, name)]),
                    cli.EXIT_OK)
            digests.append(amalgenus.testing.digest_folder(run_dir))
        self.assertEqual(digests[0], digests[1])
        self.assertEqual(
            digests[0], amalgenus.testing.digest_file_list([
                os.path.join(self.workspace_dir, 'run_b', name)
                for name, _ in commands]))

    def test_stdout(self):
        """AMG: without --output the report goes to stdout."""
        with mock.patch('sys.stdout') as stdout:
            status = cli.main(['subgroups', '--group', 'C4'])
        self.assertEqual(status, cli.EXIT_OK)
        written = ''.join(
            call[0][0] for call in stdout.write.call_args_list)
        self.assertEqual(json.loads(written)['count'], 3)

    def test_no_command(self):
        """AMG: running without a command prints help and fails."""
        with mock.patch('sys.stdout'):
            self.assertEqual(cli.main([]), cli.EXIT_INPUT)


class NamespaceTests(unittest.TestCase):
    """Tests for the package namespace."""

    def test_public_functions(self):
        """AMG: core functions are exported at package level."""
        for name in (
                'validate_group', 'compute_aut', 'double_cosets',
                'count_classes_fixed_subgroups', 'genus_fixed',
                'check_simplifications'):
            self.assertIn(name, amalgenus.__all__)
            self.assertTrue(callable(getattr(amalgenus, name)))
        self.assertNotIn('_invoke_timed_callback', amalgenus.__all__)

    def test_version_fallback(self):
        """AMG: an uninstalled package reports an unknown version."""
        import pkg_resources
        with mock.patch(
                'pkg_resources.get_distribution',
                side_effect=pkg_resources.DistributionNotFound()):
            module = importlib.reload(amalgenus)
            self.assertEqual(module.__version__, 'unknown')
        importlib.reload(amalgenus)
