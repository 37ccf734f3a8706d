import json

import pytest
from traitlets.tests.utils import check_help_all_output

from qudit_phase import phaseapp
from qudit_phase.fileio import read_distribution
from qudit_phase.phaseapp import HarperApp, QuditPhaseApp, SelftestApp


pytestmark = pytest.mark.usefixtures("qp_environ")

ASYMPTOTIC_CHECKS = {
    'deviation_ratio', 'excited_level', 'continuum_mathieu_residual',
    'gamma_continuum', 'gaussian_continuum',
}


def load_report(path):
    with open(str(path)) as f:
        return json.load(f)


def test_help_output():
    check_help_all_output('qudit_phase')


@pytest.mark.parametrize(
    'subcommand',
    ['harper', 'states', 'quasiprob', 'complete', 'asympt', 'selftest', 'plot']
)
def test_subcommand_help_output(subcommand):
    check_help_all_output('qudit_phase', [subcommand])


def test_no_subcommand():
    assert phaseapp.run([]) == 1


def test_defaults():
    app = HarperApp()
    assert app.d == 5
    assert app.seed == 42
    assert app.output_format == 'csv'
    assert app.quarter_turn


def test_harper_qubit_json(qp_run, qp_output_dir):
    assert qp_run('harper', '--d', '2', '--format', 'json') == 0
    report = load_report(qp_output_dir / 'harper.json')
    assert report['metadata']['command'] == 'harper'
    assert report['metadata']['seed'] == 42
    assert report['metadata']['d'] == 2
    assert report['summary']['h'] == pytest.approx(0.70710678, abs=1e-8)
    assert all(check['passed'] for check in report['checks'])


def test_harper_csv_files(qp_run, qp_output_dir):
    assert qp_run('harper', '--d=3') == 0
    names = sorted(p.name for p in qp_output_dir.iterdir())
    assert names == [
        'harper_checks.csv',
        'harper_gamma.csv',
        'harper_spectrum.csv',
        'harper_summary.csv',
    ]
    summary = (qp_output_dir / 'harper_summary.csv').read_text()
    assert summary.startswith('key,value\ncommand,harper\n')
    assert 'seed,42\n' in summary
    assert not list(qp_output_dir.glob('.~*'))


def test_output_is_deterministic(qp_run, qp_output_dir):
    args = ('states', '--d', '3', '--seed', '7', '--format', 'json')
    assert qp_run(*args) == 0
    first = (qp_output_dir / 'states.json').read_bytes()
    assert qp_run(*args) == 0
    assert (qp_output_dir / 'states.json').read_bytes() == first
    assert load_report(qp_output_dir / 'states.json')['metadata']['seed'] == 7


def test_seed_changes_random_table(qp_run, qp_output_dir):
    assert qp_run('states', '--d', '3', '--seed', '1') == 0
    first = (qp_output_dir / 'states_random.csv').read_text()
    assert qp_run('states', '--d', '3', '--seed', '2') == 0
    assert (qp_output_dir / 'states_random.csv').read_text() != first


def test_complete_even_zero_set(qp_run, qp_output_dir):
    assert qp_run('complete', '--d', '4', '--format', 'json') == 0
    report = load_report(qp_output_dir / 'complete.json')
    assert report['summary']['zero_set_size'] == 5
    assert len(report['tables']['zero_set']['rows']) == 5


def test_complete_odd_positivity(qp_run, qp_output_dir):
    assert qp_run('complete', '--d', '5', '--format', 'json') == 0
    report = load_report(qp_output_dir / 'complete.json')
    assert report['summary']['zero_set_size'] == 0
    assert report['summary']['min_g'] > 0
    names = {check['check'] for check in report['checks']}
    assert {'min_power_entry', 'min_perron_component', 'conjugation_residual'} <= names


def test_complete_reduction_without_full_operator(qp_run, qp_output_dir):
    assert qp_run('complete', '--d', '33', '--format', 'json') == 0
    report = load_report(qp_output_dir / 'complete.json')
    assert report['summary']['reduced_size'] == 17 ** 2
    names = {check['check'] for check in report['checks']}
    assert {'min_power_entry', 'min_perron_component', 'reduced_eigen_residual'} <= names
    assert not {'conjugation_residual', 'projection_residual'} & names


def test_complete_beyond_reduction_cap(qp_run, qp_output_dir):
    assert qp_run('complete', '--d', '101', '--format', 'json') == 0
    report = load_report(qp_output_dir / 'complete.json')
    assert 'reduced_size' not in report['summary']
    checks = {check['check']: check for check in report['checks']}
    assert 'min_power_entry' not in checks
    assert checks['min_g']['informational'] is True
    assert checks['zero_set']['informational'] is True


def test_complete_zero_set_is_informational_from_23(qp_run, qp_output_dir):
    assert qp_run('complete', '--d', '23', '--format', 'json') == 0
    checks = {c['check']: c for c in load_report(qp_output_dir / 'complete.json')['checks']}
    assert checks['zero_set']['informational'] is True
    assert checks['min_g']['passed'] and not checks['min_g']['informational']
    assert qp_run('complete', '--d', '22', '--format', 'json') == 0
    checks = {c['check']: c for c in load_report(qp_output_dir / 'complete.json')['checks']}
    assert checks['zero_set']['passed'] and not checks['zero_set']['informational']


@pytest.mark.slow
@pytest.mark.parametrize('d', [6, 11, 16])
def test_states_asserts_the_optimizer(d, qp_run, qp_output_dir):
    assert qp_run('states', '--d', str(d), '--format', 'json') == 0
    checks = load_report(qp_output_dir / 'states.json')['checks']
    optimizer = [c for c in checks if c['check'] in ('optimizer_value', 'optimizer_fidelity')]
    assert len(optimizer) == 2
    assert all(c['passed'] and not c['informational'] for c in optimizer)


def test_complete_qubit_rank(qp_run, qp_output_dir):
    assert qp_run('complete', '--d', '2', '--format', 'json') == 0
    assert load_report(qp_output_dir / 'complete.json')['summary']['real_rank'] == 3


def test_selftest(qp_run, qp_output_dir):
    assert qp_run('selftest', '--max-d', '9', '--format', 'json') == 0
    report = load_report(qp_output_dir / 'selftest.json')
    assert report['summary']['failed'] == 0
    per_d = [check for check in report['checks'] if check['check'] not in ASYMPTOTIC_CHECKS]
    assert {check['d'] for check in per_d} == set(range(1, 10))
    names = {check['check'] for check in report['checks']}
    assert ASYMPTOTIC_CHECKS <= names
    assert {'convolution', 'wigner_marginals', 'optimizer_fidelity', 'theta_bound'} <= names


@pytest.mark.parametrize(
    'kind,state',
    [
        ('husimi', 'random'),
        ('husimi', 'mixed'),
        ('husimi', 'gamma'),
        ('wigner', 'basis'),
        ('wigner', 'maximally-mixed'),
    ]
)
def test_quasiprob(qp_run, qp_output_dir, kind, state):
    assert qp_run('quasiprob', '--d', '5', '--kind', kind, '--state', state) == 0
    dist = read_distribution(qp_output_dir / 'quasiprob_distribution.csv', kind=kind)
    assert dist.d == 5
    assert dist.values.sum() == pytest.approx(1.0, abs=1e-12)


def test_quasiprob_reconstruct(qp_run, qp_output_dir):
    assert qp_run('quasiprob', '--d', '7', '--reconstruct', '--format', 'json') == 0
    report = load_report(qp_output_dir / 'quasiprob.json')
    assert report['summary']['reconstruction_error'] < 1e-8
    dist = read_distribution(qp_output_dir / 'quasiprob_distribution.json')
    assert dist.kind == 'husimi'
    assert dist.values.min() >= 0


@pytest.mark.parametrize(
    'args',
    [
        ('quasiprob', '--d', '4', '--kind', 'wigner'),
        ('quasiprob', '--d', '4', '--reconstruct'),
    ]
)
def test_even_dimension_violations(qp_run, args):
    assert qp_run(*args) == 2


@pytest.mark.parametrize(
    'args',
    [
        ('harper', '--d', '0'),
        ('harper', '--d', '4097'),
        ('harper', '--d', 'two'),
        ('harper', '--theta', '0'),
        ('harper', '--theta', '1.6'),
        ('harper', '--seed', '-1'),
        ('harper', '--format', 'xml'),
        ('harper', '--bogus', '1'),
        ('selftest', '--max-d', '33'),
        ('asympt', '--max-d', '1'),
        ('quasiprob', '--kind', 'glauber'),
    ]
)
def test_usage_errors(qp_run, qp_output_dir, args):
    assert qp_run(*args) == 1
    assert not list(qp_output_dir.iterdir())


def test_theta_recorded(qp_run, qp_output_dir):
    assert qp_run('harper', '--d', '5', '--theta', '0.5', '--format', 'json') == 0
    report = load_report(qp_output_dir / 'harper.json')
    assert report['metadata']['theta'] == 0.5
    names = {check['check'] for check in report['checks']}
    assert 'gamma_reflection' in names
    assert 'gamma_fourier' not in names


def test_asympt_emit_plots(qp_run, qp_output_dir):
    assert qp_run('asympt', '--max-d', '8', '--d', '9', '--emit-plots') == 0
    for name in ('asympt_h_vs_d', 'asympt_gamma'):
        assert (qp_output_dir / (name + '.csv')).exists()
        script = (qp_output_dir / (name + '.gp')).read_text()
        assert name + '.csv' in script


def test_asympt_json_skips_plots(qp_run, qp_output_dir):
    assert qp_run('asympt', '--max-d', '4', '--format', 'json', '--emit-plots') == 0
    assert not list(qp_output_dir.glob('*.gp'))
    report = load_report(qp_output_dir / 'asympt.json')
    rows = report['tables']['h_vs_d']['rows']
    assert [row[0] for row in rows] == [2, 3, 4]
    assert all(row[1] > row[2] for row in rows)


def test_plot_subcommand(qp_run, qp_output_dir):
    assert qp_run('asympt', '--max-d', '4') == 0
    table = qp_output_dir / 'asympt_h_vs_d.csv'
    assert qp_run('plot', '--table', str(table), '--kind', 'h') == 0
    assert (qp_output_dir / 'asympt_h_vs_d.gp').exists()


def test_plot_missing_table(qp_run, qp_output_dir):
    assert qp_run('plot', '--table', str(qp_output_dir / 'nothing.csv')) == 1


def test_metrics_file(qp_run, qp_output_dir, tmp_path):
    metrics = tmp_path / 'metrics.prom'
    assert qp_run('harper', '--d', '3', '--metrics-file', str(metrics)) == 0
    assert 'qudit_phase_eigensolve_duration_seconds' in metrics.read_text()
    assert not any(p.name.endswith('.prom') for p in qp_output_dir.iterdir())


def test_config_file(qp_run, qp_output_dir, qp_config_dir):
    (qp_config_dir / 'qudit_phase_config.json').write_text(
        json.dumps({'PhaseCommandApp': {'d': 3, 'output_format': 'json'}})
    )
    assert qp_run('harper') == 0
    assert load_report(qp_output_dir / 'harper.json')['metadata']['d'] == 3


def test_command_line_overrides_config_file(qp_run, qp_output_dir, qp_config_dir):
    (qp_config_dir / 'qudit_phase_config.json').write_text(
        json.dumps({'PhaseCommandApp': {'d': 3, 'output_format': 'json'}})
    )
    assert qp_run('harper', '--d', '4') == 0
    assert load_report(qp_output_dir / 'harper.json')['metadata']['d'] == 4


def test_solver_config_reaches_subcommand(qp_run, qp_output_dir, qp_pair):
    assert qp_run('harper', '--d', '6', '--HarperSolver.method=power', '--format', 'json') == 0
    report = load_report(qp_output_dir / 'harper.json')
    assert report['metadata']['method'] == 'power'
    assert report['summary']['h'] == pytest.approx(qp_pair(6)[1].h, abs=1e-12)


def test_clear_instances():
    app = SelftestApp.instance()
    assert SelftestApp.initialized()
    phaseapp.clear_instances()
    assert not SelftestApp.initialized()
    assert not QuditPhaseApp.initialized()
    del app
