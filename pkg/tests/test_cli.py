import pytest

from qpdot import __version__
from qpdot.cli import EXIT_CONVERGENCE, EXIT_INVALID, EXIT_OK, EXIT_VERIFY, main
from qpdot.errors import ConvergenceError
from qpdot.verify import CheckResult, VerificationReport


def _lines(capsys) -> dict[str, str]:
    out = capsys.readouterr().out
    return {line.split()[0]: line.split()[1] for line in out.strip().split('\n')}


def test_energy_defaults(capsys):
    assert main(['energy']) == EXIT_OK
    values = _lines(capsys)
    assert values['E_r'] == '3.16227766'
    assert values['E'] == '4.16227766'
    assert float(values['stark_shift']) == 0.0


def test_energy_at_the_figure_defaults(capsys):
    assert main(['energy', '--b', '2', '--phi', '5', '--eps', '5', '--m', '1', '--n-r', '1']) == EXIT_OK
    values = _lines(capsys)
    assert float(values['E_r']) == pytest.approx(13.8069, abs=1e-4)
    assert float(values['E_z']) == -5.25
    assert values['a'].startswith('1.4236')


def test_energy_lines_carry_the_defining_formulas(capsys):
    assert main(['energy']) == EXIT_OK
    labels = {line.split()[0]: line.split(maxsplit=2)[2] for line in capsys.readouterr().out.strip().split('\n')}
    assert len(labels) == 12
    assert labels['E'] == 'total energy E_r + E_z'
    assert labels['stark_shift'].endswith('-ħ²e²ε²/(4K)')
    assert labels['Xi'].endswith('Ξ = 2a/ħ')
    assert labels['omega_c'].endswith('ω_c = eB/(μc)')
    assert labels['phi0'].endswith('Φ0 = 2πħc/e')
    assert '(n_r + 1/2 + |γ|/2)' in labels['E_r']


def test_thermo(capsys):
    assert main(['thermo', '--b', '2', '--phi', '5', '--m', '1']) == EXIT_OK
    values = _lines(capsys)
    assert values['backend'] == 'closed'
    assert set(values) == {'backend', 'T', 'X', 'F', 'U', 'S', 'Cv', 'I', 'M', 'chi'}
    assert main(['thermo', '--backend', 'paper']) == EXIT_OK
    assert _lines(capsys)['backend'] == 'paper'


def test_sweep_to_stdout(capsys):
    assert main(['sweep', '--var', 'B', '--from', '0', '--to', '10', '--steps', '11']) == EXIT_OK
    lines = capsys.readouterr().out.strip().split('\n')
    assert lines[0] == 'B,E'
    assert len(lines) == 12


def test_sweep_to_file(tmp_path, capsys):
    path = tmp_path / 'sweep.csv'
    rc = main(['sweep', '--var', 'T', '--from', '0.5', '--to', '5', '--steps', '4', '--quantity', 'U,Cv',
               '--output', str(path)])
    assert rc == EXIT_OK
    assert capsys.readouterr().out == ''
    assert path.read_text().split('\n')[0] == 'T,U,Cv'


@pytest.mark.parametrize('argv', [['energy', '--n-z', '0'], ['energy', '--v0', '0'], ['energy', '--b', '-1'],
                                  ['sweep', '--var', 'B', '--from', '0', '--to', '1', '--quantity', 'Q'],
                                  ['sweep', '--var', 'm', '--from', '0.5', '--to', '2'],
                                  ['figure', 'seven'], ['figure', '19'], ['thermo', '--t', '0']])
def test_invalid_input(argv, capsys):
    assert main(argv) == EXIT_INVALID
    assert 'ERROR' in capsys.readouterr().err


@pytest.mark.parametrize('argv', [['energy', '--units', 'si'], ['energy', '--m', '1.5'], ['sweep'], ['launch']])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == EXIT_INVALID


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(['--version'])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_convergence_failure(monkeypatch):
    def fail(*args, **kwargs):
        raise ConvergenceError('partition sum did not converge')

    monkeypatch.setattr('qpdot.cli.run_sweep', fail)
    assert main(['sweep', '--var', 'T', '--from', '1', '--to', '2']) == EXIT_CONVERGENCE


def test_verify_exit_status(monkeypatch, capsys):
    failing = VerificationReport([CheckResult('broken', False, 'x < 1', '2')])
    monkeypatch.setattr('qpdot.cli.verify', lambda errata: failing)
    assert main(['verify', '--no-errata']) == EXIT_VERIFY
    assert 'FAIL' in capsys.readouterr().out
    monkeypatch.setattr('qpdot.cli.verify', lambda errata: VerificationReport([CheckResult('ok', True, '', '')]))
    assert main(['verify']) == EXIT_OK


def test_figure(tmp_path):
    assert main(['figure', '16', '--outdir', str(tmp_path), '--steps', '5']) == EXIT_OK
    assert (tmp_path / 'fig16.csv').read_text().startswith('Phi_AB,I[m=0]')
