import json
import math

import numpy as np
import pytest

from qfront import cli, verify
from qfront.asymptotics import AsymptoticModel
from qfront.attenuation import AttenuationReport, expected_exponents
from qfront.config import C1, LoadSpec
from qfront.enums import ModelFamily
from qfront.specfun import phi
from qfront.structures import FitReport


def test_phi_identities_hold():
    passed, gaps = verify.check_phi_identities(fast=True)
    assert passed
    assert gaps['phi3_identity'] < 1e-8


def test_broken_phi_is_caught(monkeypatch):
    def broken(which, kappa, method=verify.PhiEvalMethod.CLOSED_FORM):
        value = phi(which, kappa, method)
        return 1.01 * value if which == 3 else value

    monkeypatch.setattr(verify, 'phi', broken)
    passed, gaps = verify.check_phi_identities(fast=True)
    assert not passed
    assert gaps['phi3_identity'] > 1e-4


def test_regime_gaps_and_scaling():
    assert verify.check_regime_gaps(fast=True)[0]
    passed, details = verify.check_viscous_scaling(fast=True)
    assert passed and details['ratio'] == pytest.approx(2.0)


def test_fast_mode_skips_slow_criteria(monkeypatch):
    criteria = [
        (1, 'quick', lambda fast: (True, {'value': 1.0}), False),
        (2, 'long', lambda fast: (False, {}), True),
    ]
    monkeypatch.setattr(verify, 'CRITERIA', criteria)
    passed, report = verify.run_verify(fast=True)
    assert passed
    assert [c['status'] for c in report['criteria']] == [verify.PASS, verify.SKIPPED]
    passed, report = verify.run_verify(fast=False)
    assert not passed
    assert report['criteria'][1]['status'] == verify.FAIL


def test_cli_exit_code_follows_the_report(monkeypatch, tmp_path):
    monkeypatch.setattr(cli, 'run_verify', lambda fast: (False, {'passed': False, 'fast': fast, 'criteria': []}))
    out = tmp_path / 'report.json'
    assert cli.main(['verify', '--fast', '--out', str(out)]) == 1
    assert json.loads(out.read_text())['fast'] is True


def low_frequency_report(measured, model):
    fits = {key: FitReport(value, 0.0, 1.0, 5) for key, value in measured.items()}
    model_fits = {key: FitReport(value, 0.0, 1.0, 5) for key, value in model.items()}
    return AttenuationReport(0.1, 'gauss(sigma=5)', [15, 25, 35], 90.0, fits=fits,
                             width_fit=FitReport(0.5, 0.0, 1.0, 5), model_fits=model_fits,
                             expected=expected_exponents(LoadSpec.gauss(5.0), 0.1))


def test_low_frequency_slopes_gate_on_the_model(monkeypatch):
    measured = {'disp': -0.56, 'vel': -1.02, 'acc': -1.50}
    model = {'disp': -0.58, 'vel': -1.05, 'acc': -1.55}
    monkeypatch.setattr(verify, 'run_attenuation', lambda *args, **kwargs: low_frequency_report(measured, model))
    passed, details = verify.check_gauss_lowfreq(fast=True)
    assert passed
    assert details['expected_target_met'] is False
    assert details['targets'] == model


def test_elastic_families_keep_the_plain_lag_bound():
    radius = math.hypot(25, 25)
    model = AsymptoticModel(ModelFamily.STEP_ELASTIC)
    assert verify.overlay_lag_limit(model, radius, 2.6) == 0.5
    assert verify.overlay_lag_limit(model, radius, 8.0) == pytest.approx(0.8)


@pytest.mark.parametrize('model, width', [
    (AsymptoticModel(ModelFamily.STEP_VISCOUS, 0.1), 2.605),
    (AsymptoticModel(ModelFamily.GAUSS_LOWFREQ, 0.1, 5.0), 4.57),
])
def test_diffusive_families_allow_the_dispersive_shift(model, width):
    radius = math.hypot(25, 25)
    limit = verify.overlay_lag_limit(model, radius, width)
    assert limit == pytest.approx(0.5 + 0.5 * np.cbrt(radius / 2.0) / C1)
    assert 1.5 < limit < 1.6


@pytest.mark.slow
def test_energy_drift():
    passed, details = verify.check_energy(fast=False)
    assert passed, details


@pytest.mark.slow
def test_full_fast_suite():
    passed, report = verify.run_verify(fast=True)
    assert passed, json.dumps(report, indent=2)
    assert np.all([c['status'] != verify.FAIL for c in report['criteria']])


@pytest.mark.slow
def test_figure_overlays_pass():
    passed, details = verify.check_overlays(fast=False)
    assert passed, json.dumps(details, indent=2)


@pytest.mark.slow
def test_low_frequency_exponents_pass():
    passed, details = verify.check_gauss_lowfreq(fast=False)
    assert passed, json.dumps(details, indent=2)
    assert isinstance(details['expected_target_met'], bool)
