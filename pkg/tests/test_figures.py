import math

import numpy as np
import pytest

from qfront.asymptotics import AsymptoticModel
from qfront.config import C1
from qfront.enums import ModelFamily, Quantity
from qfront.figures import FIGURES, arrival_time, evaluate_on_times, overlay_models, write_figure
from qfront.helpers import load_manifest

from conftest import make_series


def test_overlay_choices():
    assert [m.family for m in overlay_models(FIGURES['fig2'], Quantity.VELOCITY)] == [ModelFamily.STEP_ELASTIC]
    assert [m.family for m in overlay_models(FIGURES['fig3'], Quantity.VELOCITY)] == [ModelFamily.STEP_VISCOUS]
    fig4 = FIGURES['fig4']
    assert fig4.panels == (Quantity.VELOCITY, Quantity.ACCELERATION)
    for quantity in fig4.panels:
        families = [m.family for m in overlay_models(fig4, quantity)]
        assert families == [ModelFamily.STEP_ELASTIC, ModelFamily.STEP_VISCOUS]
    assert overlay_models(FIGURES['fig5'], Quantity.DISPLACEMENT)[0].family is ModelFamily.GAUSS_SHORT
    for quantity in Quantity:
        assert overlay_models(FIGURES['fig6'], quantity)[0].family is ModelFamily.GAUSS_LOWFREQ


def test_arrival_time():
    assert arrival_time(FIGURES['fig2']) == pytest.approx(50.0 / math.sqrt(3.0))
    assert arrival_time(FIGURES['fig6']) == pytest.approx(50.0 / math.sqrt(3.0) + 20.0)


def test_model_curve_is_blank_before_time_zero():
    times = np.array([0.0, 10.0, 30.0])
    values = evaluate_on_times(AsymptoticModel(ModelFamily.STEP_ELASTIC_AIRY), Quantity.VELOCITY, 35.0, times)
    assert math.isnan(values[0]) and values[2] > 0


def test_write_figure_bundle(tmp_path):
    times = np.arange(0, 7501) * 0.01
    series = make_series((25, 25), times, disp=np.sin(times))
    artifacts = write_figure(FIGURES['fig6'], tmp_path, series=series)
    assert sorted(artifacts) == sorted([
        'fig6_disp_fd.csv', 'fig6_disp_gauss-lowfreq.csv',
        'fig6_vel_fd.csv', 'fig6_vel_gauss-lowfreq.csv',
        'fig6_acc_fd.csv', 'fig6_acc_gauss-lowfreq.csv',
        'fig6_arrival.csv',
    ])
    manifest = load_manifest(tmp_path)
    assert manifest.command == 'figures fig6'
    arrival = (tmp_path / 'fig6_arrival.csv').read_text().splitlines()
    assert float(arrival[1]) == pytest.approx(math.hypot(25, 25) / C1 + 20.0)
