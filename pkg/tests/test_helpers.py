import json

import numpy as np
import pytest

from qfront.errors import ManifestError
from qfront.helpers import (
    MANIFEST_NAME,
    content_hash,
    format_float,
    load_manifest,
    read_probe_csv,
    write_manifest,
    write_probe_csv,
)
from qfront.lattice.probes import differentiate_series
from qfront.structures import ProbeSeries


def sample_series():
    times = np.arange(4) * 0.5
    return differentiate_series(ProbeSeries((2, 3), times, times ** 2))


def test_format_float():
    assert format_float(1.0) == '1.000000000000e+00'
    assert format_float(-2.5e-7) == '-2.500000000000e-07'
    assert format_float(float('nan')) == ''


def test_probe_csv_layout(tmp_path):
    path = write_probe_csv(tmp_path, sample_series())
    assert path.name == 'probe_2_3.csv'
    raw = path.read_bytes()
    assert b'\r' not in raw
    lines = raw.decode('utf-8').splitlines()
    assert lines[0] == 't,disp,vel,acc'
    assert lines[1] == '0.000000000000e+00,0.000000000000e+00,,'
    assert lines[2] == '5.000000000000e-01,2.500000000000e-01,1.000000000000e+00,2.000000000000e+00'
    assert len(lines) == 5


def test_probe_csv_reads_back(tmp_path):
    series = read_probe_csv(write_probe_csv(tmp_path, sample_series()), (2, 3))
    assert series.node == (2, 3)
    assert np.isnan(series.vel[0]) and series.acc[1] == pytest.approx(2.0)


def test_content_hash_is_order_independent_and_sensitive(tmp_path):
    (tmp_path / 'a.csv').write_text('1\n')
    (tmp_path / 'b.csv').write_text('2\n')
    first = content_hash(tmp_path, ['a.csv', 'b.csv'])
    assert first == content_hash(tmp_path, ['b.csv', 'a.csv'])
    (tmp_path / 'b.csv').write_text('3\n')
    assert content_hash(tmp_path, ['a.csv', 'b.csv']) != first


def test_manifest_round_trip(tmp_path):
    write_probe_csv(tmp_path, sample_series())
    written = write_manifest(tmp_path, 'simulate', {'lambda': 0.0, 'probes': [[2, 3]]}, ['probe_2_3.csv'],
                             1.23456, tau=0.01, grid_half=53)
    loaded = load_manifest(tmp_path)
    assert loaded == written
    assert loaded.wall_clock_seconds == 1.235
    document = json.loads((tmp_path / MANIFEST_NAME).read_text())
    assert document['c1'] == pytest.approx(1.5 ** 0.5)
    assert len(document['content_hash']) == 64


def test_manifest_errors(tmp_path):
    with pytest.raises(ManifestError):
        load_manifest(tmp_path)
    with pytest.raises(ManifestError):
        write_manifest(tmp_path, 'simulate', {}, ['absent.csv'], 0.0)
    (tmp_path / MANIFEST_NAME).write_text('{"command": "simulate"}')
    with pytest.raises(ManifestError):
        load_manifest(tmp_path)
