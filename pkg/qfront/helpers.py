import csv
import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import numpy as np
from dacite import DaciteError

from qfront.config import C1
from qfront.errors import ManifestError
from qfront.structures import ProbeSeries, RunManifest

logger = logging.getLogger(__name__)

MANIFEST_NAME = 'manifest.json'
FLOAT_FORMAT = '%.12e'


def format_float(value) -> str:
    '''Fixed %.12e rendering; NaN becomes an empty field.'''
    if value is None or np.isnan(value):
        return ''
    return FLOAT_FORMAT % float(value)


def write_rows_csv(path: Union[Path, str], header: Sequence[str], columns: Sequence[Iterable[float]]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in zip(*columns):
            writer.writerow([format_float(v) for v in row])
    return path


def probe_file_name(node) -> str:
    return f'probe_{node[0]}_{node[1]}.csv'


def write_probe_csv(directory: Union[Path, str], series: ProbeSeries) -> Path:
    '''t,disp,vel,acc; one row per step, derived columns blank at the trimmed endpoints.'''
    columns = [series.times, series.disp, series.vel, series.acc]
    return write_rows_csv(Path(directory) / probe_file_name(series.node), ('t', 'disp', 'vel', 'acc'), columns)


def read_probe_csv(path: Union[Path, str], node) -> ProbeSeries:
    with open(path, encoding='utf-8', newline='') as f:
        rows = list(csv.DictReader(f))
    if not rows:
        raise ManifestError(f'{path} holds no samples')

    def column(name):
        return np.array([float(row[name]) if row[name] != '' else np.nan for row in rows])

    return ProbeSeries(tuple(node), column('t'), column('disp'), column('vel'), column('acc'))


def content_hash(directory: Union[Path, str], artifacts: Sequence[str]) -> str:
    '''sha256 over (name, bytes) of every artifact in sorted name order.'''
    digest = hashlib.sha256()
    for name in sorted(artifacts):
        digest.update(name.encode('utf-8'))
        digest.update(b'\0')
        digest.update((Path(directory) / name).read_bytes())
    return digest.hexdigest()


def write_manifest(
    directory: Union[Path, str],
    command: str,
    parameters: Dict[str, Any],
    artifacts: List[str],
    wall_clock_seconds: float,
    tau: Optional[float] = None,
    grid_half: Optional[int] = None,
) -> RunManifest:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    artifacts = sorted(artifacts)
    missing = [name for name in artifacts if not (directory / name).is_file()]
    if missing:
        raise ManifestError(f'artifacts missing from {directory}: {", ".join(missing)}')
    manifest = RunManifest(
        command=command,
        parameters=parameters,
        c1=C1,
        tau=None if tau is None else float(tau),
        grid_half=grid_half,
        wall_clock_seconds=round(float(wall_clock_seconds), 3),
        artifacts=artifacts,
        content_hash=content_hash(directory, artifacts),
    )
    manifest.to_file(directory / MANIFEST_NAME)
    logger.info('manifest written to %s (%d artifacts, sha256 %s)', directory / MANIFEST_NAME, len(artifacts),
                manifest.content_hash[:12])
    return manifest


def load_manifest(directory: Union[Path, str]) -> RunManifest:
    path = Path(directory) / MANIFEST_NAME
    if not path.is_file():
        raise ManifestError(f'{directory} has no {MANIFEST_NAME}; refusing to use unrecorded outputs')
    try:
        return RunManifest.from_file(path)
    except (json.JSONDecodeError, TypeError, ValueError) as error:
        raise ManifestError(f'{path} is unreadable: {error}') from error
    except DaciteError as error:
        raise ManifestError(f'{path} does not describe a run: {error}') from error


def write_json(path: Union[Path, str], payload: Dict[str, Any]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write('\n')
    return path
