import json
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from dacite import Config, DaciteError, DaciteFieldError, UnexpectedDataError, from_dict

from qfront.config import DEFAULT_TAU, LoadSpec, SimParams
from qfront.enums import LoadKind
from qfront.errors import ConfigError, ParameterError

logger = logging.getLogger(__name__)

DACITE_CONFIG = Config(strict=True, cast=[LoadKind, float])
KEY_ALIASES = {'lambda': 'lam', 'grid_half': 'half_width'}


@dataclass
class RunConfig:
    '''One run as written in a batch file (the JSON key `lambda` maps to `lam`).'''

    lam: float
    load: LoadKind
    t_end: float
    probes: List[List[int]] = field(default_factory=list)
    sigma: Optional[float] = None
    tau: float = DEFAULT_TAU
    half_width: Optional[int] = None

    def to_params(self) -> SimParams:
        load = LoadSpec(self.load, self.sigma)
        return SimParams(
            lam=self.lam,
            load=load,
            t_end=self.t_end,
            tau=self.tau,
            half_width=self.half_width,
            probes=[tuple(p) for p in self.probes],
        )


def _locate(text: str, key: str, span: Tuple[int, int] = (0, -1)):
    '''(line, column) of the first "key" inside text[span], in whole-file coordinates.'''
    start, end = span
    match = re.compile(r'"%s"\s*:' % re.escape(key)).search(text, start, len(text) if end < 0 else end)
    if not match:
        return None, None
    line = text.count('\n', 0, match.start()) + 1
    column = match.start() - (text.rfind('\n', 0, match.start()) + 1) + 1
    return line, column


def _run_spans(text: str, count: int) -> List[Tuple[int, int]]:
    '''Character span of every object in the top-level "runs" array.'''
    opening = re.search(r'"runs"\s*:\s*\[', text)
    decoder = json.JSONDecoder()
    spans, position = [], opening.end()
    for _ in range(count):
        while text[position] in ' \t\r\n,':
            position += 1
        _, end = decoder.raw_decode(text, position)
        spans.append((position, end))
        position = end
    return spans


def _build_run(raw: Dict[str, Any], text: str, path: str, overrides: Dict[str, Any],
               span: Tuple[int, int] = (0, -1)) -> SimParams:
    if not isinstance(raw, dict):
        raise ConfigError('each run must be a JSON object', path)
    for internal in KEY_ALIASES.values():
        if internal in raw:
            line, column = _locate(text, internal, span)
            raise ConfigError(f'unknown key "{internal}"', path, line, column, internal)
    data = {KEY_ALIASES.get(k, k): v for k, v in raw.items()}
    data.update({KEY_ALIASES.get(k, k): v for k, v in overrides.items() if v is not None})

    try:
        run = from_dict(RunConfig, data, config=DACITE_CONFIG)
    except UnexpectedDataError as error:
        key = sorted(error.keys)[0]
        line, column = _locate(text, key, span)
        raise ConfigError(f'unknown key "{key}"', path, line, column, key) from error
    except DaciteFieldError as error:
        key = {v: k for k, v in KEY_ALIASES.items()}.get(error.field_path, error.field_path)
        line, column = _locate(text, key, span)
        raise ConfigError(f'invalid "{key}": {error}', path, line, column, key) from error
    except (DaciteError, ValueError, TypeError) as error:
        raise ConfigError(f'invalid run: {error}', path) from error

    try:
        return run.to_params()
    except ParameterError as error:
        raise ConfigError(str(error), path) from error


def parse_config(path: Union[Path, str], overrides: Optional[Dict[str, Any]] = None) -> List[SimParams]:
    '''
    Load a batch file: either one run object or {"runs": [...]}. Values in
    `overrides` (JSON key names, None meaning "not given") replace file values.
    '''
    path = str(path)
    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except OSError as error:
        raise ConfigError(f'cannot read batch file: {error.strerror}', path) from error
    try:
        document = json.loads(text)
    except json.JSONDecodeError as error:
        raise ConfigError(error.msg, path, error.lineno, error.colno) from error

    if isinstance(document, dict) and 'runs' in document:
        extra = sorted(set(document) - {'runs'})
        if extra:
            line, column = _locate(text, extra[0])
            raise ConfigError(f'unknown key "{extra[0]}"', path, line, column, extra[0])
        runs = document['runs']
        if not isinstance(runs, list) or not runs:
            raise ConfigError('"runs" must be a non-empty list', path)
        spans = _run_spans(text, len(runs))
    else:
        runs, spans = [document], [(0, len(text))]

    params = [_build_run(raw, text, path, overrides or {}, span) for raw, span in zip(runs, spans)]
    logger.info('loaded %d run(s) from %s', len(params), path)
    return params
