from typing import Optional


class QFrontError(Exception):
    '''Base class for every error raised by qfront.'''


class DomainError(QFrontError, ValueError):
    '''Argument outside the supported envelope of a function.'''


class BoundaryError(QFrontError, IndexError):
    '''Operator evaluated on the fixed outer boundary of the quadrant.'''


class ParameterError(QFrontError, ValueError):
    '''Inconsistent simulation or model parameters.'''


class InstabilityError(QFrontError, RuntimeError):
    def __init__(self, step_index: int, message: str = ''):
        self.step_index = step_index
        super().__init__(message or f'non-finite displacement detected at step {step_index}')


class CoverageError(QFrontError, ValueError):
    '''Series does not cover the requested time window.'''


class FrontError(QFrontError, ValueError):
    '''No quasi-front peak in the series.'''


class ManifestError(QFrontError):
    '''Output directory lacks (or has an unreadable) run manifest.'''


class ConfigError(QFrontError, ValueError):
    def __init__(
        self,
        message: str,
        path: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
        key: Optional[str] = None,
    ):
        self.path = path
        self.line = line
        self.column = column
        self.key = key
        where = ''
        if path:
            where = f'{path}'
            if line is not None:
                where += f':{line}:{column}'
            where += ': '
        super().__init__(where + message)
