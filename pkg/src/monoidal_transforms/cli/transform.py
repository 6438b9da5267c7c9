import enum
import json
import logging
import typing

import numpy as np

from .base import BaseCommand
from ..algebra.linalg import OpCounter, ScalarKind, kind_of
from ..api.result import TransformResult, TransformResultSchema
from ..oracle import naive
from ..oracle.report import OracleReport, ReportBuilder, log_report
from ..transforms import dft, hadamard, walsh
from ..utils import argparse_ext
from ..utils.marshmallow.fields_ext import Signal


logger = logging.getLogger(__name__)

VERIFY_TOLERANCE = 1e-9


@enum.unique
class TransformKind(enum.Enum):
    dft = 'dft'
    dft2 = 'dft2'
    hadamard = 'hadamard'
    hadamard_staged = 'hadamard-staged'
    walsh = 'walsh'

    @property
    def is_dft(self) -> bool:
        return self in (TransformKind.dft, TransformKind.dft2)


def load_signal(path: str) -> np.ndarray:
    logger.debug('Reading input from %s', path)
    with open(path) as f:
        value = json.load(f)
    return Signal().deserialize(value)


def resolve_dims(kind: TransformKind, dims: typing.Optional[int]) -> int:
    if kind == TransformKind.dft2:
        if dims == 1:
            raise ValueError('dft2 is a two dimensional transform')
        return 2
    return dims or 1


def check_signal(x: np.ndarray, dims: int, n: typing.Optional[int] = None) -> int:
    """
    Return the transform size of ``x``, refusing signals of the wrong shape.
    """
    if x.ndim != dims:
        raise ValueError(f'expected a {dims} dimensional input, got {x.ndim} dimensions')
    if dims == 2 and x.shape[0] != x.shape[1]:
        raise ValueError(f'expected a square input, got shape {x.shape}')
    if n is not None and x.shape[0] != n:
        raise ValueError(f'input has size {x.shape[0]}, not {n}')
    return x.shape[0]


def apply(
        kind: TransformKind,
        x: np.ndarray,
        dims: int,
        counter: typing.Optional[OpCounter] = None,
        staged: typing.Optional[bool] = None,
) -> np.ndarray:
    """
    Run the compositional transform.  ``staged`` picks the per-bit passes for
    hadamard and walsh and defaults to what the kind names.
    """
    if kind.is_dft:
        if dims == 2:
            return dft.dft_2d(x, counter).coefficients
        return dft.dft_1d(x, counter).coefficients

    if staged is None:
        staged = kind == TransformKind.hadamard_staged
    if kind == TransformKind.walsh:
        if dims == 2:
            return walsh.walsh_2d(x, staged, counter)
        return walsh.walsh_staged(x, counter) if staged else walsh.walsh_embedding(x, counter)

    if dims == 2:
        return hadamard.wht_2d(x, staged, counter)
    return hadamard.wht_staged(x, counter) if staged else hadamard.wht_embedding(x, counter)


def apply_oracle(kind: TransformKind, x: np.ndarray, dims: int, counter: typing.Optional[OpCounter] = None) -> np.ndarray:
    n = x.shape[0]
    if kind.is_dft:
        if dims == 2:
            return naive.naive_dft2(x, counter).coefficients
        return naive.naive_dft(x, counter).coefficients
    if kind == TransformKind.walsh:
        m = naive.naive_walsh_matrix(n)
    else:
        m = naive.naive_hadamard_matrix(n)
    if dims == 2:
        return naive.naive_transform_2d(m, x, counter)
    return naive.naive_transform(m, x, counter)


def verify_result(kind: TransformKind, x: np.ndarray, dims: int, result: np.ndarray) -> OracleReport:
    n = x.shape[0]
    if kind.is_dft or kind_of(x) == ScalarKind.float:
        tolerance = VERIFY_TOLERANCE * n ** dims
    else:
        tolerance = 0
    builder = ReportBuilder(f'{kind.value}[n={n}]', tolerance)
    builder.add(result, apply_oracle(kind, x, dims), signal=x)
    return log_report(builder.build())


class TransformCommand(BaseCommand):
    argparser_name = 'transform'
    argparser_help = 'apply a transform as a compositional fold'
    argparser_usage = '%(prog)s --kind KIND --input FILE [--n N] [--dims {1,2}] [--verify] [--conjugate]'

    @classmethod
    def _argparse_register(cls, parser):
        super()._argparse_register(parser)

        parser.add_argument(
            '--kind',
            action=argparse_ext.ActionEnum,
            enum=TransformKind,
            help='transform to apply',
            required=True,
        )
        parser.add_argument(
            '--n',
            type=int,
            help='expected transform size, checked against the input',
        )
        parser.add_argument(
            '--input',
            help='JSON file with an array of numbers, or an array of equal length rows',
            metavar='FILE',
            required=True,
        )
        parser.add_argument(
            '--dims',
            type=int,
            choices=(1, 2),
            help='number of input dimensions (default: 1, 2 for dft2)',
        )
        parser.add_argument(
            '--verify',
            action='store_true',
            help='compare the result against the brute-force reference',
        )
        parser.add_argument(
            '--conjugate',
            action='store_true',
            help='emit DFT results with the conventional negative kernel sign',
        )

    def __init__(self, *, kind, input, n=None, dims=None, verify=False, conjugate=False, **kw):
        super().__init__(**kw)

        if conjugate and not kind.is_dft:
            self._error(self.argparser, '--conjugate only applies to dft and dft2')

        self.kind = kind
        self.input = input
        self.n = n
        self.dims = dims
        self.verify = verify
        self.conjugate = conjugate

    def __call__(self) -> int:
        dims = resolve_dims(self.kind, self.dims)
        x = load_signal(self.input)
        n = check_signal(x, dims, self.n)

        result = apply(self.kind, x, dims)

        report = verify_result(self.kind, x, dims, result) if self.verify else None

        if self.conjugate:
            result = result * np.array([1.0, -1.0])

        self.write(TransformResultSchema(), TransformResult(self.kind.value, n, dims, result, report))

        if report is not None and not report.ok:
            return 1
        return 0
