import logging

import numpy as np

from .base import BaseCommand
from .transform import TransformKind, apply, apply_oracle, check_signal, load_signal, resolve_dims
from ..algebra.linalg import OpCounter
from ..api.result import BenchOps, BenchResult, BenchResultSchema
from ..utils import argparse_ext


logger = logging.getLogger(__name__)


class BenchCommand(BaseCommand):
    argparser_name = 'bench'
    argparser_help = 'count scalar operations of the compositional and brute-force paths'
    argparser_usage = '%(prog)s --kind KIND (--n N | --input FILE) [--seed SEED] [--dims {1,2}]'

    @classmethod
    def _argparse_register(cls, parser):
        super()._argparse_register(parser)

        parser.add_argument(
            '--kind',
            action=argparse_ext.ActionEnum,
            enum=TransformKind,
            help='transform to count',
            required=True,
        )
        parser.add_argument(
            '--n',
            type=int,
            help='transform size',
        )
        parser.add_argument(
            '--input',
            help='JSON input file (default: seeded random input of size N)',
            metavar='FILE',
        )
        parser.add_argument(
            '--seed',
            type=int,
            help='random seed (default: config bench.seed)',
        )
        parser.add_argument(
            '--dims',
            type=int,
            choices=(1, 2),
            help='number of input dimensions (default: 1, 2 for dft2)',
        )

    def __init__(self, *, kind, n=None, input=None, seed=None, dims=None, **kw):
        super().__init__(**kw)

        if n is None and input is None:
            self._error(self.argparser, 'one of --n or --input is required')
        if n is not None and n < 1:
            self._error(self.argparser, f'size must be positive, got {n}')

        self.kind = kind
        self.n = n
        self.input = input
        self.seed = self.option_or_config(seed, 'bench.seed')
        self.dims = dims

    def random_signal(self, dims: int) -> np.ndarray:
        rng = np.random.default_rng(self.seed)
        limit = self.config_get('bench.value_range')
        shape = (self.n, ) * dims
        if self.kind.is_dft:
            return rng.uniform(-limit, limit, shape)
        return rng.integers(-limit, limit + 1, shape)

    def __call__(self) -> int:
        dims = resolve_dims(self.kind, self.dims)
        if self.input is not None:
            x = load_signal(self.input)
        else:
            x = self.random_signal(dims)
        n = check_signal(x, dims, self.n)

        embedding = OpCounter()
        apply(self.kind, x, dims, embedding, staged=False)

        staged = None
        if not self.kind.is_dft:
            staged = OpCounter()
            apply(self.kind, x, dims, staged, staged=True)

        oracle = OpCounter()
        apply_oracle(self.kind, x, dims, oracle)

        ops = BenchOps(embedding.count, oracle.count, staged.count if staged else None)
        logger.info('%s n=%d: %s', self.kind.value, n, ops)
        self.write(BenchResultSchema(), BenchResult(self.kind.value, n, dims, ops))
        return 0
