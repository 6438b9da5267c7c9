import logging

from .base import BaseCommand
from ..api.result import CheckResult, CheckResultSchema
from ..oracle.laws import run_law_suite
from ..oracle.suites import run_transform_suites


logger = logging.getLogger(__name__)


class CheckCommand(BaseCommand):
    argparser_name = 'check'
    argparser_help = 'run the algebraic law and transform oracle suites'
    argparser_usage = '%(prog)s [--seed SEED] [--cases N]'

    @classmethod
    def _argparse_register(cls, parser):
        super()._argparse_register(parser)

        parser.add_argument(
            '--seed',
            type=int,
            help='random seed (default: config check.seed)',
        )
        parser.add_argument(
            '--cases',
            type=int,
            help='random cases per law (default: config check.cases)',
        )

    def __init__(self, *, seed=None, cases=None, **kw):
        super().__init__(**kw)

        self.seed = self.option_or_config(seed, 'check.seed')
        self.cases = self.option_or_config(cases, 'check.cases')
        if self.seed < 0:
            self._error(self.argparser, f'seed must not be negative, got {self.seed}')
        if self.cases < 1:
            self._error(self.argparser, f'cases must be at least 1, got {self.cases}')

    def __call__(self) -> int:
        logger.info('Running law suite, seed %d, %d cases', self.seed, self.cases)
        reports = run_law_suite(
            self.seed,
            self.cases,
            grids=self.config_get('check.grids'),
            schedules=self.config_get('check.schedules'),
        )

        logger.info('Running transform suites')
        reports.extend(run_transform_suites(
            self.seed,
            min(self.cases, self.config_get('check.transform_cases')),
            dft_sizes=self.config_get('check.dft_sizes'),
            dft2_sizes=self.config_get('check.dft2_sizes'),
            plan_sizes=self.config_get('check.plan_sizes'),
            hadamard_sizes=self.config_get('check.hadamard_sizes'),
        ))

        result = CheckResult(self.seed, self.cases, reports)
        self.write(CheckResultSchema(), result)

        if not result.passed:
            for r in reports:
                if not r.ok:
                    logger.error('Unexpected outcome for %s', r.name)
            return 1
        return 0
