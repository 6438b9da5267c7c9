"""
Transform-versus-oracle suites: every compositional transform is compared
against the brute-force references in ``naive``.
"""

import logging
import math
import typing

import numpy as np

from ..algebra import linalg
from ..algebra.linalg import OpCounter
from ..transforms import dft, hadamard, walsh
from . import naive
from .report import OracleReport, ReportBuilder, log_report


logger = logging.getLogger(__name__)

DFT_SIZES = (1, 2, 3, 4, 8, 16, 64)
DFT2_SIZES = (1, 2, 4, 8)
PLAN_SIZES = tuple(range(1, 17)) + (32, 64, 128, 255, 256)
HADAMARD_SIZES = (2, 4, 8, 16, 32, 64, 128, 256)
SEPARABLE_SIZES = (1, 2, 4, 8)

INVOLUTION_CASES = 20
VALUE_RANGE = 100

# Per-size tolerances scale with the number of accumulated terms
DFT_TOLERANCE = 1e-9
PARSEVAL_TOLERANCE = 1e-6


def _integers(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.integers(-VALUE_RANGE, VALUE_RANGE + 1, shape)


def check_dft_plans(sizes: typing.Iterable[int]) -> typing.List[OracleReport]:
    ret = []
    for n in sizes:
        plan = dft.build_plan(n)
        builder = ReportBuilder(f'dft-plan[n={n}]', dft.PLAN_TOLERANCE)
        builder.add(linalg.mat_pow(plan.op, n), np.eye(plan.dim), n=n)
        ret.append(builder.build())
    return ret


def check_dft(rng: np.random.Generator, sizes: typing.Iterable[int], cases: int) -> typing.List[OracleReport]:
    ret = []
    for n in sizes:
        oracle = ReportBuilder(f'dft-1d[n={n}]', DFT_TOLERANCE * n)
        linearity = ReportBuilder(f'dft-linearity[n={n}]', DFT_TOLERANCE * n)
        parseval = ReportBuilder(f'dft-parseval[n={n}]', PARSEVAL_TOLERANCE * n)
        for _ in range(cases):
            a, b = rng.uniform(-1, 1, (2, n))
            alpha, beta = rng.uniform(-2, 2, 2)

            x = dft.dft_1d(a).coefficients
            oracle.add(x, naive.naive_dft(a).coefficients, signal=a)

            combined = dft.dft_1d(alpha * a + beta * b).coefficients
            separate = alpha * x + beta * dft.dft_1d(b).coefficients
            linearity.add(combined, separate, a=a, b=b, alpha=alpha, beta=beta)

            parseval.add(np.sum(x ** 2), n * np.sum(a ** 2), signal=a)
        ret.extend([oracle.build(), linearity.build(), parseval.build()])
    return ret


def check_dft_2d(rng: np.random.Generator, sizes: typing.Iterable[int], cases: int) -> typing.List[OracleReport]:
    ret = []
    for n in sizes:
        builder = ReportBuilder(f'dft-2d[n={n}]', DFT_TOLERANCE * n * n)
        for _ in range(cases):
            a = rng.uniform(-1, 1, (n, n))
            builder.add(dft.dft_2d(a).coefficients, naive.naive_dft2(a).coefficients, signal=a)
        ret.append(builder.build())
    return ret


def check_hadamard(
        rng: np.random.Generator,
        sizes: typing.Iterable[int],
        cases: int,
        involution_cases: int = INVOLUTION_CASES,
) -> typing.List[OracleReport]:
    ret = []
    for n in sizes:
        reference = naive.naive_hadamard_matrix(n)

        matrix = ReportBuilder(f'hadamard-sylvester[n={n}]')
        h = hadamard.sylvester(n)
        matrix.add(h, reference, n=n)
        matrix.add(h @ h.T, n * np.eye(n, dtype=np.int64), n=n)

        embedding = ReportBuilder(f'hadamard-embedding[n={n}]')
        staged = ReportBuilder(f'hadamard-staged[n={n}]')
        involution = ReportBuilder(f'hadamard-involution[n={n}]')
        ops = ReportBuilder(f'hadamard-staged-ops[n={n}]')
        bound = 4 * n * int(math.log2(n))
        for i in range(cases):
            x = _integers(rng, n)
            expected = naive.naive_transform(reference, x)
            embedding.add(hadamard.wht_embedding(x), expected, signal=x)

            counter = OpCounter()
            y = hadamard.wht_staged(x, counter)
            staged.add(y, expected, signal=x)
            ops.add_error(max(0, counter.count - bound), count=counter.count, bound=bound)

            if i < involution_cases:
                involution.add(hadamard.wht_staged(y), n * x, signal=x)
        ret.extend([matrix.build(), embedding.build(), staged.build(), involution.build(), ops.build()])
    return ret


def check_sparse_rule() -> OracleReport:
    """
    The 2-sparse embedding folds (x1, x2) to (x1 + x2, x1 + x2) rather
    than H_2 x, so this report is expected to fail.
    """
    plan = hadamard.build_plan(2)
    x = linalg.vector([3, 5])
    builder = ReportBuilder('hadamard-sparse-rule', expected=False)
    builder.add(hadamard.fold_v(hadamard.build_v_sparse(x, plan), plan), naive.naive_transform(plan.hadamard, x), signal=x)
    return builder.build()


def check_walsh(rng: np.random.Generator, sizes: typing.Iterable[int], cases: int) -> typing.List[OracleReport]:
    ret = []
    for n in sizes:
        reference = naive.naive_walsh_matrix(n)
        plan = walsh.build_plan(n)

        order = ReportBuilder(f'walsh-sequency[n={n}]')
        order.add([walsh.sequency_of_row(row) for row in plan.walsh], list(range(n)), n=n)
        order.add(plan.walsh, reference, n=n)

        permutation = ReportBuilder(f'walsh-permutation[n={n}]')
        permutation.add(
            list(plan.perm.image), naive.naive_sequency_order(naive.naive_hadamard_matrix(n)), n=n)

        embedding = ReportBuilder(f'walsh-embedding[n={n}]')
        conjugation = ReportBuilder(f'walsh-conjugation[n={n}]')
        for _ in range(cases):
            x = _integers(rng, n)
            conjugated = walsh.fold_conjugated(x, plan)
            embedding.add(conjugated, naive.naive_transform(reference, x), signal=x)
            conjugation.add(conjugated, walsh.fold_permuted(x, plan), signal=x)
        ret.extend([order.build(), permutation.build(), embedding.build(), conjugation.build()])
    return ret


def check_separable(rng: np.random.Generator, sizes: typing.Iterable[int], cases: int) -> typing.List[OracleReport]:
    ret = []
    for n in sizes:
        h = naive.naive_hadamard_matrix(n)
        w = naive.naive_walsh_matrix(n)
        hadamard_2d = ReportBuilder(f'hadamard-2d[n={n}]')
        walsh_2d = ReportBuilder(f'walsh-2d[n={n}]')
        for _ in range(cases):
            x = _integers(rng, (n, n))
            hadamard_2d.add(hadamard.wht_2d(x, staged=True), naive.naive_transform_2d(h, x), signal=x)
            walsh_2d.add(walsh.walsh_2d(x), naive.naive_transform_2d(w, x), signal=x)
        ret.extend([hadamard_2d.build(), walsh_2d.build()])
    return ret


def run_transform_suites(
        seed: int,
        cases: int,
        dft_sizes: typing.Iterable[int] = DFT_SIZES,
        dft2_sizes: typing.Iterable[int] = DFT2_SIZES,
        plan_sizes: typing.Iterable[int] = PLAN_SIZES,
        hadamard_sizes: typing.Iterable[int] = HADAMARD_SIZES,
        separable_sizes: typing.Iterable[int] = SEPARABLE_SIZES,
) -> typing.List[OracleReport]:
    """
    Run every transform suite with ``cases`` random signals per size.
    """
    if cases < 1:
        raise ValueError(f'the transform suites need at least one case, got {cases}')
    rng = np.random.default_rng(seed)
    hadamard_sizes = list(hadamard_sizes)

    reports: typing.List[OracleReport] = []
    reports.extend(check_dft_plans(plan_sizes))
    reports.extend(check_dft(rng, dft_sizes, cases))
    reports.extend(check_dft_2d(rng, dft2_sizes, cases))
    reports.extend(check_hadamard(rng, hadamard_sizes, cases))
    reports.append(check_sparse_rule())
    reports.extend(check_walsh(rng, hadamard_sizes, cases))
    reports.extend(check_separable(rng, separable_sizes, min(cases, INVOLUTION_CASES)))
    return [log_report(r) for r in reports]
