"""
Seeded checks of the algebraic laws: associativity, identity, interchange and
order independence of grid folds, plus the fixtures where the laws are known
to break.
"""

import logging
import typing

import numpy as np

from ..algebra import generators, linalg, monoid, multiaxis
from ..algebra.linalg import ScalarKind
from .report import OracleReport, ReportBuilder, log_report


logger = logging.getLogger(__name__)

LAW_TOLERANCE = 1e-9

MAX_DIM = 8
MAX_EXPONENT = 6
MAX_SEQUENCE = 32
MAX_GRID = 6


def _seed(rng: np.random.Generator) -> int:
    return int(rng.integers(2 ** 32))


def _float_element(rng: np.random.Generator, d: int, scale: float = 1.0) -> monoid.MonoidElement:
    return monoid.MonoidElement(
        linalg.vector(rng.uniform(-1, 1, d)),
        linalg.matrix(rng.uniform(-1, 1, (d, d)) * scale),
    )


def _integer_element(rng: np.random.Generator, d: int) -> monoid.MonoidElement:
    return monoid.MonoidElement(
        linalg.vector(rng.integers(-3, 4, d)),
        linalg.matrix(rng.integers(-3, 4, (d, d))),
    )


def _commuting_family(rng: np.random.Generator, d: int, axes: int) -> generators.GeneratorFamily:
    if rng.integers(2):
        return generators.family_rotated_diagonal(d, axes, _seed(rng))
    return generators.family_diagonal_random(d, axes, _seed(rng))


def check_associativity(rng: np.random.Generator, cases: int) -> typing.List[OracleReport]:
    floats = ReportBuilder('associativity', LAW_TOLERANCE)
    integers = ReportBuilder('associativity-integer')
    for _ in range(cases):
        d = int(rng.integers(1, MAX_DIM + 1))
        a, b, c = (_float_element(rng, d) for _ in range(3))
        lhs, rhs = (a @ b) @ c, a @ (b @ c)
        floats.add_error(lhs.max_abs_diff(rhs), lhs=lhs.vec, rhs=rhs.vec)

        a, b, c = (_integer_element(rng, d) for _ in range(3))
        lhs, rhs = (a @ b) @ c, a @ (b @ c)
        integers.add_error(lhs.max_abs_diff(rhs), lhs=lhs.vec, rhs=rhs.vec)
    return [floats.build(), integers.build()]


def check_identity(rng: np.random.Generator, cases: int) -> OracleReport:
    builder = ReportBuilder('identity')
    for _ in range(cases):
        d = int(rng.integers(1, MAX_DIM + 1))
        e = _float_element(rng, d)
        unit = monoid.identity_element(d)
        builder.add_error(max((unit @ e).max_abs_diff(e), (e @ unit).max_abs_diff(e)), element=e.vec)
    return builder.build()


def check_commutativity_witness() -> OracleReport:
    """
    ((1, 0), swap) and ((0, 2), I) give different results in either order.
    """
    l = monoid.MonoidElement(linalg.vector([1, 0]), linalg.matrix([[0, 1], [1, 0]]))
    r = monoid.MonoidElement(linalg.vector([0, 2]), linalg.identity(2, ScalarKind.integer))
    builder = ReportBuilder('commutativity-witness', expected=False)
    builder.add((l @ r).vec, (r @ l).vec, left=l.vec, right=r.vec)
    return builder.build()


def check_fold_closed_form(rng: np.random.Generator, cases: int) -> OracleReport:
    builder = ReportBuilder('fold-closed-form', LAW_TOLERANCE)
    for _ in range(cases):
        d = int(rng.integers(1, MAX_DIM + 1))
        length = int(rng.integers(1, MAX_SEQUENCE + 1))
        # Entries scaled by 1/d so long products stay bounded
        elems = [_float_element(rng, d, 1 / d) for _ in range(length)]
        folded, closed = monoid.fold_sequence(elems), monoid.closed_form(elems)
        builder.add_error(folded.max_abs_diff(closed), length=length, lhs=folded.vec, rhs=closed.vec)
    return builder.build()


def _random_quadruple(rng: np.random.Generator, family: generators.GeneratorFamily, vectors):
    axes = len(family)
    ax1, ax2 = (int(i) for i in rng.choice(axes, 2, replace=False))
    n, k, m, q = (int(i) for i in rng.integers(0, MAX_EXPONENT + 1, 4))
    base = [int(i) for i in rng.integers(0, 4, axes)]
    return multiaxis.interchange_quadruple(vectors, family, ax1, ax2, n, k, m, q, base), ax1, ax2


def check_interchange(rng: np.random.Generator, cases: int) -> typing.List[OracleReport]:
    floats = ReportBuilder('interchange', LAW_TOLERANCE)
    integers = ReportBuilder('interchange-integer')
    for _ in range(cases):
        d = int(rng.integers(1, MAX_DIM + 1))
        axes = int(rng.integers(2, 5))
        family = _commuting_family(rng, d, axes)
        vectors = [linalg.vector(rng.uniform(-1, 1, d)) for _ in range(4)]
        quadruple, ax1, ax2 = _random_quadruple(rng, family, vectors)
        report = multiaxis.check_interchange(*quadruple, ax1=ax1, ax2=ax2)
        floats.add_error(report.max_abs_error, **(report.witness or {}))

        d = int(rng.integers(1, 5))
        base = linalg.matrix(rng.integers(-1, 2, (d, d)))
        family = generators.family_from_powers(base, [int(i) for i in rng.integers(0, 3, axes)])
        vectors = [linalg.vector(rng.integers(-3, 4, d)) for _ in range(4)]
        quadruple, ax1, ax2 = _random_quadruple(rng, family, vectors)
        report = multiaxis.check_interchange(*quadruple, ax1=ax1, ax2=ax2)
        integers.add_error(report.max_abs_error, **(report.witness or {}))
    return [floats.build(), integers.build()]


def check_interchange_counterexample() -> OracleReport:
    family = generators.noncommuting_fixture()
    vectors = [linalg.vector(v) for v in ([1.0, 0.0], [0.0, 1.0], [1.0, 1.0], [1.0, -1.0])]
    report = multiaxis.check_interchange(*multiaxis.interchange_quadruple(vectors, family, 0, 1, 1, 1, 1, 1))
    builder = ReportBuilder('interchange-counterexample', LAW_TOLERANCE, expected=False)
    builder.add_error(report.max_abs_error, **(report.witness or {}))
    return builder.build()


def check_axis_associativity(rng: np.random.Generator, cases: int) -> OracleReport:
    builder = ReportBuilder('axis-associativity', LAW_TOLERANCE)
    for _ in range(cases):
        d = int(rng.integers(1, MAX_DIM + 1))
        axes = int(rng.integers(1, 5))
        family = _commuting_family(rng, d, axes)
        axis = int(rng.integers(axes))
        shared = [int(i) for i in rng.integers(0, MAX_EXPONENT + 1, axes)]

        def element():
            exponents = list(shared)
            exponents[axis] = int(rng.integers(0, MAX_EXPONENT + 1))
            return multiaxis.AxisElement(linalg.vector(rng.uniform(-1, 1, d)), exponents, family)

        a, b, c = element(), element(), element()
        lhs = multiaxis.compose_axis(multiaxis.compose_axis(a, b, axis), c, axis)
        rhs = multiaxis.compose_axis(a, multiaxis.compose_axis(b, c, axis), axis)
        builder.add(lhs.vec, rhs.vec, axis=axis, exponents=[a.exponents, b.exponents, c.exponents])
    return builder.build()


def check_grid_order(
        rng: np.random.Generator,
        grids: int,
        schedules: int,
) -> OracleReport:
    builder = ReportBuilder('grid-order-independence', LAW_TOLERANCE)
    for _ in range(grids):
        shape = tuple(int(i) for i in rng.integers(1, MAX_GRID + 1, 2))
        d = int(rng.integers(1, MAX_DIM + 1))
        family = _commuting_family(rng, d, 2)
        grid = rng.uniform(-1, 1, shape + (d, ))
        reference = multiaxis.fold_grid(grid, family)

        plans = [
            multiaxis.axis_order_schedule(shape, (1, 0)),
            multiaxis.axis_order_schedule(shape, (0, 1)),
        ]
        plans.extend(multiaxis.random_schedule(shape, rng) for _ in range(schedules))
        for schedule in plans:
            result = multiaxis.fold_grid_scheduled(grid, family, schedule)
            if result.exponents != reference.exponents:
                raise AssertionError(f'scheduled fold exponents {result.exponents} != {reference.exponents}')
            builder.add(result.vec, reference.vec, shape=list(shape), schedule=[list(s) for s in schedule])
    return builder.build()


def check_grid_counterexample() -> OracleReport:
    family = generators.noncommuting_fixture()
    grid = np.array([[[1.0, 0.0], [0.0, 1.0]], [[1.0, 1.0], [1.0, -1.0]]])
    shape = grid.shape[:2]
    rows_first = multiaxis.fold_grid_scheduled(grid, family, multiaxis.axis_order_schedule(shape, (1, 0)))
    columns_first = multiaxis.fold_grid_scheduled(grid, family, multiaxis.axis_order_schedule(shape, (0, 1)))
    builder = ReportBuilder('grid-order-counterexample', LAW_TOLERANCE, expected=False)
    builder.add(rows_first.vec, columns_first.vec, grid=grid)
    return builder.build()


def check_grid_degenerate(rng: np.random.Generator, cases: int) -> OracleReport:
    builder = ReportBuilder('grid-1d-closed-form', 1e-12)
    for _ in range(cases):
        d = int(rng.integers(1, MAX_DIM + 1))
        length = int(rng.integers(1, MAX_SEQUENCE + 1))
        op = linalg.matrix(rng.uniform(-1, 1, (d, d)) / d)
        family = generators.GeneratorFamily([op])
        sequence = rng.uniform(-1, 1, (length, d))
        folded = multiaxis.fold_grid(sequence, family)
        closed = monoid.closed_form([monoid.MonoidElement(linalg.vector(v), op) for v in sequence])
        builder.add(folded.vec, closed.vec, length=length)
    return builder.build()


def run_law_suite(
        seed: int,
        cases: int,
        grids: int = 50,
        schedules: int = 20,
) -> typing.List[OracleReport]:
    if cases < 1:
        raise ValueError(f'the law suite needs at least one case, got {cases}')
    rng = np.random.default_rng(seed)

    reports: typing.List[OracleReport] = []
    reports.extend(check_associativity(rng, cases))
    reports.append(check_identity(rng, cases))
    reports.append(check_commutativity_witness())
    reports.append(check_fold_closed_form(rng, cases))
    reports.extend(check_interchange(rng, cases))
    reports.append(check_interchange_counterexample())
    reports.append(check_axis_associativity(rng, cases))
    reports.append(check_grid_order(rng, min(cases, grids), schedules))
    reports.append(check_grid_counterexample())
    reports.append(check_grid_degenerate(rng, cases))
    return [log_report(r) for r in reports]
