"""
D-dimensional elements (a, R_1^n_1, ..., R_D^n_D) with one composition per
axis.

Composing along axis i is defined when every other exponent agrees:

    (a, ..., R_i^n, ...) o_i (b, ..., R_i^k, ...) = (a + R_i^n b, ..., R_i^(n+k), ...)

If the generators commute pairwise, the axis compositions satisfy the
interchange law and any order of folding a grid gives the same element.
"""

from __future__ import annotations

import itertools
import logging
import typing

import numpy as np

from . import linalg
from .generators import GeneratorFamily
from .linalg import Vector
from ..oracle.report import OracleReport, ReportBuilder


__all__ = [
    'AxisElement',
    'GeneratorFamily',
    'ScheduleStep',
    'axis_order_schedule',
    'check_interchange',
    'compose_axis',
    'fold_grid',
    'fold_grid_scheduled',
    'identity_axis',
    'interchange_quadruple',
    'random_schedule',
]

logger = logging.getLogger(__name__)

INTERCHANGE_TOLERANCE = 1e-9


class AxisMismatchError(ValueError):
    pass


class FamilyMismatchError(ValueError):
    pass


class NonCommutingFamilyError(ValueError):
    pass


class ScheduleError(ValueError):
    pass


class AxisElement:
    vec: Vector
    exponents: typing.Tuple[int, ...]
    family: GeneratorFamily

    def __init__(self, vec: Vector, exponents: typing.Sequence[int], family: GeneratorFamily) -> None:
        if vec.ndim != 1 or vec.shape[0] != family.dim:
            raise linalg.DimensionError(f'vector of shape {vec.shape} does not match family dimension {family.dim}')
        if len(exponents) != len(family):
            raise AxisMismatchError(f'{len(exponents)} exponents given for {len(family)} axes')
        linalg.same_kind(vec, family.axes[0])
        self.vec = vec
        self.exponents = tuple(int(e) for e in exponents)
        self.family = family

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AxisElement):
            return NotImplemented
        return (
            self.family is other.family
            and self.exponents == other.exponents
            and bool(np.array_equal(self.vec, other.vec))
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f'AxisElement(vec={self.vec.tolist()}, exponents={self.exponents})'


def _check_axis(family: GeneratorFamily, axis: int) -> None:
    if not 0 <= axis < len(family):
        raise ValueError(f'axis {axis} out of range for a family with {len(family)} axes')


def compose_axis(l: AxisElement, r: AxisElement, axis: int) -> AxisElement:
    if l.family is not r.family:
        raise FamilyMismatchError('elements belong to different generator families')
    _check_axis(l.family, axis)
    for j, (el, er) in enumerate(zip(l.exponents, r.exponents)):
        if j != axis and el != er:
            raise AxisMismatchError(f'composing along axis {axis} needs equal exponents on axis {j}, got {el} and {er}')

    exponents = list(l.exponents)
    exponents[axis] += r.exponents[axis]
    return AxisElement(
        linalg.vec_add(l.vec, linalg.mat_vec(l.family.power(axis, l.exponents[axis]), r.vec)),
        exponents,
        l.family,
    )


def identity_axis(partner: AxisElement, axis: int) -> AxisElement:
    """
    Neutral element for composing with ``partner`` along ``axis``.
    """
    _check_axis(partner.family, axis)
    exponents = list(partner.exponents)
    exponents[axis] = 0
    return AxisElement(linalg.zeros(partner.family.dim, partner.family.kind), exponents, partner.family)


def interchange_quadruple(
        vectors: typing.Sequence[Vector],
        family: GeneratorFamily,
        ax1: int,
        ax2: int,
        n: int, k: int, m: int, q: int,
        base: typing.Optional[typing.Sequence[int]] = None,
) -> typing.Tuple[AxisElement, AxisElement, AxisElement, AxisElement]:
    """
    Elements a, b, c, d with the exponent pattern of the interchange law:
    a = (u, n, m), b = (v, k, m), c = (w, n, q), d = (z, k, q) on (ax1, ax2),
    all other axes taken from ``base``.
    """
    if ax1 == ax2:
        raise ValueError('interchange needs two distinct axes')
    rest = list(base) if base is not None else [0] * len(family)

    def element(vec: Vector, e1: int, e2: int) -> AxisElement:
        exponents = list(rest)
        exponents[ax1] = e1
        exponents[ax2] = e2
        return AxisElement(vec, exponents, family)

    u, v, w, z = vectors
    return element(u, n, m), element(v, k, m), element(w, n, q), element(z, k, q)


def check_interchange(
        a: AxisElement,
        b: AxisElement,
        c: AxisElement,
        d: AxisElement,
        ax1: int = 0,
        ax2: int = 1,
        tolerance: typing.Optional[float] = None,
) -> OracleReport:
    """
    Evaluate (a o_1 b) o_2 (c o_1 d) and (a o_2 c) o_1 (b o_2 d).
    """
    if tolerance is None:
        tolerance = 0 if a.family.kind == linalg.ScalarKind.integer else INTERCHANGE_TOLERANCE

    lhs = compose_axis(compose_axis(a, b, ax1), compose_axis(c, d, ax1), ax2)
    rhs = compose_axis(compose_axis(a, c, ax2), compose_axis(b, d, ax2), ax1)
    if lhs.exponents != rhs.exponents:
        raise AssertionError(f'interchange exponents diverged: {lhs.exponents} != {rhs.exponents}')

    builder = ReportBuilder('interchange', tolerance)
    builder.add(
        lhs.vec, rhs.vec,
        vectors=[a.vec, b.vec, c.vec, d.vec],
        exponents=[a.exponents, b.exponents, c.exponents, d.exponents],
        axes=[ax1, ax2],
    )
    return builder.build()


def _as_grid(grid, family: GeneratorFamily) -> np.ndarray:
    grid = np.asarray(grid)
    if grid.ndim != len(family) + 1:
        raise linalg.DimensionError(f'grid of shape {grid.shape} does not have {len(family)} axes of vectors')
    if grid.size == 0:
        raise ValueError('cannot fold an empty grid')
    if grid.shape[-1] != family.dim:
        raise linalg.DimensionError(f'grid vectors of dimension {grid.shape[-1]} do not match family dimension {family.dim}')
    linalg.same_kind(grid, family.axes[0])
    return grid


def _fold_block(family: GeneratorFamily, block: np.ndarray, axis: int) -> Vector:
    if block.ndim == 1:
        return block
    acc = None
    for i in range(block.shape[0]):
        term = linalg.mat_vec(family.power(axis, i), _fold_block(family, block[i], axis + 1))
        acc = term if acc is None else linalg.vec_add(acc, term)
    return acc


def fold_grid(grid, family: GeneratorFamily) -> AxisElement:
    """
    Compose every element (v_idx, R_1, ..., R_D) of a grid:
    sum over idx of R_1^idx_1 ... R_D^idx_D v_idx, with exponents = grid shape.

    Each row is summed in index order before rows are combined in index order.
    """
    grid = _as_grid(grid, family)
    if not family.commuting:
        raise NonCommutingFamilyError(
            f'grid fold needs commuting generators (max commutator {family.report.max_commutator})')
    return AxisElement(_fold_block(family, grid, 0), grid.shape[:-1], family)


class ScheduleStep(typing.NamedTuple):
    """
    Merge the block at ``origin`` with the block that follows it along ``axis``.
    """

    axis: int
    origin: typing.Tuple[int, ...]


def fold_grid_scheduled(grid, family: GeneratorFamily, schedule: typing.Iterable[ScheduleStep]) -> AxisElement:
    grid = _as_grid(grid, family)
    shape = grid.shape[:-1]
    unit = (1, ) * len(shape)
    blocks = {
        idx: AxisElement(grid[idx], unit, family)
        for idx in itertools.product(*(range(s) for s in shape))
    }

    for step in schedule:
        origin = tuple(step.origin)
        left = blocks.get(origin)
        if left is None:
            raise ScheduleError(f'no block starts at {origin}')
        _check_axis(family, step.axis)
        other = list(origin)
        other[step.axis] += left.exponents[step.axis]
        right = blocks.get(tuple(other))
        if right is None:
            raise ScheduleError(f'no block follows {origin} along axis {step.axis}')
        try:
            merged = compose_axis(left, right, step.axis)
        except AxisMismatchError as e:
            raise ScheduleError(f'cannot merge {origin} along axis {step.axis}: {e}') from e
        del blocks[tuple(other)]
        blocks[origin] = merged

    if len(blocks) != 1:
        raise ScheduleError(f'schedule leaves {len(blocks)} blocks unmerged')
    return blocks[(0, ) * len(shape)]


def axis_order_schedule(shape: typing.Sequence[int], order: typing.Sequence[int]) -> typing.List[ScheduleStep]:
    """
    Fold completely along order[0], then order[1], and so on.  For a 2D grid
    (1, 0) folds each row first, (0, 1) each column first.
    """
    if sorted(order) != list(range(len(shape))):
        raise ScheduleError(f'axis order {list(order)} is not a permutation of the grid axes')
    steps = []
    done: typing.Set[int] = set()
    for axis in order:
        ranges = [
            range(1) if a in done or a == axis else range(s)
            for a, s in enumerate(shape)
        ]
        for origin in itertools.product(*ranges):
            steps.extend(ScheduleStep(axis, origin) for _ in range(shape[axis] - 1))
        done.add(axis)
    return steps


def _random_tree(
        origin: typing.Tuple[int, ...],
        extent: typing.Tuple[int, ...],
        rng: np.random.Generator,
        steps: typing.List[ScheduleStep],
) -> None:
    splittable = [a for a, e in enumerate(extent) if e > 1]
    if not splittable:
        return
    axis = splittable[int(rng.integers(len(splittable)))]
    cut = int(rng.integers(1, extent[axis]))

    left_extent = list(extent)
    left_extent[axis] = cut
    right_origin = list(origin)
    right_origin[axis] += cut
    right_extent = list(extent)
    right_extent[axis] -= cut

    _random_tree(origin, tuple(left_extent), rng, steps)
    _random_tree(tuple(right_origin), tuple(right_extent), rng, steps)
    steps.append(ScheduleStep(axis, origin))


def random_schedule(shape: typing.Sequence[int], rng: np.random.Generator) -> typing.List[ScheduleStep]:
    """
    A random merge tree: the grid is cut along random axes at random points
    until single cells remain, and the pieces are merged back bottom-up.
    """
    steps: typing.List[ScheduleStep] = []
    _random_tree((0, ) * len(shape), tuple(shape), rng, steps)
    return steps
