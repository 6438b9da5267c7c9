"""
Per-axis generator families and their commutation verdict.
"""

from __future__ import annotations

import itertools
import logging
import typing

import numpy as np

from . import linalg
from .linalg import Matrix, ScalarKind


logger = logging.getLogger(__name__)

COMMUTE_TOLERANCE = 1e-10

DIAGONAL_LOW = 0.5
DIAGONAL_HIGH = 2.0


class CommutationReport(typing.NamedTuple):
    max_commutator: typing.Union[int, float]
    pairs_checked: int


def verify_commuting(family: typing.Sequence[Matrix]) -> CommutationReport:
    dims = {m.shape for m in family}
    if len(dims) > 1:
        raise linalg.DimensionError(f'generators of different shapes: {sorted(dims)}')

    worst: typing.Union[int, float] = 0
    pairs = 0
    for a, b in itertools.combinations(family, 2):
        worst = max(worst, linalg.max_abs_diff(linalg.mat_mul(a, b), linalg.mat_mul(b, a)))
        pairs += 1
    return CommutationReport(worst, pairs)


class GeneratorFamily:
    """
    Ordered operators R_1 ... R_D, one per axis, with memoized integer powers.
    """

    axes: typing.Tuple[Matrix, ...]
    report: CommutationReport
    commuting: bool

    def __init__(self, axes: typing.Sequence[Matrix]) -> None:
        if not axes:
            raise ValueError('a generator family needs at least one axis')
        for m in axes:
            if m.ndim != 2 or m.shape[0] != m.shape[1]:
                raise linalg.DimensionError(f'generator must be square, got shape {m.shape}')
        linalg.same_kind(*axes)

        self.axes = tuple(axes)
        self.report = verify_commuting(self.axes)
        if self.kind == ScalarKind.integer:
            self.commuting = self.report.max_commutator == 0
        else:
            self.commuting = self.report.max_commutator <= COMMUTE_TOLERANCE
        self._powers: typing.Dict[typing.Tuple[int, int], Matrix] = {}

        logger.debug(
            'Generator family: %d axes of dimension %d, max commutator %s',
            len(self.axes), self.dim, self.report.max_commutator,
        )

    @property
    def dim(self) -> int:
        return self.axes[0].shape[0]

    @property
    def kind(self) -> ScalarKind:
        return linalg.kind_of(self.axes[0])

    def __len__(self) -> int:
        return len(self.axes)

    def power(self, axis: int, p: int) -> Matrix:
        key = (axis, p)
        ret = self._powers.get(key)
        if ret is None:
            step = 1 if p > 0 else -1
            prev = self._powers.get((axis, p - step))
            if p != 0 and prev is not None:
                ret = linalg.mat_mul(prev, self.axes[axis] if p > 0 else linalg.mat_pow(self.axes[axis], -1))
            else:
                ret = linalg.mat_pow(self.axes[axis], p)
            self._powers[key] = ret
        return ret

    def __repr__(self) -> str:
        return f'GeneratorFamily(axes={len(self.axes)}, dim={self.dim}, commuting={self.commuting})'


def family_from_powers(base: Matrix, exps: typing.Sequence[int]) -> GeneratorFamily:
    return GeneratorFamily([linalg.mat_pow(base, e) for e in exps])


def family_diagonal_random(d: int, axes: int, seed: int) -> GeneratorFamily:
    if d < 1 or axes < 1:
        raise ValueError(f'dimension and axis count must be positive, got d={d}, D={axes}')
    rng = np.random.default_rng(seed)
    return GeneratorFamily([
        linalg.diag(rng.uniform(DIAGONAL_LOW, DIAGONAL_HIGH, d))
        for _ in range(axes)
    ])


def family_rotated_diagonal(d: int, axes: int, seed: int) -> GeneratorFamily:
    """
    Dense commuting operators Q D_i Q^T sharing one random orthogonal Q.
    """
    if d < 1 or axes < 1:
        raise ValueError(f'dimension and axis count must be positive, got d={d}, D={axes}')
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.standard_normal((d, d)))
    return GeneratorFamily([
        linalg.matrix(q @ np.diag(rng.uniform(DIAGONAL_LOW, DIAGONAL_HIGH, d)) @ q.T)
        for _ in range(axes)
    ])


def noncommuting_fixture(kind: ScalarKind = ScalarKind.float) -> GeneratorFamily:
    """
    The swap [[0, 1], [1, 0]] next to diag(1, 2); their commutator is nonzero.
    """
    return GeneratorFamily([
        linalg.matrix([[0, 1], [1, 0]], kind),
        linalg.diag([1, 2], kind),
    ])
