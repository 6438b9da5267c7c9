"""
The Sylvester-ordered Hadamard transform as a fold.

With R = diag(1, -1, 1, -1, ...) we have R^2 = I, and choosing

    v_i = x_i R^(i-1) h_i        (h_i column i of H_n)

makes every term R^(i-1) v_i equal x_i h_i, so that sum_i R^(i-1) v_i = H_n x.
The 2-sparse embedding ``build_v_sparse`` does not reproduce H_n x, not even
for n = 2.

``wht_staged`` treats n = 2^m as m binary axes and runs the 2-point fold once
per pair along each axis, least significant bit first.
"""

from __future__ import annotations

import functools
import logging
import typing

import numpy as np

from ..algebra import linalg
from ..algebra.linalg import Matrix, OpCounter, ScalarKind, Vector
from ..algebra.monoid import fold_shared


logger = logging.getLogger(__name__)


class SizeError(ValueError):
    pass


def check_size(n: int) -> int:
    """
    Return log2(n), refusing anything but a power of two.
    """
    if n < 1 or n & (n - 1):
        raise SizeError(f'transform size must be a power of two, got {n}')
    return n.bit_length() - 1


@functools.lru_cache(maxsize=None)
def sylvester(n: int) -> Matrix:
    check_size(n)
    if n == 1:
        return linalg.matrix([[1]], ScalarKind.integer)
    h = sylvester(n // 2)
    return linalg.matrix(np.block([[h, h], [h, -h]]))


class HadamardPlan:
    n: int
    op: Matrix
    hadamard: Matrix
    columns: Matrix
    cycle: Matrix

    def __init__(self, n: int) -> None:
        check_size(n)
        self.n = n
        self.op = linalg.diag([(-1) ** i for i in range(n)], ScalarKind.integer)
        self.hadamard = sylvester(n)

        # Column i holds R^i h_i (0-based), so that R^i applied to it gives back h_i
        columns = np.array(self.hadamard)
        columns[1::2, 1::2] *= -1
        self.columns = linalg.matrix(columns)
        self.cycle = linalg.diag(np.diagonal(self.op) ** n, ScalarKind.integer)

        if not np.array_equal(linalg.mat_mul(self.op, self.op), linalg.identity(n, ScalarKind.integer)):
            raise RuntimeError(f'R^2 != I for the size {n} plan')

    def __repr__(self) -> str:
        return f'HadamardPlan(n={self.n})'


@functools.lru_cache(maxsize=None)
def build_plan(n: int) -> HadamardPlan:
    plan = HadamardPlan(n)
    logger.debug('Built Hadamard plan for n=%d', n)
    return plan


def _signal(x, n: typing.Optional[int] = None) -> Vector:
    x = linalg.vector(x)
    if n is not None and x.shape[0] != n:
        raise linalg.DimensionError(f'signal of length {x.shape[0]} does not match plan size {n}')
    return x


def build_v(x, plan: HadamardPlan, counter: typing.Optional[OpCounter] = None) -> typing.List[Vector]:
    x = _signal(x, plan.n)
    linalg.check_integer_range(x, plan.n)
    columns = linalg.as_kind(plan.columns, linalg.kind_of(x))
    return [linalg.vec_scale(xi, columns[:, i], counter) for i, xi in enumerate(x)]


def build_v_sparse(x, plan: HadamardPlan) -> typing.List[Vector]:
    """
    The 2-sparse embedding
    v_i = x_i (e_i + e_{i+n/2}) for i <= n/2, x_i (e_{i-n/2} - e_i) otherwise
    (1-based).  It does not fold to H_n x.
    """
    x = _signal(x, plan.n)
    linalg.check_integer_range(x, plan.n)
    if plan.n < 2:
        raise SizeError('the 2-sparse rule needs n >= 2')
    half = plan.n // 2
    ret = []
    for i, xi in enumerate(x):
        e = np.zeros(plan.n, dtype=x.dtype)
        if i < half:
            e[i] = e[i + half] = 1
        else:
            e[i - half] = 1
            e[i] = -1
        ret.append(linalg.vec_scale(xi, linalg.vector(e)))
    return ret


def fold_v(vs: typing.Sequence[Vector], plan: HadamardPlan, counter: typing.Optional[OpCounter] = None) -> Vector:
    kind = linalg.kind_of(vs[0])
    power = linalg.as_kind(plan.cycle, kind) if len(vs) == plan.n else None
    return fold_shared(vs, linalg.as_kind(plan.op, kind), counter, power).vec


def wht_embedding(x, counter: typing.Optional[OpCounter] = None) -> Vector:
    x = _signal(x)
    plan = build_plan(x.shape[0])
    return fold_v(build_v(x, plan, counter), plan, counter)


def wht_staged(x, counter: typing.Optional[OpCounter] = None) -> Vector:
    x = _signal(x)
    n = x.shape[0]
    passes = check_size(n)
    linalg.check_integer_range(x, n)
    pair_plan = build_plan(2)
    out = np.array(x)

    for bit in range(passes):
        stride = 1 << bit
        for i in range(n):
            if i & stride:
                continue
            j = i | stride
            pair = linalg.vector([out[i], out[j]], linalg.kind_of(x))
            out[i], out[j] = fold_v(build_v(pair, pair_plan, counter), pair_plan, counter)
        logger.debug('Staged Hadamard pass %d of %d done', bit + 1, passes)

    return linalg.vector(out)


def wht_2d(x, staged: bool = False, counter: typing.Optional[OpCounter] = None) -> np.ndarray:
    """
    H X H^T: the 1D transform along every row, then along every column.
    """
    x = np.asarray(x)
    if x.ndim != 2 or x.shape[0] != x.shape[1] or x.size == 0:
        raise linalg.DimensionError(f'expected a nonempty square array, got shape {x.shape}')
    transform = wht_staged if staged else wht_embedding
    rows = np.array([transform(row, counter) for row in x])
    ret = np.array([transform(column, counter) for column in rows.T]).T
    ret.setflags(write=False)
    return ret
