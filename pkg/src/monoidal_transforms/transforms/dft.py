"""
The discrete Fourier transform as a fold of shared-operator elements.

R is block diagonal with 2x2 rotation blocks R_k by 2*pi*k/n, and input a_i is
embedded as (a_i, 0) repeated in every block.  Folding (v_1, R) o ... o (v_n, R)
leaves in block k the real and imaginary parts of

    X_k = sum_i a_i exp(+j 2 pi (i - 1) k / n)

Note the positive exponent: this is the conjugate of the usual engineering
convention.
"""

from __future__ import annotations

import functools
import logging
import typing

import numpy as np

from ..algebra import linalg
from ..algebra.linalg import Matrix, OpCounter, ScalarKind, Vector
from ..algebra.monoid import MonoidElement, fold_shared
from .spectrum import ComplexSpectrum


logger = logging.getLogger(__name__)

KERNEL_SIGN = 1
PLAN_TOLERANCE = 1e-9


class PlanError(RuntimeError):
    pass


class DftPlan:
    n: int
    blocks: typing.Tuple[Matrix, ...]
    op: Matrix
    cycle: typing.Optional[Matrix]
    kernel_sign: int

    def __init__(self, n: int, blocks: typing.Sequence[Matrix]) -> None:
        self.n = n
        self.blocks = tuple(blocks)
        self.op = linalg.block_diag(self.blocks)
        self.cycle = None
        self.kernel_sign = KERNEL_SIGN

    @property
    def dim(self) -> int:
        return 2 * self.n

    def __repr__(self) -> str:
        return f'DftPlan(n={self.n})'


@functools.lru_cache(maxsize=None)
def build_plan(n: int) -> DftPlan:
    if n < 1:
        raise ValueError(f'transform length must be positive, got {n}')
    plan = DftPlan(n, [linalg.rotation(k, n) for k in range(n)])

    eye = linalg.identity(2)
    powers = []
    for k, block in enumerate(plan.blocks):
        power = linalg.mat_pow(block, n)
        if not linalg.approx_eq(power, eye, PLAN_TOLERANCE):
            raise PlanError(f'rotation block {k} of the length {n} plan is not of order {n}')
        powers.append(power)
    plan.cycle = linalg.block_diag(powers)
    logger.debug('Built DFT plan for n=%d (operator %dx%d)', n, plan.dim, plan.dim)
    return plan


def _signal(a, n: typing.Optional[int] = None) -> Vector:
    a = linalg.as_kind(linalg.vector(a), ScalarKind.float)
    if n is not None and a.shape[0] != n:
        raise linalg.DimensionError(f'signal of length {a.shape[0]} does not match plan length {n}')
    return a


def embed_input(a, plan: DftPlan) -> typing.List[Vector]:
    a = _signal(a, plan.n)
    return [linalg.vector(np.tile([ai, 0.0], plan.n)) for ai in a]


def embed_complex(z, plan: DftPlan) -> typing.List[Vector]:
    """
    Embed complex values directly as their (real, imaginary) block, so the
    rotation blocks act as complex multiplication.
    """
    if isinstance(z, ComplexSpectrum):
        z = z.coefficients
    z = np.asarray(z, dtype=np.float64)
    if z.shape != (plan.n, 2):
        raise linalg.DimensionError(f'expected {plan.n} (real, imaginary) pairs, got shape {z.shape}')
    return [linalg.vector(np.tile(pair, plan.n)) for pair in z]


def decode(vec: Vector, plan: DftPlan) -> ComplexSpectrum:
    return ComplexSpectrum(vec.reshape(plan.n, 2))


def fold(vectors: typing.Sequence[Vector], plan: DftPlan, counter: typing.Optional[OpCounter] = None) -> MonoidElement:
    """
    The element (V, R^T) for T folded vectors.  For a full-length fold R^n is
    the identity up to rounding.
    """
    power = plan.cycle if len(vectors) == plan.n else None
    return fold_shared(vectors, plan.op, counter, power)


def dft_1d(a, counter: typing.Optional[OpCounter] = None) -> ComplexSpectrum:
    a = _signal(a)
    plan = build_plan(a.shape[0])
    return decode(fold(embed_input(a, plan), plan, counter).vec, plan)


def dft_1d_complex(z, counter: typing.Optional[OpCounter] = None) -> ComplexSpectrum:
    if isinstance(z, ComplexSpectrum):
        z = z.coefficients
    plan = build_plan(np.asarray(z).shape[0])
    return decode(fold(embed_complex(z, plan), plan, counter).vec, plan)


def dft_2d(a, counter: typing.Optional[OpCounter] = None) -> ComplexSpectrum:
    """
    Row pass, then column pass over the complex intermediates.  The result is
    indexed [p, k] with p the column-pass (row index) frequency.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.size == 0:
        raise linalg.DimensionError(f'expected a nonempty square array, got shape {a.shape}')
    n = a.shape[0]

    rows = [dft_1d(row, counter).coefficients for row in a]

    ret = np.empty((n, n, 2), dtype=np.float64)
    for k in range(n):
        column = np.array([w[k] for w in rows])
        ret[:, k, :] = dft_1d_complex(column, counter).coefficients
    return ComplexSpectrum(ret)
