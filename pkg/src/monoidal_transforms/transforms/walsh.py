"""
Sequency-ordered Walsh transform W_n = P H_n.

P reorders the Sylvester rows so that the number of sign changes grows
0, 1, ..., n-1; row k of W is row bit_reverse(gray_code(k)) of H.  The fold
uses the conjugated operator R' = P R P^-1 and embeddings v'_i = P v_i, so
that sum_i R'^(i-1) v'_i = P (sum_i R^(i-1) v_i) = P H_n x = W_n x.
"""

from __future__ import annotations

import functools
import logging
import typing

import numpy as np

from ..algebra import linalg
from ..algebra.linalg import Matrix, OpCounter, Permutation, Vector
from ..algebra.monoid import fold_shared
from . import hadamard


logger = logging.getLogger(__name__)


class SequencyError(RuntimeError):
    pass


class ConjugationError(RuntimeError):
    pass


def gray_code(k: int) -> int:
    return k ^ (k >> 1)


def bit_reverse(k: int, bits: int) -> int:
    ret = 0
    for _ in range(bits):
        ret = (ret << 1) | (k & 1)
        k >>= 1
    return ret


def sequency_of_row(row: typing.Sequence[int]) -> int:
    """
    Number of adjacent sign flips along a row of +1/-1 entries.
    """
    row = list(row)
    for i in row:
        if i not in (1, -1):
            raise ValueError(f'sequency is defined for +1/-1 rows, found {i}')
    return sum(1 for a, b in zip(row, row[1:]) if a != b)


@functools.lru_cache(maxsize=None)
def sequency_permutation(n: int) -> Permutation:
    bits = hadamard.check_size(n)
    perm = Permutation(bit_reverse(gray_code(k), bits) for k in range(n))

    h = hadamard.sylvester(n)
    sequencies = [sequency_of_row(h[i]) for i in perm.image]
    if sequencies != list(range(n)):
        raise SequencyError(f'permutation for n={n} gives sequencies {sequencies}')
    return perm


class WalshPlan:
    n: int
    perm: Permutation
    permutation_matrix: Matrix
    hadamard: hadamard.HadamardPlan
    op: Matrix
    cycle: Matrix
    walsh: Matrix

    def __init__(self, n: int) -> None:
        self.n = n
        self.perm = sequency_permutation(n)
        self.permutation_matrix = linalg.perm_to_matrix(self.perm)
        self.hadamard = hadamard.build_plan(n)

        p = self.permutation_matrix
        p_inv = linalg.perm_to_matrix(self.perm.inverse())
        self.op = linalg.mat_mul(linalg.mat_mul(p, self.hadamard.op), p_inv)
        self.cycle = linalg.mat_mul(linalg.mat_mul(p, self.hadamard.cycle), p_inv)
        self.walsh = linalg.mat_mul(p, self.hadamard.hadamard)

    def __repr__(self) -> str:
        return f'WalshPlan(n={self.n})'


@functools.lru_cache(maxsize=None)
def build_plan(n: int) -> WalshPlan:
    plan = WalshPlan(n)
    logger.debug('Built Walsh plan for n=%d, permutation %s', n, list(plan.perm.image))
    return plan


def walsh_matrix(n: int) -> Matrix:
    return build_plan(n).walsh


def fold_conjugated(x, plan: WalshPlan, counter: typing.Optional[OpCounter] = None) -> Vector:
    """
    sum_i R'^(i-1) v'_i with R' = P R P^-1 and v'_i = P v_i.
    """
    vs = hadamard.build_v(x, plan.hadamard, counter)
    kind = linalg.kind_of(vs[0])
    p = linalg.as_kind(plan.permutation_matrix, kind)
    permuted = [linalg.mat_vec(p, v, counter) for v in vs]
    op = linalg.as_kind(plan.op, kind)
    return fold_shared(permuted, op, counter, linalg.as_kind(plan.cycle, kind)).vec


def fold_permuted(x, plan: WalshPlan) -> Vector:
    """
    P (sum_i R^(i-1) v_i), the unconjugated fold permuted afterwards.
    """
    return plan.perm.apply(hadamard.fold_v(hadamard.build_v(x, plan.hadamard), plan.hadamard))


def walsh_embedding(x, counter: typing.Optional[OpCounter] = None) -> Vector:
    x = linalg.vector(x)
    plan = build_plan(x.shape[0])
    conjugated = fold_conjugated(x, plan, counter)
    permuted = fold_permuted(x, plan)
    if not np.array_equal(conjugated, permuted):
        raise ConjugationError(f'conjugated fold differs from permuted fold for n={plan.n}')
    return conjugated


def walsh_staged(x, counter: typing.Optional[OpCounter] = None) -> Vector:
    """
    P applied to the staged Hadamard transform.
    """
    x = linalg.vector(x)
    plan = build_plan(x.shape[0])
    p = linalg.as_kind(plan.permutation_matrix, linalg.kind_of(x))
    return linalg.mat_vec(p, hadamard.wht_staged(x, counter), counter)


def walsh_2d(x, staged: bool = False, counter: typing.Optional[OpCounter] = None) -> np.ndarray:
    """
    W X W^T, applied row by row then column by column.
    """
    x = np.asarray(x)
    if x.ndim != 2 or x.shape[0] != x.shape[1] or x.size == 0:
        raise linalg.DimensionError(f'expected a nonempty square array, got shape {x.shape}')
    transform = walsh_staged if staged else walsh_embedding
    rows = np.array([transform(row, counter) for row in x])
    ret = np.array([transform(column, counter) for column in rows.T]).T
    ret.setflags(write=False)
    return ret
