"""
One-dimensional composition of (vector, operator) pairs.

    (a, A) o (b, B) = (a + A b, A B)

The operation is associative with identity (0, I) and in general not
commutative.
"""

from __future__ import annotations

import functools
import logging
import typing

import numpy as np

from . import linalg
from .linalg import Matrix, OpCounter, ScalarKind, Vector


logger = logging.getLogger(__name__)


class MonoidElement:
    vec: Vector
    op: Matrix

    def __init__(self, vec: Vector, op: Matrix) -> None:
        if op.ndim != 2 or op.shape[0] != op.shape[1]:
            raise linalg.DimensionError(f'operator must be square, got shape {op.shape}')
        if vec.ndim != 1 or vec.shape[0] != op.shape[0]:
            raise linalg.DimensionError(f'vector of shape {vec.shape} does not match operator {op.shape}')
        linalg.same_kind(vec, op)
        self.vec = vec
        self.op = op

    @property
    def dim(self) -> int:
        return self.vec.shape[0]

    @property
    def kind(self) -> ScalarKind:
        return linalg.kind_of(self.vec)

    def __matmul__(self, other: MonoidElement) -> MonoidElement:
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonoidElement):
            return NotImplemented
        return bool(
            self.vec.shape == other.vec.shape
            and np.array_equal(self.vec, other.vec)
            and np.array_equal(self.op, other.op)
        )

    __hash__ = None  # type: ignore[assignment]

    def approx_eq(self, other: MonoidElement, tol: float) -> bool:
        return linalg.approx_eq(self.vec, other.vec, tol) and linalg.approx_eq(self.op, other.op, tol)

    def max_abs_diff(self, other: MonoidElement) -> typing.Union[int, float]:
        return max(linalg.max_abs_diff(self.vec, other.vec), linalg.max_abs_diff(self.op, other.op))

    def __repr__(self) -> str:
        return f'MonoidElement(vec={self.vec.tolist()}, op={self.op.tolist()})'


def compose(l: MonoidElement, r: MonoidElement) -> MonoidElement:
    if l.dim != r.dim:
        raise linalg.DimensionError(f'cannot compose elements of dimension {l.dim} and {r.dim}')
    return MonoidElement(
        linalg.vec_add(l.vec, linalg.mat_vec(l.op, r.vec)),
        linalg.mat_mul(l.op, r.op),
    )


def identity_element(d: int, kind: ScalarKind = ScalarKind.float) -> MonoidElement:
    return MonoidElement(linalg.zeros(d, kind), linalg.identity(d, kind))


def _check_sequence(elems: typing.Sequence[MonoidElement]) -> None:
    if not elems:
        raise ValueError('cannot fold an empty sequence')
    dims = {e.dim for e in elems}
    if len(dims) != 1:
        raise linalg.DimensionError(f'sequence mixes dimensions {sorted(dims)}')


def fold_sequence(elems: typing.Sequence[MonoidElement]) -> MonoidElement:
    """
    e_1 o (e_2 o (... o e_T)), evaluated from the right.
    """
    _check_sequence(elems)
    return functools.reduce(lambda acc, e: compose(e, acc), reversed(elems[:-1]), elems[-1])


def closed_form(elems: typing.Sequence[MonoidElement]) -> MonoidElement:
    """
    (sum_i R_1 ... R_{i-1} v_i, R_1 ... R_T) from accumulated prefix products.
    """
    _check_sequence(elems)
    prefix = linalg.identity(elems[0].dim, elems[0].kind)
    vec = linalg.zeros(elems[0].dim, elems[0].kind)
    for e in elems:
        vec = linalg.vec_add(vec, linalg.mat_vec(prefix, e.vec))
        prefix = linalg.mat_mul(prefix, e.op)
    return MonoidElement(vec, prefix)


def fold_shared(
        vectors: typing.Sequence[Vector],
        op: Matrix,
        counter: typing.Optional[OpCounter] = None,
        power: typing.Optional[Matrix] = None,
) -> MonoidElement:
    """
    Right-to-left fold of (v_1, R) o ... o (v_T, R).

    The vector part is the Horner evaluation of sum_i R^(i-1) v_i, the operator
    part is R^T.  Callers that already know R^T pass it as ``power``.
    """
    if not vectors:
        raise ValueError('cannot fold an empty sequence')
    vec = vectors[-1]
    for v in reversed(vectors[:-1]):
        vec = linalg.vec_add(v, linalg.mat_vec(op, vec, counter), counter)
    logger.debug('Folded %d vectors of dimension %d', len(vectors), op.shape[0])
    if power is None:
        power = linalg.mat_pow(op, len(vectors))
    return MonoidElement(vec, power)
