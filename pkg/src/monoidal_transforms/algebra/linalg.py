"""
Dense real matrix and vector arithmetic.

Vectors and matrices are plain read-only numpy arrays of one of two scalar
kinds: float64 or exact int64.  Operations never mix kinds implicitly, so an
integer computation stays integer from input to output.
"""

from __future__ import annotations

import collections
import enum
import logging
import math
import typing

import numpy as np


logger = logging.getLogger(__name__)

Vector = np.ndarray
Matrix = np.ndarray

SINGULAR_THRESHOLD = 1e-12
INTEGER_MAX = int(np.iinfo(np.int64).max)


class DimensionError(ValueError):
    pass


class KindError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


class PermutationError(ValueError):
    pass


class IntegerRangeError(ValueError):
    pass


@enum.unique
class ScalarKind(enum.Enum):
    float = np.dtype(np.float64)
    integer = np.dtype(np.int64)

    @property
    def dtype(self) -> np.dtype:
        return self.value


class OpCounter:
    """
    Tally of scalar operations.

    A matrix-vector product counts one operation per stored nonzero of the
    matrix, vector additions and scalings one per entry.
    """

    def __init__(self) -> None:
        self.count = 0

    def add(self, ops: int) -> None:
        self.count += int(ops)

    def __repr__(self) -> str:
        return f'OpCounter(count={self.count})'


def _count(counter: typing.Optional[OpCounter], ops: int) -> None:
    if counter is not None:
        counter.add(ops)


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def kind_of(a: np.ndarray) -> ScalarKind:
    if a.dtype == np.bool_:
        raise KindError('boolean arrays have no scalar kind')
    if np.issubdtype(a.dtype, np.integer):
        return ScalarKind.integer
    if np.issubdtype(a.dtype, np.floating):
        return ScalarKind.float
    raise KindError(f'unsupported scalar type {a.dtype}')


def same_kind(*arrays: np.ndarray) -> ScalarKind:
    kinds = {kind_of(a) for a in arrays}
    if len(kinds) != 1:
        raise KindError(f'scalar kinds differ: {", ".join(sorted(k.name for k in kinds))}')
    return kinds.pop()


def _array(entries, kind: typing.Optional[ScalarKind]) -> np.ndarray:
    a = np.array(entries)
    if kind is None:
        kind = kind_of(a)
    elif a.size and kind_of(a) == ScalarKind.float and kind == ScalarKind.integer:
        raise KindError('refusing to convert floats to the integer kind')
    return a.astype(kind.dtype)


def vector(entries, kind: typing.Optional[ScalarKind] = None) -> Vector:
    a = _array(entries, kind)
    if a.ndim != 1 or a.size == 0:
        raise DimensionError(f'a vector needs a nonempty list of scalars, got shape {a.shape}')
    return _freeze(a)


def matrix(rows, kind: typing.Optional[ScalarKind] = None) -> Matrix:
    a = _array(rows, kind)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.size == 0:
        raise DimensionError(f'a matrix needs square nonempty rows, got shape {a.shape}')
    return _freeze(a)


def zeros(d: int, kind: ScalarKind = ScalarKind.float) -> Vector:
    if d < 1:
        raise DimensionError(f'dimension must be positive, got {d}')
    return _freeze(np.zeros(d, dtype=kind.dtype))


def identity(d: int, kind: ScalarKind = ScalarKind.float) -> Matrix:
    if d < 1:
        raise DimensionError(f'dimension must be positive, got {d}')
    return _freeze(np.eye(d, dtype=kind.dtype))


def diag(entries, kind: typing.Optional[ScalarKind] = None) -> Matrix:
    return _freeze(np.diag(vector(entries, kind)))


def as_kind(a: np.ndarray, kind: ScalarKind) -> np.ndarray:
    """
    Explicit widening of an integer array to floats.  The other direction is
    refused.
    """
    current = kind_of(a)
    if current == kind:
        return a
    if kind == ScalarKind.integer:
        raise KindError('refusing to convert floats to the integer kind')
    return _freeze(a.astype(kind.dtype))


def rotation(k: int, n: int) -> Matrix:
    """
    2x2 rotation by 2*pi*k/n.  Quarter turns are produced exactly.
    """
    k %= n
    if (4 * k) % n == 0:
        c, s = ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))[4 * k // n]
    else:
        theta = math.tau * k / n
        c, s = math.cos(theta), math.sin(theta)
    return matrix([[c, -s], [s, c]], ScalarKind.float)


def _check_matrix(m: Matrix) -> int:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f'expected a square matrix, got shape {m.shape}')
    return m.shape[0]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if _check_matrix(a) != _check_matrix(b):
        raise DimensionError(f'cannot multiply {a.shape} by {b.shape}')
    same_kind(a, b)
    return _freeze(a @ b)


def mat_vec(m: Matrix, x: Vector, counter: typing.Optional[OpCounter] = None) -> Vector:
    d = _check_matrix(m)
    if x.ndim != 1 or x.shape[0] != d:
        raise DimensionError(f'cannot apply {m.shape} matrix to vector of shape {x.shape}')
    same_kind(m, x)
    _count(counter, np.count_nonzero(m))
    return _freeze(m @ x)


def vec_add(a: Vector, b: Vector, counter: typing.Optional[OpCounter] = None) -> Vector:
    if a.shape != b.shape:
        raise DimensionError(f'cannot add vectors of shape {a.shape} and {b.shape}')
    same_kind(a, b)
    _count(counter, a.size)
    return _freeze(a + b)


def vec_scale(s, x: Vector, counter: typing.Optional[OpCounter] = None) -> Vector:
    s = np.asarray(s)
    if s.ndim != 0:
        raise DimensionError('scale factor must be a scalar')
    same_kind(s, x)
    _count(counter, x.size)
    return _freeze(s * x)


def inverse(m: Matrix) -> Matrix:
    d = _check_matrix(m)
    if kind_of(m) == ScalarKind.integer:
        # Only unimodular integer matrices keep their inverse in the integer kind
        det = round(np.linalg.det(m.astype(np.float64)))
        if abs(det) != 1:
            raise SingularMatrixError(f'integer matrix with determinant {det} has no integer inverse')
        inv = np.rint(np.linalg.inv(m.astype(np.float64))).astype(np.int64)
        if not np.array_equal(m @ inv, np.eye(d, dtype=np.int64)):
            raise SingularMatrixError('integer inverse does not reproduce the identity')
        return _freeze(inv)

    det = np.linalg.det(m)
    if abs(det) < SINGULAR_THRESHOLD:
        raise SingularMatrixError(f'matrix is singular (|det| = {abs(det):.3e})')
    return _freeze(np.linalg.inv(m))


def mat_pow(m: Matrix, p: int) -> Matrix:
    _check_matrix(m)
    base = m
    if p < 0:
        base = inverse(m)
    return _freeze(np.linalg.matrix_power(base, abs(p)))


def block_diag(blocks: typing.Sequence[Matrix]) -> Matrix:
    if not blocks:
        raise DimensionError('block_diag needs at least one block')
    kind = same_kind(*blocks)
    size = sum(_check_matrix(b) for b in blocks)
    ret = np.zeros((size, size), dtype=kind.dtype)
    offset = 0
    for b in blocks:
        d = b.shape[0]
        ret[offset:offset + d, offset:offset + d] = b
        offset += d
    return _freeze(ret)


class Permutation(collections.namedtuple('Permutation', ['image'])):
    """
    Bijection of [0, n).  As a matrix, row i selects entry image[i].
    """

    def __new__(cls, image: typing.Iterable[int]):
        image = tuple(int(i) for i in image)
        if not image or sorted(image) != list(range(len(image))):
            raise PermutationError(f'not a permutation of [0, {len(image)}): {list(image)}')
        return super().__new__(cls, image)

    @property
    def size(self) -> int:
        return len(self.image)

    def apply(self, x: np.ndarray) -> np.ndarray:
        if x.shape[0] != self.size:
            raise DimensionError(f'permutation of size {self.size} applied to length {x.shape[0]}')
        return _freeze(x[list(self.image)])

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(inv)


def perm_to_matrix(p: Permutation) -> Matrix:
    ret = np.zeros((p.size, p.size), dtype=np.int64)
    ret[np.arange(p.size), list(p.image)] = 1
    return _freeze(ret)


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> typing.Union[int, float]:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise DimensionError(f'cannot compare shapes {a.shape} and {b.shape}')
    if a.size == 0:
        return 0
    diff = np.max(np.abs(a - b))
    if np.issubdtype(diff.dtype, np.integer):
        return int(diff)
    return float(diff)


def approx_eq(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise DimensionError(f'cannot compare shapes {a.shape} and {b.shape}')
    if np.issubdtype(a.dtype, np.integer) and np.issubdtype(b.dtype, np.integer):
        return bool(np.array_equal(a, b))
    return max_abs_diff(a, b) <= tol


def check_integer_range(x: np.ndarray, terms: int) -> None:
    """
    Refuse an integer array if a signed sum of ``terms`` of its entries can
    leave the int64 range.  Float arrays pass unchecked.
    """
    x = np.asarray(x)
    if x.size == 0 or kind_of(x) is not ScalarKind.integer:
        return
    bound = max(abs(int(x.min())), abs(int(x.max()))) * terms
    if bound > INTEGER_MAX:
        raise IntegerRangeError(
            f'integer signal may overflow int64: max |x| * {terms} = {bound} exceeds {INTEGER_MAX}'
        )
