"""
Brute-force references.

Nothing here goes through the composition machinery: every value is a direct
sum or a closed-form matrix entry.
"""

import typing

import numpy as np

from ..algebra import linalg
from ..algebra.linalg import OpCounter
from ..transforms.spectrum import ComplexSpectrum


def _as_complex(a) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim == 2 and a.shape[1] == 2:
        return a[:, 0] + 1j * a[:, 1]
    if a.ndim != 1:
        raise ValueError(f'expected reals or (real, imaginary) pairs, got shape {a.shape}')
    return a.astype(np.complex128)


def _kernel(n: int, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    # Phase index reduced mod n before scaling to an angle
    return np.exp(2j * np.pi * (np.multiply.outer(rows, cols) % n) / n)


def naive_dft(a, counter: typing.Optional[OpCounter] = None) -> ComplexSpectrum:
    """
    X_k = sum_i a_i exp(+j 2 pi i k / n), 0-based, positive exponent.
    """
    a = np.asarray(a)
    z = _as_complex(a)
    n = z.shape[0]
    if n < 1:
        raise ValueError('cannot transform an empty signal')
    idx = np.arange(n)
    if counter is not None:
        counter.add(n * n * (4 if a.ndim == 2 else 2))
    return ComplexSpectrum.from_complex(_kernel(n, idx, idx) @ z)


def naive_dft2(a, counter: typing.Optional[OpCounter] = None) -> ComplexSpectrum:
    """
    Y_pk = sum_i sum_m a_im exp(+j 2 pi (m k + i p) / n), as a direct double sum.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f'expected a square array, got shape {a.shape}')
    n = a.shape[0]
    idx = np.arange(n)
    ret = np.zeros((n, n), dtype=np.complex128)
    if counter is not None:
        counter.add(2 * n ** 4)
    for p in range(n):
        for k in range(n):
            phase = np.add.outer(idx * p, idx * k) % n
            ret[p, k] = np.sum(a * np.exp(2j * np.pi * phase / n))
    return ComplexSpectrum.from_complex(ret)


def naive_hadamard_matrix(n: int) -> np.ndarray:
    """
    H[r, c] = (-1)^popcount(r & c), the Sylvester-ordered Hadamard matrix.
    """
    if n < 1 or n & (n - 1):
        raise ValueError(f'{n} is not a power of two')
    ret = np.empty((n, n), dtype=np.int64)
    for r in range(n):
        for c in range(n):
            ret[r, c] = -1 if bin(r & c).count('1') % 2 else 1
    return ret


def _sign_changes(row: typing.Sequence[int]) -> int:
    return sum(1 for x, y in zip(row, row[1:]) if x != y)


def naive_sequency_order(m: np.ndarray) -> typing.List[int]:
    """
    Row indices of ``m`` sorted by number of sign changes.
    """
    return sorted(range(m.shape[0]), key=lambda r: _sign_changes(list(m[r])))


def naive_walsh_matrix(n: int) -> np.ndarray:
    h = naive_hadamard_matrix(n)
    return h[naive_sequency_order(h)]


def _check_range(m: np.ndarray, x: np.ndarray, terms: int, squared: bool = False) -> None:
    if m.size == 0 or not np.issubdtype(m.dtype, np.integer):
        return
    scale = int(np.max(np.abs(m)))
    linalg.check_integer_range(x, terms * (scale ** 2 if squared else scale))


def naive_transform(m: np.ndarray, x, counter: typing.Optional[OpCounter] = None) -> np.ndarray:
    """
    Dense matrix-vector product, one operation per matrix entry.
    """
    m = np.asarray(m)
    x = np.asarray(x)
    if m.shape[1] != x.shape[0]:
        raise ValueError(f'cannot apply {m.shape} matrix to length {x.shape[0]}')
    _check_range(m, x, m.shape[1])
    if counter is not None:
        counter.add(m.size)
    return m @ x


def naive_transform_2d(m: np.ndarray, x, counter: typing.Optional[OpCounter] = None) -> np.ndarray:
    """
    M X M^T, the separable 2D transform, as two dense matrix products.
    """
    m = np.asarray(m)
    x = np.asarray(x)
    if x.ndim != 2 or x.shape[0] != x.shape[1] or x.shape[0] != m.shape[0]:
        raise ValueError(f'expected a square {m.shape[0]}x{m.shape[0]} array, got shape {x.shape}')
    _check_range(m, x, m.shape[0] ** 2, squared=True)
    if counter is not None:
        counter.add(2 * m.shape[0] ** 3)
    return m @ x @ m.T
