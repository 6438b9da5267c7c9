from __future__ import annotations

import numpy as np


class ComplexSpectrum:
    """
    Complex coefficients stored as trailing (real, imaginary) pairs.
    """

    coefficients: np.ndarray

    def __init__(self, coefficients) -> None:
        coefficients = np.array(coefficients, dtype=np.float64)
        if coefficients.ndim < 2 or coefficients.shape[-1] != 2:
            raise ValueError(f'expected (real, imaginary) pairs, got shape {coefficients.shape}')
        coefficients.setflags(write=False)
        self.coefficients = coefficients

    @classmethod
    def from_complex(cls, values) -> ComplexSpectrum:
        values = np.asarray(values, dtype=np.complex128)
        return cls(np.stack([values.real, values.imag], axis=-1))

    def as_complex(self) -> np.ndarray:
        return self.coefficients[..., 0] + 1j * self.coefficients[..., 1]

    def conjugate(self) -> ComplexSpectrum:
        return ComplexSpectrum(self.coefficients * np.array([1.0, -1.0]))

    @property
    def shape(self):
        return self.coefficients.shape[:-1]

    def __len__(self) -> int:
        return self.coefficients.shape[0]

    def __repr__(self) -> str:
        return f'ComplexSpectrum({self.coefficients.tolist()})'
