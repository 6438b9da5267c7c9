from __future__ import annotations

import logging
import typing

import numpy as np

from ..algebra import linalg


logger = logging.getLogger(__name__)


Scalar = typing.Union[int, float]


def _plain(value: typing.Any) -> typing.Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, (list, tuple)):
        return [_plain(i) for i in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    return value


class OracleReport:
    """
    Outcome of comparing two evaluations of one identity.

    ``expected`` is False for demonstration fixtures whose identity is known
    not to hold; such a report is healthy when it fails.
    """

    name: str
    max_abs_error: Scalar
    tolerance: Scalar
    cases: int
    passed: bool
    expected: bool
    witness: typing.Optional[dict]

    def __init__(
            self,
            name: str,
            max_abs_error: Scalar,
            tolerance: Scalar,
            cases: int,
            expected: bool = True,
            witness: typing.Optional[dict] = None,
    ) -> None:
        self.name = name
        self.max_abs_error = max_abs_error
        self.tolerance = tolerance
        self.cases = cases
        self.passed = max_abs_error <= tolerance
        self.expected = expected
        self.witness = None if self.passed else witness

    @property
    def ok(self) -> bool:
        return self.passed == self.expected

    def __repr__(self) -> str:
        return (
            f'OracleReport(name={self.name!r}, max_abs_error={self.max_abs_error}, '
            f'cases={self.cases}, passed={self.passed}, expected={self.expected})'
        )


class ReportBuilder:
    """
    Accumulates cases for one report, keeping the worst case as witness.
    """

    def __init__(self, name: str, tolerance: Scalar = 0, expected: bool = True) -> None:
        self.name = name
        self.tolerance = tolerance
        self.expected = expected
        self.cases = 0
        self.max_abs_error: Scalar = 0
        self.witness: typing.Optional[dict] = None

    def add(self, lhs, rhs, **inputs) -> Scalar:
        err = linalg.max_abs_diff(np.asarray(lhs), np.asarray(rhs))
        self.add_error(err, inputs=inputs, lhs=lhs, rhs=rhs)
        return err

    def add_error(self, err: Scalar, **witness) -> None:
        self.cases += 1
        if self.witness is None or err > self.max_abs_error:
            self.max_abs_error = err
            self.witness = _plain(witness)

    def build(self) -> OracleReport:
        return OracleReport(
            name=self.name,
            max_abs_error=self.max_abs_error,
            tolerance=self.tolerance,
            cases=self.cases,
            expected=self.expected,
            witness=self.witness,
        )


def log_report(report: OracleReport) -> OracleReport:
    if report.ok:
        logger.info('%s: %d cases, max error %s', report.name, report.cases, report.max_abs_error)
    elif report.expected:
        logger.warning(
            '%s: %d cases, max error %s exceeds %s', report.name, report.cases, report.max_abs_error, report.tolerance)
    else:
        logger.warning('%s: expected to fail but passed', report.name)
    return report
