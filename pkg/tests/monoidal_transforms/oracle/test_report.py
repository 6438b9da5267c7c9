import logging

import numpy as np

from monoidal_transforms.oracle.report import OracleReport, ReportBuilder, log_report


class TestOracleReport:
    def test_pass(self):
        r = OracleReport('x', 0, 0, 1, witness={'a': 1})
        assert r.passed
        assert r.ok
        assert r.witness is None

    def test_fail(self):
        r = OracleReport('x', 2, 1, 1, witness={'a': 1})
        assert not r.passed
        assert not r.ok
        assert r.witness == {'a': 1}

    def test_expected_failure(self):
        r = OracleReport('x', 2, 1, 1, expected=False)
        assert not r.passed
        assert r.ok

    def test_unexpected_pass(self):
        r = OracleReport('x', 0, 1, 1, expected=False)
        assert r.passed
        assert not r.ok


class TestReportBuilder:
    def test_empty(self):
        r = ReportBuilder('empty').build()
        assert r.cases == 0
        assert r.passed

    def test_worst_case(self):
        builder = ReportBuilder('worst', 0.5)
        builder.add([1.0, 2.0], [1.0, 2.25], n=1)
        builder.add([1.0, 2.0], [2.0, 2.0], n=2)
        builder.add([1.0], [1.5], n=3)
        r = builder.build()
        assert r.cases == 3
        assert r.max_abs_error == 1
        assert not r.passed
        assert r.witness['inputs'] == {'n': 2}
        assert r.witness['lhs'] == [1.0, 2.0]

    def test_witness_is_plain(self):
        builder = ReportBuilder('plain', expected=False)
        builder.add(np.array([1]), np.array([2]), signal=np.array([3, 4]), scale=np.int64(5))
        witness = builder.build().witness
        assert witness['inputs'] == {'signal': [3, 4], 'scale': 5}
        assert type(witness['inputs']['scale']) is int

    def test_integer_error(self):
        builder = ReportBuilder('integer')
        builder.add(np.array([1, 7]), np.array([1, 4]))
        r = builder.build()
        assert r.max_abs_error == 3
        assert not r.passed


class TestLogReport:
    def test_ok(self, caplog):
        with caplog.at_level(logging.INFO):
            log_report(OracleReport('fine', 0, 0, 3))
        assert caplog.records[0].levelno == logging.INFO

    def test_failed(self, caplog):
        log_report(OracleReport('broken', 1, 0, 3))
        assert caplog.records[0].levelno == logging.WARNING
        assert 'exceeds' in caplog.text

    def test_unexpected_pass(self, caplog):
        log_report(OracleReport('fixture', 0, 0, 1, expected=False))
        assert 'expected to fail but passed' in caplog.text
