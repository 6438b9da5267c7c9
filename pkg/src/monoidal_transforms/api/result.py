"""
Documents written by the command line tools.
"""

import typing

from marshmallow import fields

from .base import SchemaNonempty
from .report import OracleReportSchema
from ..oracle.report import OracleReport
from ..utils.marshmallow import fields_ext


class TransformResult(typing.NamedTuple):
    kind: str
    n: int
    dims: int
    result: typing.Any
    verify: typing.Optional[OracleReport] = None


class TransformResultSchema(SchemaNonempty):
    kind = fields.Str(required=True)
    n = fields.Int(required=True)
    dims = fields.Int(required=True)
    result = fields_ext.Signal(required=True)
    verify = fields.Nested(OracleReportSchema)


class CheckResult(typing.NamedTuple):
    seed: int
    cases: int
    reports: typing.List[OracleReport]

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.reports)


class CheckResultSchema(SchemaNonempty):
    seed = fields.Int(required=True)
    cases = fields.Int(required=True)
    passed = fields.Bool(data_key='pass', required=True)
    reports = fields.List(fields.Nested(OracleReportSchema), required=True)


class BenchOps(typing.NamedTuple):
    embedding: int
    oracle: int
    staged: typing.Optional[int] = None


class BenchOpsSchema(SchemaNonempty):
    embedding = fields.Int(required=True)
    staged = fields.Int()
    oracle = fields.Int(required=True)


class BenchResult(typing.NamedTuple):
    kind: str
    n: int
    dims: int
    ops: BenchOps


class BenchResultSchema(SchemaNonempty):
    kind = fields.Str(required=True)
    n = fields.Int(required=True)
    dims = fields.Int(required=True)
    ops = fields.Nested(BenchOpsSchema, required=True)
