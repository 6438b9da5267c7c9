from marshmallow import fields

from .base import SchemaNonempty


class OracleReportSchema(SchemaNonempty):
    name = fields.Str(required=True)
    max_abs_error = fields.Raw(required=True)
    tolerance = fields.Raw(required=True)
    cases = fields.Int(required=True)
    passed = fields.Bool(data_key='pass', required=True)
    expected = fields.Bool(required=True)
    witness = fields.Dict(keys=fields.Str())
