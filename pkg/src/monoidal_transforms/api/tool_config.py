import typing

from marshmallow import Schema, fields, post_load
from marshmallow.validate import Length, Range

from .meta import TypeMeta, v1_ObjectMetaSchema, v1_TypeMetaSchema


tool_config_typemeta = TypeMeta('ToolConfig', 'monoidal-transforms/v1alpha1')


def _sizes(minimum: int = 1) -> fields.List:
    return fields.List(fields.Int(strict=True, validate=Range(min=minimum)), validate=Length(min=1))


class v1alpha1_ToolConfigCheckSchema(Schema):
    seed = fields.Int(strict=True, validate=Range(min=0))
    cases = fields.Int(strict=True, validate=Range(min=1))
    transform_cases = fields.Int(strict=True, validate=Range(min=1))
    grids = fields.Int(strict=True, validate=Range(min=1))
    schedules = fields.Int(strict=True, validate=Range(min=0))
    dft_sizes = _sizes()
    dft2_sizes = _sizes()
    plan_sizes = _sizes()
    hadamard_sizes = _sizes()


class v1alpha1_ToolConfigBenchSchema(Schema):
    seed = fields.Int(strict=True, validate=Range(min=0))
    value_range = fields.Int(strict=True, validate=Range(min=0))


class v1alpha1_ToolConfigSchema(v1_TypeMetaSchema):
    __typemeta__ = tool_config_typemeta

    metadata = fields.Nested(v1_ObjectMetaSchema)
    check = fields.Nested(v1alpha1_ToolConfigCheckSchema)
    bench = fields.Nested(v1alpha1_ToolConfigBenchSchema)

    @post_load
    def load_obj(self, data: dict[str, typing.Any], **kw) -> dict[str, typing.Any]:
        data.pop('api_version', None)
        data.pop('kind', None)
        return data
