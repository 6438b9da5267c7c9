import json
import typing

from marshmallow import Schema, post_dump


class SchemaNonempty(Schema):
    @post_dump
    def remove_empty(self, data: dict, **kw) -> dict:
        return {i: j for i, j in data.items() if j not in (None, [], {})}


def dump_json(schema: Schema, obj: typing.Any, f: typing.TextIO) -> None:
    """
    Write one document in the canonical layout: sorted keys, four space indent.
    """
    json.dump(schema.dump(obj), f, indent=4, separators=(',', ': '), sort_keys=True)
    f.write('\n')
