import math
import numbers

import numpy as np

from marshmallow import fields

from ...algebra.linalg import ScalarKind


class Signal(fields.Field):
    """
    A one or two dimensional array of numbers.

    Loads to a read-only numpy array of the integer kind when every entry is an
    integer and of the float kind otherwise; dumps back to nested lists of
    plain ints and floats.
    """

    default_error_messages = {
        'invalid': 'Not a valid signal.',
        'empty': 'Signal must not be empty.',
        'ragged': 'Signal rows must all have the same length.',
        'entry': 'Signal entries must be finite numbers, got {value!r}.',
        'range': 'Signal entries must fit in 64 bits.',
    }

    def _serialize(self, value, attr, obj, **kw):
        if value is None:
            return None
        return np.asarray(value).tolist()

    def _check_entry(self, value) -> None:
        if isinstance(value, bool) or not isinstance(value, numbers.Real):
            raise self.make_error('entry', value=value)
        if isinstance(value, float) and not math.isfinite(value):
            raise self.make_error('entry', value=value)

    def _deserialize(self, value, attr, data, **kw):
        if not isinstance(value, list):
            raise self.make_error('invalid')
        if not value:
            raise self.make_error('empty')

        if isinstance(value[0], list):
            width = len(value[0])
            if width == 0:
                raise self.make_error('empty')
            for row in value:
                if not isinstance(row, list):
                    raise self.make_error('invalid')
                if len(row) != width:
                    raise self.make_error('ragged')
            entries = [i for row in value for i in row]
        else:
            entries = value

        for i in entries:
            self._check_entry(i)

        if all(isinstance(i, numbers.Integral) for i in entries):
            kind = ScalarKind.integer
        else:
            kind = ScalarKind.float
        try:
            ret = np.array(value, dtype=kind.dtype)
        except OverflowError:
            raise self.make_error('range')
        ret.setflags(write=False)
        return ret
