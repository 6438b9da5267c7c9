"""
Layered tool configuration.

Values come from, in increasing precedence: the packaged defaults, config
files (plain documents, or named sections selected by ``metadata.name``), and
command line overrides.
"""

import logging
import typing

import marshmallow
import yaml

from .. import resources
from ..api.meta import ObjectMeta
from ..api.tool_config import v1alpha1_ToolConfigSchema


logger = logging.getLogger(__name__)


def items_nested(d, suffixes=[]):
    if isinstance(d, dict):
        for k, v in d.items():
            yield from items_nested(v, suffixes + [k])
    else:
        yield (suffixes, d)


def flatten_dict(d):
    return {'.'.join(ks): v for ks, v in items_nested(d)}


def load_tool_config(value: typing.Any, unknown=marshmallow.RAISE) -> dict:
    if not isinstance(value, dict):
        raise marshmallow.ValidationError(f'config document must be a mapping, got {type(value).__name__}')
    return v1alpha1_ToolConfigSchema().load(value, unknown=unknown)


class Config:
    def __init__(self, overrides=[]):
        self._configs_builtin = []
        self._configs_default = []
        self._configs_override = []
        self._configs = {}

        for override in overrides:
            config = load_tool_config(override)
            self._configs_override.append(flatten_dict(config))

    def read(self, *filenames):
        for filename in filenames:
            logger.debug('Reading config file %s', filename)
            with open(filename) as f:
                self.read_yaml((f, ))

    def read_defaults(self):
        with resources.open_text('config.yaml') as f:
            for config_raw in yaml.safe_load_all(f):
                config = load_tool_config(config_raw)
                config.pop('metadata', None)
                self._configs_builtin.append(flatten_dict(config))

    def read_yaml(self, files, unknown=marshmallow.RAISE):
        for f in files:
            for config_raw in yaml.safe_load_all(f):
                if config_raw is None:
                    continue
                config = load_tool_config(config_raw, unknown=unknown)
                config_metadata = config.pop('metadata', ObjectMeta())
                config_name = config_metadata.name
                config_flat = flatten_dict(config)
                if config_name:
                    self._configs.setdefault(f'_name={config_name}', []).append(config_flat)
                else:
                    self._configs_default.append(config_flat)

    def sections(self) -> typing.List[str]:
        return sorted(k.split('=', 1)[1] for k in self._configs)

    def __getitem__(self, key):
        configs = []
        configs.extend(self._configs_builtin)
        # Reverse lists, so first value will have precedence
        configs.extend(self._configs_default[::-1])
        if key is not None:
            configs.extend(self._configs[key][::-1])
        configs.extend(self._configs_override[::-1])
        ret = {}
        for c in configs:
            ret.update(c)
        return ret
