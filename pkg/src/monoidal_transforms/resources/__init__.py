import importlib.machinery
import importlib.resources
import typing


__spec__: importlib.machinery.ModuleSpec


def open_text(resource: str, encoding: str = 'utf-8') -> typing.TextIO:
    return importlib.resources.files(__spec__.name).joinpath(resource).open('r', encoding=encoding)
