"""Sheaf codes on cubical and simplicial complexes.

Configs are dicts (or paths to JSON files) in the same schema the command-line
tool reads. Every call returns plain dicts.
"""

import json
import os

from . import _sheafccz
from ._sheafccz import ConfigError, Error, schema_version

__all__ = ["build", "verify", "params", "suites", "catalog", "rank", "Error", "ConfigError", "schema_version"]


def _load(config):
    if isinstance(config, (str, os.PathLike)):
        path = os.fspath(config)
        with open(path) as fh:
            return fh.read(), os.path.dirname(os.path.abspath(path))
    return json.dumps(config), os.getcwd()


def build(config, out=None):
    """Cell counts, cochain dimensions, n and k; writes artifacts when `out` is given."""
    text, base = _load(config)
    return json.loads(_sheafccz.build(text, base, os.fspath(out) if out else ""))


def verify(config, suite="all"):
    text, base = _load(config)
    return json.loads(_sheafccz.verify(text, base, suite))


def params(config):
    text, base = _load(config)
    return json.loads(_sheafccz.params(text, base))


def suites():
    return list(_sheafccz.suites())


def catalog():
    return list(_sheafccz.catalog())


def rank(rows, q=2):
    r = q.bit_length() - 1
    if q < 2 or 1 << r != q:
        raise ValueError(f"q must be a power of two, got {q}")
    return _sheafccz.rank(r, [list(row) for row in rows])
