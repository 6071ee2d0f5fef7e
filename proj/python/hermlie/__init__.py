"""Exact Kaehler, balanced and SKT checks on two-step solvable Lie algebras.

Documents are plain dicts in the CLI's JSON format, rationals as "p/q" strings.
"""

import json

from . import _hermlie
from ._hermlie import SCHEMA, Error

__all__ = ["SCHEMA", "Error", "describe", "classify", "shear", "search", "salamon", "catalog", "verify"]


def _dump(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def describe(algebra):
    return json.loads(_hermlie.describe(_dump(algebra)))


def classify(algebra, structure):
    return json.loads(_hermlie.classify(_dump(algebra), _dump(structure)))


def shear(data):
    return json.loads(_hermlie.shear(_dump(data)))


def search(algebra, structure, target, seeds=()):
    return json.loads(_hermlie.search(_dump(algebra), _dump(structure), target, list(seeds)))


def salamon(text, params=None):
    """Parse and re-render Salamon notation, e.g. "(0,0,12)"."""
    return _hermlie.salamon(text, {k: str(v) for k, v in (params or {}).items()})


def catalog():
    return json.loads(_hermlie.catalog())


def verify(only=()):
    return json.loads(_hermlie.verify(list(only)))
