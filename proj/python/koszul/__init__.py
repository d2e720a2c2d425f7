"""Generalized and classical Koszul checks over GF(p) and Q."""

import json

from ._core import SCHEMA_VERSION, Document, KoszulError, SchemaError
from ._core import import_algebra_dims as _import_algebra_dims
from ._core import run_corpus_json as _run_corpus_json

__all__ = [
    "SCHEMA_VERSION",
    "Document",
    "KoszulError",
    "SchemaError",
    "load",
    "parse",
    "run",
    "run_corpus",
    "export_algebra",
    "import_algebra_dims",
]


def load(path, field=None, trunc=None):
    return Document.from_file(str(path), field, trunc)


def parse(text, field=None, trunc=None):
    if not isinstance(text, str):
        text = json.dumps(text)
    return Document.from_text(text, field, trunc)


def run(doc, check=None, hdeg=8, seed=1):
    """Report of a document as a dict."""
    return json.loads(doc.run_json(check, hdeg, seed))


def run_corpus(directory, hdeg=8, seed=1):
    return json.loads(_run_corpus_json(str(directory), hdeg, seed))


def export_algebra(doc):
    return json.loads(doc.export_algebra_json())


def import_algebra_dims(structure):
    return _import_algebra_dims(json.dumps(structure))
