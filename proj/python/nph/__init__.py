"""n-valued section indices, index-sum checks and branched resolutions.

Documents (meshes, bundles, fields, circle maps) are accepted either as
JSON strings or as already-decoded dicts, and results come back decoded.
"""

import json

from . import _nph

__all__ = [
    "NphError",
    "verify",
    "index_table",
    "resolve",
    "degree",
    "lens_map",
    "generate",
    "winding",
    "svg",
]


class NphError(ValueError):
    def __init__(self, code, detail):
        super().__init__(f"{code}: {detail}")
        self.code = code
        self.detail = detail


def _text(doc):
    if doc is None:
        return ""
    return doc if isinstance(doc, str) else json.dumps(doc)


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _nph.Error as e:
        raise NphError(*e.args) from None


def verify(mesh, field, bundle=None, mode="auto", threads=1):
    return json.loads(_call(_nph.verify, _text(mesh), _text(field), _text(bundle), mode, threads))


def index_table(mesh, field, bundle=None, mode="auto"):
    return verify(mesh, field, bundle, mode)["vertices"]


def resolve(mesh, field, bundle=None):
    files = _call(_nph.resolve, _text(mesh), _text(field), _text(bundle))
    return {name.removesuffix(".json"): json.loads(text) for name, text in files.items()}


def degree(circle_map):
    return json.loads(_call(_nph.degree, _text(circle_map)))


def lens_map(n, d, samples_per_sector=0):
    return json.loads(_call(_nph.lens_map, n, d, samples_per_sector))


def generate(name, base="", n=None, d=None, z=None, vertex=None, seed=0):
    files = _call(_nph.generate, name, base, n, d, z, vertex, seed)
    return {name.removesuffix(".json"): json.loads(text) for name, text in files.items()}


def winding(samples):
    return _call(_nph.winding, [str(s) for s in samples])


def svg(mesh, field, bundle=None, mode="auto"):
    return _call(_nph.svg, _text(mesh), _text(field), _text(bundle), mode)
