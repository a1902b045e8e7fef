"""Exact curve embeddings into smooth projective toric 3-folds."""

import json

from . import _torembed
from ._torembed import TorembedError

__all__ = [
    "TorembedError",
    "certify",
    "embed",
    "find_ample",
    "preset",
    "presets",
    "run",
    "validate",
    "xi",
]


def _dumps(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def presets():
    return list(_torembed.presets())


def preset(name):
    return json.loads(_torembed.preset(name))


def validate(fan):
    return json.loads(_torembed.validate(_dumps(fan)))


def find_ample(fan):
    return json.loads(_torembed.find_ample(_dumps(fan)))


def xi(fan, ample=None, method="intersection"):
    return json.loads(_torembed.xi(_dumps(fan), None if ample is None else _dumps(ample), method))


def embed(fan, ample=None, seed=0, torus=(1, 1, 1), method="intersection"):
    torus_text = ",".join(str(t) for t in torus)
    doc = _torembed.embed(_dumps(fan), None if ample is None else _dumps(ample), seed, torus_text, method)
    return json.loads(doc)


def certify(embedding, degree_cap=512):
    return json.loads(_torembed.certify(_dumps(embedding), degree_cap))


def run(config):
    """Runs the whole pipeline; returns (exit_code, report)."""
    code, report = _torembed.run(_dumps(config))
    return code, json.loads(report)
