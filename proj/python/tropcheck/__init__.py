"""Exact isomorphism checks for tropical rational maps.

Rationals cross the binding boundary as "p/q" strings and come back as
``fractions.Fraction``.
"""

import json
from fractions import Fraction

from ._tropcheck import NotInvertible, ParseError
from ._tropcheck import parse_map as _parse_map

__all__ = ["Map", "NotInvertible", "ParseError", "load", "parse"]


def _q(text):
    return Fraction(text)


def _point(values):
    return [str(Fraction(v)) for v in values]


def _fractions(obj):
    """Convert every rational string inside a decoded report."""
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except ValueError:
            return obj
    if isinstance(obj, list):
        return [_fractions(v) for v in obj]
    if isinstance(obj, dict):
        return {k: (v if k in ("verdict", "reason", "relation", "diagnostics", "plane_fast_path") else _fractions(v))
                for k, v in obj.items()}
    return obj


class Map:
    def __init__(self, handle):
        self._h = handle

    name = property(lambda self: self._h.name)
    variables = property(lambda self: list(self._h.variables))
    dim = property(lambda self: self._h.dim)

    def source(self):
        return self._h.source()

    def __call__(self, *point):
        return [_q(v) for v in json.loads(self._h.eval(_point(point)))]

    def pieces(self):
        return _fractions(json.loads(self._h.pieces()))

    def preimage(self, *point):
        return _fractions(json.loads(self._h.preimage(_point(point))))

    def clarke(self, *point):
        return _fractions(json.loads(self._h.clarke(_point(point))))

    def analyze(self, seed=0, retries=32):
        return _fractions(json.loads(self._h.analyze(seed, retries)))


def parse(text, **params):
    return Map(_parse_map(text, {k: str(Fraction(v)) for k, v in params.items()}))


def load(path, **params):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), **params)
