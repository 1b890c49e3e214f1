"""JSON family files.

Layout::

    {"dimension": 2,
     "direction_vector": [[], [1, 2]],
     "parts": [[[[0, 0], [3, 3]], ...], [[[0, 1], ["1/2", 4]], ...]]}

Each box is a list of ``[lo, hi]`` pairs, one per axis.  Integers are plain
JSON numbers and other rationals are ``"p/q"`` strings; floats are rejected.
Planar segment instances use ``{"kind": "planar", "horizontals": ..., "verticals": ...}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .directions import DirectionVector
from .errors import PreconditionError
from .family import BoxFamily
from .geometry import Box
from .hypergraph import PlanarInstance


def encode_rational(x: Fraction):
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


def decode_rational(v) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise PreconditionError(f"coordinate {v!r} is not exact; use an integer or a 'p/q' string")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise PreconditionError(f"bad rational {v!r}") from exc
    raise PreconditionError(f"bad coordinate {v!r}")


def _encode_box(b: Box):
    return [[encode_rational(s.lo), encode_rational(s.hi)] for s in b.sides]


def _decode_box(raw) -> Box:
    try:
        return Box.from_pairs((decode_rational(lo), decode_rational(hi)) for lo, hi in raw)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, PreconditionError):
            raise
        raise PreconditionError(f"malformed box {raw!r}") from exc


def family_to_dict(fam: BoxFamily) -> dict:
    return {
        "dimension": fam.dimension,
        "direction_vector": [sorted(s) for s in fam.direction_vector.sets],
        "parts": [[_encode_box(b) for b in part] for part in fam.parts],
    }


def family_from_dict(data: dict) -> BoxFamily:
    try:
        F = DirectionVector(int(data["dimension"]), tuple(frozenset(s) for s in data["direction_vector"]))
        parts = tuple(tuple(_decode_box(b) for b in part) for part in data["parts"])
    except (KeyError, TypeError) as exc:
        raise PreconditionError(f"malformed family file: {exc}") from exc
    return BoxFamily(F, parts)


def planar_to_dict(inst: PlanarInstance) -> dict:
    return {
        "kind": "planar",
        "horizontals": [_encode_box(b) for b in inst.horizontals],
        "verticals": [_encode_box(b) for b in inst.verticals],
    }


def planar_from_dict(data: dict) -> PlanarInstance:
    return PlanarInstance(
        tuple(_decode_box(b) for b in data["horizontals"]),
        tuple(_decode_box(b) for b in data["verticals"]),
    )


def dump_instance(obj) -> dict:
    if isinstance(obj, PlanarInstance):
        return planar_to_dict(obj)
    return family_to_dict(obj)


def load_instance(data: dict):
    if data.get("kind") == "planar":
        return planar_from_dict(data)
    return family_from_dict(data)


def save(obj, path: str | Path) -> None:
    Path(path).write_text(json.dumps(dump_instance(obj), indent=1) + "\n")


def load(path: str | Path):
    return load_instance(json.loads(Path(path).read_text()))
