"""JSON encodings for rings, ideals, Hilbert series and reports.

Schemas (field names are part of the contract):

    ring    {"vars": [{"name": str, "weight": int}, ...], "field": "QQ" | "Fp:<p>"}
    ideal   {"ring": <ring>, "gens": [<polynomial string>, ...]}
    hilbert {"numerator": [[coeff, power], ...], "denominator_weights": [int, ...]}

Polynomials are strings in the shared text grammar, emitted with terms in
descending grevlex order, so files are deterministic and diffable.
"""

from __future__ import annotations

import json

from .fields import field_from_name
from .hilbert import HilbertSeries
from .ideals import Ideal
from .parsing import format_poly, parse_poly
from .ring import GradedPolyRing


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def ring_to_json(ring: GradedPolyRing) -> dict:
    return {
        "vars": [{"name": n, "weight": w} for n, w in zip(ring.names, ring.weights)],
        "field": ring.field.name,
    }


def ring_from_json(obj: dict) -> GradedPolyRing:
    try:
        field = field_from_name(obj["field"])
        variables = [(v["name"], int(v["weight"])) for v in obj["vars"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed ring object: {exc}") from exc
    return GradedPolyRing(field, variables)


def ideal_to_json(ideal: Ideal) -> dict:
    order = ideal.ring.order("grevlex")
    return {
        "ring": ring_to_json(ideal.ring),
        "gens": [format_poly(g, order) for g in ideal.generators],
    }


def ideal_from_json(obj: dict) -> Ideal:
    if not isinstance(obj, dict) or "ring" not in obj or "gens" not in obj:
        raise ValueError("malformed ideal object: expected keys 'ring' and 'gens'")
    ring = ring_from_json(obj["ring"])
    return Ideal(ring, [parse_poly(s, ring) for s in obj["gens"]])


def hilbert_to_json(hs: HilbertSeries) -> dict:
    return {
        "numerator": [[c, p] for c, p in hs.numerator_pairs()],
        "denominator_weights": list(hs.denominator_weights),
    }


def load_ideal(path: str) -> Ideal:
    with open(path, "r", encoding="utf-8") as fh:
        return ideal_from_json(json.load(fh))


def write_json(path: str, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
