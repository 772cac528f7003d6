"""Verification suite for the base construction (no family quotients).

The checks mirror the structural claims the families rely on: the
codimensions of the defining ideals, the four map certificates, the
composition multipliers, the 20-generator codimension-6 ideal, and the
degenerate specialization used to witness minimal generation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import engine
from .dimension import codimension
from .fields import GF, VERIFICATION_PRIME, RationalField
from .ideals import Ideal, minimal_generators
from .unprojection import (
    MULTIPLIER_PAIRS,
    PhiMap,
    base_unprojection,
    compute_multiplier,
    specialize,
    verify_phi,
)

GENERIC_CHECKS = ("base_codim", "phi", "multipliers", "iun", "specialization")


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: object
    computed: object
    passed: bool


def _draw_nonzero(rng: random.Random, field):
    if isinstance(field, RationalField):
        v = 0
        while v == 0:
            v = rng.randrange(-20, 21)
        return v
    return rng.randrange(1, field.p)


def _seed_assignment(seed: int, field) -> dict:
    rng = random.Random(f"unproj:generic:{seed}")
    return {f"c{i}": _draw_nonzero(rng, field) for i in range(1, 7)}


def generic_checks(field=None, seed: int = 0, checks=None, iun_ideal: Ideal | None = None):
    """Run the base-construction suite; returns (results, provenance).

    ``iun_ideal`` substitutes a deserialized copy of the 20-generator ideal
    for the constructed one (its ring must match); the construction-order
    comparison then doubles as a round-trip test.
    """
    if field is None:
        field = GF(VERIFICATION_PRIME)
    if checks is None:
        checks = GENERIC_CHECKS
    iun = base_unprojection(field)
    data = iun.data
    if iun_ideal is not None and iun_ideal.ring != iun.ring:
        raise ValueError("supplied ideal does not live in the 16-variable construction ring")
    target = iun_ideal if iun_ideal is not None else iun.ideal
    seeds = (seed, seed + 1)
    assignments = {s: _seed_assignment(s, field) for s in seeds}
    results = []
    for name in checks:
        if name == "base_codim":
            pair_dims = {}
            for t in range(1, 5):
                for s in range(t + 1, 5):
                    pair_dims[f"J{t}+J{s}"] = codimension(data.J[t] + data.J[s])
            hat = {}
            for s in seeds:
                special = specialize(iun, assignments[s])
                hat[str(s)] = codimension(special.hat_ideal)
            expected = {
                "I": 2,
                "J": {f"J{t}": 3 for t in range(1, 5)},
                "pairs": {k: 5 for k in pair_dims},
                "Ihat": {str(s): 2 for s in seeds},
            }
            computed = {
                "I": codimension(data.I),
                "J": {f"J{t}": codimension(data.J[t]) for t in range(1, 5)},
                "pairs": pair_dims,
                "Ihat": hat,
            }
            results.append(CheckResult("base_codim", expected, computed, expected == computed))
        elif name == "phi":
            per_t = {}
            for t in range(1, 5):
                cert = verify_phi(data, t)
                per_t[f"t{t}"] = {
                    "well_defined": cert.well_defined,
                    "maps_into": {f"J{s}": v for s, v in sorted(cert.maps_into.items())},
                }
            good = data.phi[1]
            flipped = PhiMap(
                good.index,
                good.generators,
                (good.images[0], -good.images[1], good.images[2]),
                good.degree_shift,
            )
            flipped_cert = verify_phi(data, 1, flipped)
            expected = {
                f"t{t}": {
                    "well_defined": True,
                    "maps_into": {f"J{s}": True for s in range(1, 5) if s != t},
                }
                for t in range(1, 5)
            }
            expected["flipped_well_defined"] = False
            computed = dict(per_t)
            computed["flipped_well_defined"] = flipped_cert.well_defined
            results.append(CheckResult("phi", expected, computed, expected == computed))
        elif name == "multipliers":
            ring = data.ring
            order = ring.order("grevlex")
            c = {i: ring.var(f"c{i}") for i in range(1, 7)}
            golden = (
                ring.var("x2") ** 2
                * (c[3] * c[4] - c[1] * c[6])
                * (-c[2] * c[4] + c[1] * c[5])
            )
            golden = engine.normal_form(golden, data.I.groebner_basis().elements, order)
            a12 = compute_multiplier(data, 1, 2)
            degrees = {
                f"A{s}{t}": iun.multipliers[(s, t)].homogeneous_degree()
                for s, t in MULTIPLIER_PAIRS
            }
            expected = {
                "A12_matches_reference_up_to_sign": True,
                "degrees": {f"A{s}{t}": 6 for s, t in MULTIPLIER_PAIRS},
            }
            computed = {
                "A12_matches_reference_up_to_sign": a12 == golden or a12 == -golden,
                "degrees": degrees,
            }
            results.append(
                CheckResult("multipliers", expected, computed, expected == computed)
            )
        elif name == "iun":
            expected = {"generators": 20, "mingens": 20, "codim": 6,
                        "matches_construction": True}
            computed = {
                "generators": len(target.generators),
                "mingens": len(minimal_generators(target)),
                "codim": codimension(target),
                "matches_construction": list(target.generators) == list(iun.ideal.generators),
            }
            results.append(CheckResult("iun", expected, computed, expected == computed))
        elif name == "specialization":
            from .maps import RingMap
            from .ring import GradedPolyRing

            ring = target.ring
            flat = GradedPolyRing(field, [(n, 1) for n in ring.names if not n.startswith("c")])
            values = {"c1": 0, "c2": 1, "c3": 0, "c4": 1, "c5": 0, "c6": 0}
            images = {}
            for n in ring.names:
                images[n] = flat.const(values[n]) if n in values else flat.var(n)
            degenerate = RingMap(ring, flat, images).map_ideal(target)
            mg = minimal_generators(degenerate)
            computed = {
                "monomials": sum(1 for h in mg if len(h.terms) == 1),
                "binomials": sum(1 for h in mg if len(h.terms) == 2),
            }
            expected = {"monomials": 16, "binomials": 4}
            results.append(
                CheckResult("specialization", expected, computed, expected == computed)
            )
        else:
            raise ValueError(f"unknown generic check {name!r}; known: {GENERIC_CHECKS}")
    provenance = {
        "seed": seed,
        "field": field.name,
        "c_assignments": {str(s): assignments[s] for s in seeds},
    }
    return results, provenance
