"""Three codimension-6 Fano 3-fold families in weighted projective space.

Each family quotients the generic unprojection ideal twice: first the c
parameters are fixed to general field elements (two may stay as honest
variables), then a graded substitution into a ten-variable ambient ring
replaces two of the remaining variables by general forms.  The resulting
ideal cuts out a threefold whose numerical invariants, Hilbert series
numerator, singular-stratum incidence, canonical twists and graded Betti
table, are pinned here as reference constants and verified computationally.

Family identifiers are the Graded Ring Database entry numbers 29376, 9176
and 24198.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .dimension import codimension
from .fields import GF, QQ, VERIFICATION_PRIME, RationalField
from .hilbert import hilbert_series
from .ideals import Ideal, is_regular_sequence, minimal_generators
from .maps import RingMap
from .ring import GradedPolyRing, monomials_of_weighted_degree
from .unprojection import base_unprojection, specialize
from .verification import CheckResult

FAMILY_IDS = (29376, 9176, 24198)


class UnknownFamilyError(KeyError):
    pass


@dataclass(frozen=True)
class BettiTable:
    """Twist multiplicities of a length-6 graded resolution, index 0..6."""

    steps: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self):
        if len(self.steps) != 7:
            raise ValueError("expected homological indices 0..6")
        if self.steps[0] != ((0, 1),):
            raise ValueError("index 0 must be a single untwisted copy")
        if len(self.steps[6]) != 1 or self.steps[6][0][1] != 1:
            raise ValueError("index 6 must be a single twist")

    @property
    def top_twist(self) -> int:
        return self.steps[6][0][0]

    def alternating_sum(self) -> dict[int, int]:
        out: dict[int, int] = {}
        sign = 1
        for step in self.steps:
            for twist, mult in step:
                v = out.get(twist, 0) + sign * mult
                if v:
                    out[twist] = v
                else:
                    out.pop(twist, None)
            sign = -sign
        return out

    def is_self_dual(self) -> bool:
        top = self.top_twist
        for i in range(7):
            mirrored = sorted((top - tw, m) for tw, m in self.steps[6 - i])
            if mirrored != sorted(self.steps[i]):
                return False
        return True


@dataclass(frozen=True)
class StratumSpec:
    """One singular stratum of the ambient weighted projective space."""

    name: str
    kind: str  # "point" or "locus"
    variables: tuple[str, ...]
    expected_contained: bool | None = None  # points only, where stated
    expected_degree: int | None = None  # loci only, where stated


@dataclass(frozen=True)
class FanoFamilySpec:
    family_id: int
    kept_c: tuple[str, ...]
    hat_x_weights: tuple[int, int, int, int, int, int]  # weights of x1..x6
    t_weights: tuple[int, int, int, int]
    ambient_vars: tuple[tuple[str, int], ...]
    general_images: tuple[tuple[str, int], ...]  # substituted variable, form degree
    param_counts: tuple[int, int]
    expected_numerator: tuple[int, ...]
    denominator_weights: tuple[int, ...]
    strata: tuple[StratumSpec, ...]
    expected_singular_points: int
    ci_degrees: tuple[int, int]
    ci_twist: int
    betti: BettiTable


_BETTI = {
    29376: (
        ((0, 1),),
        ((2, 6), (3, 8), (4, 6)),
        ((3, 8), (4, 24), (5, 24), (6, 8)),
        ((4, 3), (5, 24), (6, 36), (7, 24), (8, 3)),
        ((6, 8), (7, 24), (8, 24), (9, 8)),
        ((8, 6), (9, 8), (10, 6)),
        ((12, 1),),
    ),
    9176: (
        ((0, 1),),
        ((4, 6), (5, 8), (6, 6)),
        ((6, 8), (7, 24), (8, 24), (9, 8)),
        ((8, 3), (9, 24), (10, 36), (11, 24), (12, 3)),
        ((11, 8), (12, 24), (13, 24), (14, 8)),
        ((14, 6), (15, 8), (16, 6)),
        ((20, 1),),
    ),
    24198: (
        ((0, 1),),
        ((2, 1), (3, 10), (4, 7), (5, 2)),
        ((4, 12), (5, 28), (6, 20), (7, 4)),
        ((5, 2), (6, 25), (7, 36), (8, 25), (9, 2)),
        ((7, 4), (8, 20), (9, 28), (10, 12)),
        ((9, 2), (10, 7), (11, 10), (12, 1)),
        ((14, 1),),
    ),
}

_NUMERATORS = {
    29376: {0: 1, 2: -6, 4: 15, 6: -20, 8: 15, 10: -6, 12: 1},
    9176: {
        0: 1, 4: -6, 5: -8, 6: 2, 7: 24, 8: 21, 9: -16, 10: -36, 11: -16,
        12: 21, 13: 24, 14: 2, 15: -8, 16: -6, 20: 1,
    },
    24198: {
        0: 1, 2: -1, 3: -10, 4: 5, 5: 24, 6: -5, 7: -28, 8: -5, 9: 24,
        10: 5, 11: -10, 12: -1, 14: 1,
    },
}


def _numerator_tuple(pairs: dict[int, int]) -> tuple[int, ...]:
    top = max(pairs)
    return tuple(pairs.get(i, 0) for i in range(top + 1))


_RAW_FAMILIES = {
    29376: dict(
        kept_c=(),
        hat_x_weights=(1, 2, 1, 2, 1, 2),
        t_weights=(3, 1, 1, 1),
        ambient_vars=(
            ("w1", 1), ("w2", 1), ("T2", 1), ("T3", 1), ("T4", 1),
            ("x1", 1), ("x3", 1), ("x5", 1), ("x6", 2), ("T1", 3),
        ),
        general_images=(("x2", 2), ("x4", 2)),
        param_counts=(37, 37),
        denominator_weights=(1, 1, 1, 1, 1, 1, 1, 1, 2, 3),
        strata=(
            StratumSpec("x6-point", "point", ("x6",), expected_contained=False),
            StratumSpec("T1-point", "point", ("T1",), expected_contained=True),
        ),
        expected_singular_points=1,
        ci_degrees=(3, 3),
        ci_twist=-3,
    ),
    9176: dict(
        kept_c=(),
        hat_x_weights=(2, 3, 2, 3, 2, 3),
        t_weights=(4, 2, 2, 2),
        ambient_vars=(
            ("w1", 1), ("w2", 1), ("x1", 2), ("x5", 2), ("T2", 2),
            ("T3", 2), ("T4", 2), ("x2", 3), ("x4", 3), ("x6", 3),
        ),
        general_images=(("x3", 2), ("T1", 4)),
        param_counts=(8, 41),
        denominator_weights=(1, 1, 2, 2, 2, 2, 2, 3, 3, 3),
        strata=(
            StratumSpec("weight-2 locus", "locus", ("x1", "x5", "T2", "T3", "T4")),
            StratumSpec("weight-3 locus", "locus", ("x2", "x4", "x6")),
        ),
        expected_singular_points=8,
        ci_degrees=(5, 5),
        ci_twist=-5,
    ),
    24198: dict(
        kept_c=("c3", "c6"),
        hat_x_weights=(1, 2, 1, 2, 1, 1),
        t_weights=(3, 2, 2, 1),
        ambient_vars=(
            ("x1", 1), ("x3", 1), ("x5", 1), ("x6", 1), ("c3", 1),
            ("c6", 1), ("x2", 2), ("x4", 2), ("T3", 2), ("T1", 3),
        ),
        general_images=(("T2", 2), ("T4", 1)),
        param_counts=(24, 6),
        denominator_weights=(1, 1, 1, 1, 1, 1, 2, 2, 2, 3),
        strata=(
            StratumSpec("weight-2 locus", "locus", ("x2", "x4", "T3"), expected_degree=2),
            StratumSpec("T1-point", "point", ("T1",), expected_contained=True),
        ),
        expected_singular_points=3,
        ci_degrees=(3, 3),
        ci_twist=-4,
    ),
}


@lru_cache(maxsize=None)
def family_spec(family_id: int) -> FanoFamilySpec:
    """Fully populated family description; arithmetic gates run at load."""
    if family_id not in _RAW_FAMILIES:
        raise UnknownFamilyError(f"unknown family {family_id}; known: {FAMILY_IDS}")
    raw = dict(_RAW_FAMILIES[family_id])
    spec = FanoFamilySpec(
        family_id=family_id,
        expected_numerator=_numerator_tuple(_NUMERATORS[family_id]),
        betti=BettiTable(_BETTI[family_id]),
        **raw,
    )
    ambient_weights = tuple(sorted(w for _, w in spec.ambient_vars))
    if ambient_weights != tuple(sorted(spec.denominator_weights)):
        raise AssertionError(f"family {family_id}: ambient weights disagree")
    gate = betti_consistency(spec)
    if not all(gate.values()):
        raise AssertionError(f"family {family_id}: reference data inconsistent: {gate}")
    probe = GradedPolyRing(QQ, list(spec.ambient_vars))
    for (_, deg), count in zip(spec.general_images, spec.param_counts):
        found = len(monomials_of_weighted_degree(probe, deg))
        if found != count:
            raise AssertionError(
                f"family {family_id}: degree-{deg} form has {found} monomials, "
                f"table says {count}"
            )
    for stratum in spec.strata:
        ws = {dict(spec.ambient_vars)[n] for n in stratum.variables}
        if len(ws) != 1:
            raise AssertionError(f"stratum {stratum.name} mixes weights {ws}")
    return spec


@dataclass
class FamilyInstance:
    spec: FanoFamilySpec
    seed: int
    field: object
    c_assignment: dict
    l_assignment: tuple
    hat_ideal: Ideal  # the specialized two-generator complete intersection
    ambient: GradedPolyRing
    Q: Ideal


def _draw_nonzero(rng: random.Random, field):
    if isinstance(field, RationalField):
        v = 0
        while v == 0:
            v = rng.randrange(-20, 21)
        return v
    return rng.randrange(1, field.p)


def build_family(family_id: int, seed: int = 0, field=None) -> FamilyInstance:
    """Draw general coefficients from the seed and assemble the family ideal.

    The draw order is frozen for reproducibility: the substituted c's in
    index order, then the coefficients of the first general form, then the
    second, each over the monomials of its degree in descending ambient
    grevlex order.
    """
    spec = family_spec(family_id)
    if field is None:
        field = GF(VERIFICATION_PRIME)
    iun = base_unprojection(field)
    rng = random.Random(f"unproj:{family_id}:{seed}")
    c_values: dict = {}
    c_assignment: dict = {}
    for i in range(1, 7):
        name = f"c{i}"
        if name in spec.kept_c:
            c_values[name] = "keep"
        else:
            v = _draw_nonzero(rng, field)
            c_values[name] = v
            c_assignment[name] = v
    weights = {f"x{i}": w for i, w in zip(range(1, 7), spec.hat_x_weights)}
    weights.update({f"T{i}": w for i, w in zip(range(1, 5), spec.t_weights)})
    weights.update({name: dict(spec.ambient_vars)[name] for name in spec.kept_c})
    special = specialize(iun, c_values, weights=weights)
    ambient = GradedPolyRing(field, list(spec.ambient_vars))
    general_for = dict(spec.general_images)
    images = {}
    for name in special.ext_ring.names:
        if name not in general_for:
            images[name] = ambient.var(name)
    l_assignment: list = []
    for name, degree in spec.general_images:
        form = ambient.zero()
        for exps in monomials_of_weighted_degree(ambient, degree):
            coeff = _draw_nonzero(rng, field)
            l_assignment.append(coeff)
            form = form + ambient.monomial(exps, coeff)
        images[name] = form
    psi = RingMap(special.ext_ring, ambient, images)
    if not psi.is_graded:
        raise AssertionError("the ambient substitution must be graded")
    Q = psi.map_ideal(special.unprojection)
    if len(Q.generators) != 20:
        raise AssertionError("a generator image vanished; the draw is degenerate")
    for h in Q.generators:
        if h.homogeneous_degree() is None:
            raise AssertionError("family ideal is not homogeneous")
    return FamilyInstance(
        spec=spec,
        seed=seed,
        field=field,
        c_assignment=c_assignment,
        l_assignment=tuple(l_assignment),
        hat_ideal=special.hat_ideal,
        ambient=ambient,
        Q=Q,
    )


# ----------------------------------------------------------------------
# verification
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class StratumResult:
    name: str
    kind: str
    contained: bool | None
    projective_dimension: int | None
    degree: int
    passed: bool


def _point_contained(Q: Ideal, var_name: str) -> bool:
    """Evaluate the generators at the coordinate point of one variable."""
    ring = Q.ring
    field = ring.field
    vi = ring.index(var_name)
    for h in Q.generators:
        value = field.zero
        for exps, coeff in h.terms.items():
            if all(e == 0 for k, e in enumerate(exps) if k != vi):
                value = field.add(value, coeff)
        if not field.is_zero(value):
            return False
    return True


def _cancel_unit_roots(numerator: Sequence[int]) -> tuple[list[int], int]:
    """Divide out (1 - t) factors; returns (quotient, count removed)."""
    num = list(numerator)
    removed = 0
    while any(num) and sum(num) == 0:
        acc = 0
        quotient = [0] * (len(num) - 1)
        for k in range(len(num) - 1):
            acc += num[k]
            quotient[k] = acc
        num = quotient or [0]
        removed += 1
    return num, removed


def _locus_report(Q: Ideal, variables: tuple[str, ...]):
    """Restrict to a uniform-weight coordinate locus and rescale to weight 1.

    Every restricted generator is homogeneous with all degrees divisible by
    the locus weight, so dividing the grading through by it is exact.
    Returns (projective dimension, degree); an empty intersection reports
    (-1, 0).
    """
    ring = Q.ring
    field = ring.field
    sub = GradedPolyRing(field, [(n, 1) for n in variables])
    images = {n: (sub.var(n) if n in variables else sub.zero()) for n in ring.names}
    restrict = RingMap(ring, sub, images)
    gens = [restrict(h) for h in Q.generators]
    gens = [h for h in gens if not h.is_zero()]
    hs = hilbert_series(Ideal(sub, gens))
    num, removed = _cancel_unit_roots(hs.numerator)
    projdim = len(variables) - removed - 1
    if projdim < 0:
        return -1, 0
    return projdim, sum(num)


def strata_check(instance: FamilyInstance) -> list[StratumResult]:
    """Incidence of the family ideal with each ambient singular stratum."""
    results = []
    for stratum in instance.spec.strata:
        if stratum.kind == "point":
            contained = _point_contained(instance.Q, stratum.variables[0])
            degree = 1 if contained else 0
            ok = stratum.expected_contained is None or contained == stratum.expected_contained
            results.append(
                StratumResult(stratum.name, "point", contained, 0 if contained else None,
                              degree, ok)
            )
        else:
            projdim, degree = _locus_report(instance.Q, stratum.variables)
            ok = stratum.expected_degree is None or degree == stratum.expected_degree
            if degree and projdim != 0:
                ok = False  # a positive-dimensional intersection is never expected here
            results.append(
                StratumResult(stratum.name, "locus", None, projdim, degree, ok)
            )
    return results


def ci_canonical_twist(ideal: Ideal) -> int:
    """Canonical twist of a codimension-2 complete intersection quotient.

    For a regular sequence of degrees (d1, d2) in a ring with weight sum w
    the dualizing module is the quotient twisted by (d1 + d2) - w.
    """
    degrees = []
    for gfx in ideal.generators:
        d = gfx.homogeneous_degree()
        if d is None:
            raise ValueError("generators must be homogeneous")
        degrees.append(d)
    if not is_regular_sequence(ideal.generators):
        raise ValueError("generators do not form a regular sequence")
    return sum(degrees) - sum(ideal.ring.weights)


def betti_consistency(spec_or_id) -> dict:
    """Arithmetic gates tying the reference Betti table to the Hilbert data."""
    spec = spec_or_id if isinstance(spec_or_id, FanoFamilySpec) else family_spec(spec_or_id)
    alt = spec.betti.alternating_sum()
    expected = {i: c for i, c in enumerate(spec.expected_numerator) if c}
    return {
        "alternating_sum_matches": alt == expected,
        "canonical_twist_is_minus_one": spec.betti.top_twist - sum(spec.denominator_weights) == -1,
        "self_dual": spec.betti.is_self_dual(),
    }


FAMILY_CHECKS = ("codim", "mingens", "hilbert", "strata", "betti")


def verify_family(instance: FamilyInstance, checks: Sequence[str] = FAMILY_CHECKS):
    """Run the requested checks; returns a list of CheckResult."""
    spec = instance.spec
    results = []
    for name in checks:
        if name == "codim":
            computed = codimension(instance.Q)
            results.append(CheckResult("codim", 6, computed, computed == 6))
        elif name == "mingens":
            computed = len(minimal_generators(instance.Q))
            results.append(CheckResult("mingens", 20, computed, computed == 20))
        elif name == "hilbert":
            hs = hilbert_series(instance.Q)
            expected = {
                "numerator": [[c, i] for i, c in enumerate(spec.expected_numerator) if c],
                "denominator_weights": list(spec.denominator_weights),
                "palindromic": True,
            }
            computed = {
                "numerator": [[c, i] for c, i in hs.numerator_pairs()],
                "denominator_weights": list(hs.denominator_weights),
                "palindromic": hs.is_palindromic(),
            }
            results.append(CheckResult("hilbert", expected, computed, expected == computed))
        elif name == "strata":
            strata = strata_check(instance)
            total = sum(r.degree for r in strata)
            expected = {"total_degree": spec.expected_singular_points}
            computed = {
                "total_degree": total,
                "strata": [
                    {
                        "name": r.name,
                        "kind": r.kind,
                        "contained": r.contained,
                        "projective_dimension": r.projective_dimension,
                        "degree": r.degree,
                    }
                    for r in strata
                ],
            }
            passed = total == spec.expected_singular_points and all(r.passed for r in strata)
            results.append(CheckResult("strata", expected, computed, passed))
        elif name == "betti":
            gates = betti_consistency(spec)
            twist = ci_canonical_twist(instance.hat_ideal)
            expected = {
                "alternating_sum_matches": True,
                "canonical_twist_is_minus_one": True,
                "self_dual": True,
                "ci_canonical_twist": spec.ci_twist,
            }
            computed = dict(gates)
            computed["ci_canonical_twist"] = twist
            results.append(CheckResult("betti", expected, computed, expected == computed))
        else:
            raise ValueError(f"unknown family check {name!r}; known: {FAMILY_CHECKS}")
    return results
