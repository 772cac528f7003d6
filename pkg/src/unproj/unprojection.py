"""The 4-intersection unprojection construction.

A codimension-2 complete intersection ``I = (f, g)`` sits inside four
codimension-3 coordinate ideals ``J_1..J_4``.  Each inclusion induces a
module map ``phi_t : J_t -> R/I`` built from the 2x2 minors of the
coefficient matrix that writes f and g against the three generators of
``J_t``; composing two of them multiplies by a polynomial ``A_st``.
Adjoining one new variable per map with the relations ``T_t*x - phi_t(x)``
and ``T_s*T_t - A_st`` yields a codimension-6 Gorenstein quotient with 20
generators (parallel Kustin-Miller unprojection).

Sign convention: the three images of each phi are ``(h1, -h2, h3)`` in
terms of the deleted-column minors.  Only the alternating choice makes the
maps well defined (the certificate in :func:`verify_phi` is the arbiter:
the cofactor identity needs a repeated-row determinant to vanish).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from . import engine
from .fields import GF, VERIFICATION_PRIME
from .ideals import Ideal
from .maps import RingMap
from .ring import GradedPolyRing, Polynomial

#: Generating variables of the four coordinate-triple ideals, by index 1..4.
J_GENERATOR_VARS = {
    1: ("x1", "x3", "x5"),
    2: ("x1", "x4", "x6"),
    3: ("x2", "x3", "x6"),
    4: ("x2", "x4", "x5"),
}

#: (s, t) pairs for the product relations T_s*T_t - A_st, in generator order.
MULTIPLIER_PAIRS = ((2, 1), (3, 1), (4, 1), (3, 2), (4, 2), (4, 3))

BASE_VARIABLES = tuple(f"c{i}" for i in range(1, 7)) + tuple(f"x{i}" for i in range(1, 7))


class MultiplierError(RuntimeError):
    """No polynomial A with phi_s(phi_t(p)) = A*p mod I exists; a phi is broken."""


@dataclass(frozen=True)
class PhiMap:
    """One of the four unprojection maps, given on the generators of its J."""

    index: int
    generators: tuple[Polynomial, ...]
    images: tuple[Polynomial, ...]
    degree_shift: int


@dataclass(frozen=True)
class PhiCertificate:
    well_defined: bool
    maps_into: dict

    @property
    def ok(self) -> bool:
        return self.well_defined and all(self.maps_into.values())


class FourIntersection:
    """The base data: ring, f, g, I = (f, g), the four J_t, and the phi maps."""

    def __init__(self, ring, f, g, I, J, phi):
        self.ring = ring
        self.f = f
        self.g = g
        self.I = I
        self.J = J  # dict {1..4: Ideal}
        self.phi = phi  # dict {1..4: PhiMap}

    def var(self, name: str) -> Polynomial:
        return self.ring.var(name)


def km_phi_minors(matrix: Sequence[Sequence[Polynomial]], xs: Sequence[Polynomial]):
    """Images (h1, -h2, h3) of the three deleted-column minors of a 2x3 matrix.

    ``xs`` names the three generators the images correspond to; it is
    validated for arity so callers cannot misalign rows and generators.
    """
    if len(matrix) != 2 or any(len(row) != 3 for row in matrix):
        raise ValueError("expected a 2x3 matrix")
    if len(xs) != 3:
        raise ValueError("expected exactly three generators")
    (a1, a2, a3), (b1, b2, b3) = matrix
    h1 = a2 * b3 - a3 * b2
    h2 = a1 * b3 - a3 * b1
    h3 = a1 * b2 - a2 * b1
    return (h1, -h2, h3)


def _coefficient_rows(data: FourIntersection, t: int):
    """Rows (a, b) with f = sum a_i*v_i and g = sum b_i*v_i over J_t's variables."""
    ring = data.ring
    gen_idx = [ring.index(n) for n in J_GENERATOR_VARS[t]]
    rows = []
    for h in (data.f, data.g):
        row = [ring.zero() for _ in gen_idx]
        for exps, coeff in h.terms.items():
            for pos, gi in enumerate(gen_idx):
                if exps[gi]:
                    reduced = tuple(e - 1 if k == gi else e for k, e in enumerate(exps))
                    row[pos] = row[pos] + ring.monomial(reduced, coeff)
                    break
            else:
                raise ValueError(f"term of f or g lies outside J_{t}")
        rows.append(tuple(row))
    return tuple(rows)


def build_phi(data: FourIntersection, t: int) -> PhiMap:
    """The t-th unprojection map, rows read off from f and g."""
    if t not in J_GENERATOR_VARS:
        raise ValueError(f"phi index must be 1..4, got {t}")
    rows = _coefficient_rows(data, t)
    gens = tuple(data.ring.var(n) for n in J_GENERATOR_VARS[t])
    images = km_phi_minors(rows, gens)
    shifts = set()
    for gen, img in zip(gens, images):
        if img.is_zero():
            continue
        d = img.homogeneous_degree()
        if d is None:
            raise ValueError(f"phi_{t} image is not homogeneous")
        shifts.add(d - gen.homogeneous_degree())
    if len(shifts) != 1:
        raise ValueError(f"phi_{t} degree shift is not uniform: {sorted(shifts)}")
    return PhiMap(t, gens, images, shifts.pop())


def verify_phi(data: FourIntersection, t: int, phi: PhiMap | None = None) -> PhiCertificate:
    """Well-definedness and incidence certificate for phi_t.

    well_defined: both relations f = sum a_i v_i and g = sum b_i v_i must map
    into I, i.e. sum a_i*image_i and sum b_i*image_i lie in I.
    maps_into[s]: all three images lie in J_s, for each s != t.
    """
    if phi is None:
        phi = data.phi[t]
    rows = _coefficient_rows(data, t)
    well = True
    for row in rows:
        comb = sum((ai * hi for ai, hi in zip(row, phi.images)), data.ring.zero())
        if not data.I.contains(comb):
            well = False
            break
    maps_into = {}
    for s in range(1, 5):
        if s == t:
            continue
        maps_into[s] = all(data.J[s].contains(h) for h in phi.images)
    return PhiCertificate(well, maps_into)


def build_four_intersection(
    field=None, weights: Mapping[str, int] | None = None
) -> FourIntersection:
    """Construct the base data over c1..c6, x1..x6.

    ``weights`` may override individual variable weights (default all 1);
    assignments under which f or g fails to be homogeneous are rejected.
    """
    if field is None:
        field = GF(VERIFICATION_PRIME)
    weights = dict(weights or {})
    unknown = set(weights) - set(BASE_VARIABLES)
    if unknown:
        raise ValueError(f"weights given for unknown variables {sorted(unknown)}")
    ring = GradedPolyRing(field, [(n, weights.get(n, 1)) for n in BASE_VARIABLES])
    c = {i: ring.var(f"c{i}") for i in range(1, 7)}
    x = {i: ring.var(f"x{i}") for i in range(1, 7)}
    f = c[1] * x[1] * x[2] + c[2] * x[3] * x[4] + c[3] * x[5] * x[6]
    g = c[4] * x[1] * x[2] + c[5] * x[3] * x[4] + c[6] * x[5] * x[6]
    if f.homogeneous_degree() is None or g.homogeneous_degree() is None:
        raise ValueError("weight assignment makes f or g non-homogeneous")
    I = Ideal(ring, [f, g])
    J = {t: Ideal(ring, [ring.var(n) for n in J_GENERATOR_VARS[t]]) for t in range(1, 5)}
    for t, Jt in J.items():
        if not (Jt.contains(f) and Jt.contains(g)):
            raise AssertionError(f"I is not contained in J_{t}")
    data = FourIntersection(ring, f, g, I, J, {})
    data.phi = {t: build_phi(data, t) for t in range(1, 5)}
    return data


def apply_phi(data: FourIntersection, t: int, element: Polynomial) -> Polynomial:
    """phi_t on an element of J_t, by splitting each term at the first
    generating variable dividing it.

    The result is well defined mod I: representation changes are spanned by
    the Koszul relations of the generating variables, and the minor images
    send those into I.
    """
    ring = data.ring
    gen_idx = [ring.index(n) for n in J_GENERATOR_VARS[t]]
    out = ring.zero()
    for exps, coeff in element.terms.items():
        for pos, gi in enumerate(gen_idx):
            if exps[gi]:
                reduced = tuple(e - 1 if k == gi else e for k, e in enumerate(exps))
                out = out + ring.monomial(reduced, coeff) * data.phi[t].images[pos]
                break
        else:
            raise ValueError(f"element has a term outside J_{t}")
    return out


def compute_multiplier(data: FourIntersection, s: int, t: int) -> Polynomial:
    """The homogeneous A with phi_s(phi_t(p)) = A*p mod I for all p in J_t.

    Computed by dividing phi_s(phi_t(v)) by the tracked basis of (v, f, g)
    for the first generating variable v and extracting the cofactor of v,
    then cross-checked against the other two generators.  The returned
    representative is the normal form against I's basis.
    """
    if s == t or s not in J_GENERATOR_VARS or t not in J_GENERATOR_VARS:
        raise ValueError(f"need two distinct indices in 1..4, got ({s}, {t})")
    ring = data.ring
    order = ring.order("grevlex")
    v0 = ring.var(J_GENERATOR_VARS[t][0])
    composite = apply_phi(data, s, data.phi[t].images[0])
    basis, reps = engine.groebner_basis([v0, data.f, data.g], order, track=True)
    remainder, quotients = engine.normal_form(composite, basis, order, track=True)
    if not remainder.is_zero():
        raise MultiplierError(
            f"phi_{s}(phi_{t}(p)) does not lie in (p, f, g); the phi maps are inconsistent"
        )
    A = ring.zero()
    for q, rep in zip(quotients, reps):
        A = A + q * rep[0]
    A = engine.normal_form(A, data.I.groebner_basis().elements, order)
    for pos in (1, 2):
        v = ring.var(J_GENERATOR_VARS[t][pos])
        comp = apply_phi(data, s, data.phi[t].images[pos])
        if not data.I.contains(comp - A * v):
            raise MultiplierError(f"A_{s}{t} fails the cross-check on generator {pos + 1}")
    return A


def complement_variable(s: int, t: int) -> str:
    """The unique x_i outside both J_s and J_t."""
    used = set(J_GENERATOR_VARS[s]) | set(J_GENERATOR_VARS[t])
    rest = [f"x{i}" for i in range(1, 7) if f"x{i}" not in used]
    assert len(rest) == 1
    return rest[0]


def multiplier_minor_factorization(data: FourIntersection, s: int, t: int, A: Polynomial):
    """Match A against the shape (complement variable)^2 * minor * minor.

    The minors are the 2x2 minors of [[c1,c2,c3],[c4,c5,c6]].  Returns the
    matching pair of minor index sets and the scalar, or None when A does not
    have the shape (possible only if a phi was built wrongly).
    """
    ring = data.ring
    c = {i: ring.var(f"c{i}") for i in range(1, 7)}
    minors = {
        (1, 2): c[1] * c[5] - c[2] * c[4],
        (1, 3): c[1] * c[6] - c[3] * c[4],
        (2, 3): c[2] * c[6] - c[3] * c[5],
    }
    xsq = ring.var(complement_variable(s, t)) ** 2
    field = ring.field
    keys = list(minors)
    for i, ka in enumerate(keys):
        for kb in keys[i:]:
            candidate = xsq * minors[ka] * minors[kb]
            if set(candidate.terms) != set(A.terms):
                continue
            probe = next(iter(A.terms))
            ratio = field.div(A.terms[probe], candidate.terms[probe])
            if all(
                A.terms[e] == field.mul(ratio, cv) for e, cv in candidate.terms.items()
            ):
                return ka, kb, ratio
    return None


@dataclass(frozen=True)
class UnprojectionIdeal:
    """The 20-generator ideal in R[T1..T4], generators in the frozen order:
    f, g, then T_t*x - phi_t(x) for t = 1..4 over each J_t's generators,
    then T_s*T_t - A_st over MULTIPLIER_PAIRS."""

    data: FourIntersection
    ring: GradedPolyRing
    ideal: Ideal
    multipliers: dict

    def codimension(self) -> int:
        from .dimension import codimension

        return codimension(self.ideal)


def build_unprojection_ideal(
    data: FourIntersection, t_weights: Sequence[int] = (3, 3, 3, 3)
) -> UnprojectionIdeal:
    ring = data.ring
    ext = ring.extend([(f"T{i}", w) for i, w in zip(range(1, 5), t_weights)])
    inc = RingMap.identity_extension(ring, ext)
    T = {i: ext.var(f"T{i}") for i in range(1, 5)}
    gens = [inc(data.f), inc(data.g)]
    for t in range(1, 5):
        for pos, name in enumerate(J_GENERATOR_VARS[t]):
            gens.append(T[t] * ext.var(name) - inc(data.phi[t].images[pos]))
    multipliers = {}
    for s, t in MULTIPLIER_PAIRS:
        A = compute_multiplier(data, s, t)
        multipliers[(s, t)] = A
        gens.append(T[s] * T[t] - inc(A))
    assert len(gens) == 20
    for h in gens:
        if h.homogeneous_degree() is None:
            raise ValueError("unprojection generator is not homogeneous; check T weights")
    return UnprojectionIdeal(data, ext, Ideal(ext, gens), multipliers)


@lru_cache(maxsize=4)
def _base_unprojection_cached(field) -> UnprojectionIdeal:
    return build_unprojection_ideal(build_four_intersection(field))


def base_unprojection(field=None) -> UnprojectionIdeal:
    """The standard-grading construction over a field, built once and shared."""
    if field is None:
        field = GF(VERIFICATION_PRIME)
    return _base_unprojection_cached(field)


@dataclass(frozen=True)
class SpecializedUnprojection:
    """Images of I and of the unprojection ideal after fixing c values."""

    hat_ring: GradedPolyRing  # x1..x6 plus any kept c variables
    hat_ideal: Ideal  # image of (f, g)
    ext_ring: GradedPolyRing  # hat ring plus T1..T4
    unprojection: Ideal  # image of the 20-generator ideal
    values: dict
    kept: tuple[str, ...]


def specialize(
    iun: UnprojectionIdeal,
    c_values: Mapping[str, object],
    *,
    weights: Mapping[str, int] | None = None,
    allow_degenerate: bool = False,
) -> SpecializedUnprojection:
    """Substitute c variables by field elements, keeping those marked "keep".

    ``c_values`` maps c1..c6 to a field element or the string "keep";
    missing entries are kept.  Outside degenerate mode every substituted
    value must be nonzero.  ``weights`` grades the target ring (x's, kept
    c's and T's; default weight 1 everywhere, under which any nonzero
    substitution leaves the ideal homogeneous); a weight assignment that
    breaks homogeneity of the specialized ideal is rejected.
    """
    data = iun.data
    field = data.ring.field
    weights = dict(weights or {})
    kept = []
    values = {}
    for i in range(1, 7):
        name = f"c{i}"
        v = c_values.get(name, "keep")
        if v == "keep":
            kept.append(name)
        else:
            v = field.coerce(v)
            if field.is_zero(v) and not allow_degenerate:
                raise ValueError(
                    f"{name} = 0 lies outside the allowed specialization locus; "
                    "pass allow_degenerate=True for degeneracy tests"
                )
            values[name] = v
    hat_vars = [(f"x{i}", weights.get(f"x{i}", 1)) for i in range(1, 7)]
    hat_vars += [(n, weights.get(n, 1)) for n in kept]
    hat_ring = GradedPolyRing(field, hat_vars)
    t_vars = [(f"T{i}", weights.get(f"T{i}", 1)) for i in range(1, 5)]
    ext_ring = hat_ring.extend(t_vars)

    def images_into(target):
        imgs = {}
        for n in data.ring.names:
            if n in values:
                imgs[n] = target.const(values[n])
            else:
                imgs[n] = target.var(n)
        return imgs

    spec_hat = RingMap(data.ring, hat_ring, images_into(hat_ring))
    ext_images = images_into(ext_ring)
    for i in range(1, 5):
        ext_images[f"T{i}"] = ext_ring.var(f"T{i}")
    spec_ext = RingMap(iun.ring, ext_ring, ext_images)
    hat_ideal = spec_hat.map_ideal(Ideal(data.ring, [data.f, data.g]))
    unprojection = spec_ext.map_ideal(iun.ideal)
    for h in list(hat_ideal.generators) + list(unprojection.generators):
        if h.homogeneous_degree() is None:
            raise ValueError("specialized ideal is not homogeneous under the given weights")
    return SpecializedUnprojection(
        hat_ring, hat_ideal, ext_ring, unprojection, values, tuple(kept)
    )


def build_km_unprojection(
    matrix: Sequence[Sequence[Polynomial]],
    xs: Sequence[Polynomial],
    t_name: str = "T",
):
    """One Kustin-Miller unprojection of a 2x3-matrix complete intersection.

    Given rows (a, b) and the three variables xs, this forms the ideal
    (a.xs, b.xs, T*x1 - h1, T*x2 + h2, T*x3 - h3) in R[T], with the h's the
    deleted-column minors.  The weight of T is the uniform degree shift of
    the images; the codimension rises from 2 to 3.
    """
    if len(xs) != 3:
        raise ValueError("expected exactly three generator variables")
    ring = xs[0].ring
    images = km_phi_minors(matrix, xs)
    shifts = set()
    for v, h in zip(xs, images):
        if h.is_zero():
            continue
        dh, dv = h.homogeneous_degree(), v.homogeneous_degree()
        if dh is None or dv is None:
            raise ValueError("matrix entries must be homogeneous")
        shifts.add(dh - dv)
    if len(shifts) != 1:
        raise ValueError("images do not share a uniform degree shift")
    ext = ring.extend([(t_name, shifts.pop())])
    inc = RingMap.identity_extension(ring, ext)
    T = ext.var(t_name)
    (a1, a2, a3), (b1, b2, b3) = matrix
    f1 = a1 * xs[0] + a2 * xs[1] + a3 * xs[2]
    f2 = b1 * xs[0] + b2 * xs[1] + b3 * xs[2]
    gens = [inc(f1), inc(f2)]
    for v, h in zip(xs, images):
        gens.append(T * inc(v) - inc(h))
    return Ideal(ext, gens)
