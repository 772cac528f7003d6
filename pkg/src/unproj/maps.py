"""Graded ring homomorphisms given by variable images."""

from __future__ import annotations

from .ideals import Ideal
from .ring import GradedPolyRing, Polynomial


class RingMap:
    """k-algebra map determined by one target polynomial per source variable.

    The gradedness flag is computed, never asserted: the map is graded when
    every image is zero or homogeneous of its variable's weight.
    """

    def __init__(self, source: GradedPolyRing, target: GradedPolyRing, images: dict):
        if source.field != target.field:
            raise ValueError("source and target fields must agree")
        self.source = source
        self.target = target
        imgs = []
        for name in source.names:
            if name not in images:
                raise ValueError(f"no image given for variable {name!r}")
            img = images[name]
            if not isinstance(img, Polynomial) or img.ring != target:
                raise ValueError(f"image of {name!r} is not a target polynomial")
            imgs.append(img)
        if len(images) != source.nvars:
            extra = set(images) - set(source.names)
            raise ValueError(f"images given for unknown variables {sorted(extra)}")
        self.images = tuple(imgs)
        self._powers: dict[tuple[int, int], Polynomial] = {}

    @classmethod
    def identity_extension(cls, source: GradedPolyRing, target: GradedPolyRing) -> "RingMap":
        """Variable-to-same-named-variable inclusion of source into target."""
        return cls(source, target, {n: target.var(n) for n in source.names})

    @property
    def is_graded(self) -> bool:
        for w, img in zip(self.source.weights, self.images):
            if img.is_zero():
                continue
            if img.homogeneous_degree() != w:
                return False
        return True

    def _power(self, i: int, e: int) -> Polynomial:
        key = (i, e)
        hit = self._powers.get(key)
        if hit is None:
            hit = self.images[i] ** e
            self._powers[key] = hit
        return hit

    def __call__(self, poly: Polynomial) -> Polynomial:
        if poly.ring != self.source:
            raise ValueError("polynomial is not in the map's source ring")
        target = self.target
        out = target.zero()
        for exps, coeff in poly.terms.items():
            piece = target.const(coeff)
            for i, e in enumerate(exps):
                if e:
                    piece = piece * self._power(i, e)
            out = out + piece
        return out

    def map_ideal(self, ideal: Ideal) -> Ideal:
        """Ideal generated by the generator images (zero images dropped)."""
        if ideal.ring != self.source:
            raise ValueError("ideal is not over the map's source ring")
        images = [self(g) for g in ideal.generators]
        return Ideal(self.target, [g for g in images if not g.is_zero()])

    def __repr__(self):
        return f"RingMap({self.source!r} -> {self.target!r})"
