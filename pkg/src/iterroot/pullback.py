"""Pullback multifunctions of single-valued maps and root transfer.

The pullback of a map f sends each point to the full f-preimage of that
point.  A multifunction is such a pullback exactly when it is total,
its values are pairwise disjoint, and its image is the whole ground set;
the witness map reads membership backwards.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Multifunction, SingleMap, bits, compose, equals, iterate, iterate_map, profile


def pullback_of(f: SingleMap) -> Multifunction:
    """The multifunction x -> preimage of x under f."""
    images = [0] * f.ground.size
    for x, y in enumerate(f.image):
        images[y] |= 1 << x
    return Multifunction(f.ground, tuple(images))


@dataclass(frozen=True)
class PullbackWitness:
    is_pullback: bool
    witness_map: SingleMap | None
    failed_conditions: frozenset[str]


def is_pullback(F: Multifunction) -> PullbackWitness:
    """Decide pullback membership; failures are reported, never raised."""
    size = F.ground.size
    failed = set()
    seen = 0
    disjoint = True
    for m in F.images:
        if seen & m:
            disjoint = False
        seen |= m
    if not disjoint:
        failed.add("disjointness")
    if seen != F.ground.full_mask:
        failed.add("surjectivity")
    if any(not m for m in F.images):
        failed.add("totality")
    if failed:
        return PullbackWitness(False, None, frozenset(failed))
    image = [0] * size
    for y, m in enumerate(F.images):
        for x in bits(m):
            image[x] = y
    return PullbackWitness(True, SingleMap(F.ground, tuple(image)), frozenset())


@dataclass(frozen=True)
class DecompositionReport:
    """Conclusions that pullback structure forces on a factorization F = G1 o G2."""

    applicable: bool
    failed_preconditions: tuple[str, ...]
    im_g1_full: bool | None = None
    g2_values_disjoint: bool | None = None
    root_is_pullback: bool | None = None


def decomposition_check(F: Multifunction, G1: Multifunction, G2: Multifunction,
                        root: Multifunction | None = None,
                        order: int | None = None) -> DecompositionReport:
    """Verify the closure conclusions for a factorization of a pullback F.

    ``root``/``order`` optionally name an n-th root G with G^n = F, in which
    case the report also records whether G itself is a pullback.
    """
    failed = []
    if not equals(compose(G1, G2), F):
        failed.append("factorization")
    for name, H in (("totality", F), ("totality_g1", G1), ("totality_g2", G2)):
        if any(not m for m in H.images):
            failed.append(name)
    if not is_pullback(F).is_pullback:
        failed.append("pullback")
    if root is not None:
        if order is None or order < 2:
            failed.append("root_order")
        elif not equals(iterate(root, order), F) or any(not m for m in root.images):
            failed.append("root_identity")
    if failed:
        return DecompositionReport(False, tuple(failed))
    im_g1_full = len(profile(G1).image) == F.ground.size
    seen = 0
    disjoint = True
    for m in G2.images:
        if seen & m:
            disjoint = False
        seen |= m
    root_is_pullback = is_pullback(root).is_pullback if root is not None else None
    return DecompositionReport(True, (), im_g1_full, disjoint, root_is_pullback)


@dataclass(frozen=True)
class TransferReport:
    """Agreement between a map root relation and its pullback root relation."""

    applicable: bool
    map_root_holds: bool | None = None
    pullback_root_holds: bool | None = None
    agree: bool | None = None


def transfer_root(f: SingleMap, g: SingleMap, n: int) -> TransferReport:
    """Compare g^n = f with (pullback g)^n = pullback f; the two must agree."""
    if f.ground != g.ground:
        raise ValueError("maps must share a ground set")
    if n < 2:
        raise ValueError("root order must be at least 2")
    if set(f.image) != set(range(f.ground.size)):
        return TransferReport(False)
    map_side = iterate_map(g, n) == f
    pullback_side = equals(iterate(pullback_of(g), n), pullback_of(f))
    return TransferReport(True, map_side, pullback_side, map_side == pullback_side)
