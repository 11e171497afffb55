"""Fixed-point structure of single maps and the order exclusions it implies.

A fixed point is non-isolated when some other point maps onto it; its tail
is its preimage minus itself.  Two exclusion rules are derived from the
profile: one bounds root orders by the total tail mass, the other combines
a tail-size bound with a divisibility condition on the candidate order.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import SingleMap


@dataclass(frozen=True)
class FixedPointProfile:
    """Fixed points of a map with per-point tails and preimage flags.

    ``total_tail_size`` is the size of the union of the tails over the
    non-isolated fixed points.
    """

    fixed_points: tuple[int, ...]
    tails: dict[int, frozenset[int]]
    non_isolated: tuple[int, ...]
    total_tail_size: int
    tail_preimage_nonempty: dict[int, bool]

    def is_isolated(self, x: int) -> bool:
        return not self.tails[x]


@dataclass(frozen=True)
class OrderExclusion:
    """Orders n > lower_bound are excluded, optionally only when no
    m in [2, forbidden_divisor_max] divides n."""

    lower_bound: int
    forbidden_divisor_max: int | None
    source_rule: str

    def excludes(self, n: int) -> bool:
        if n <= self.lower_bound:
            return False
        if self.forbidden_divisor_max is None:
            return True
        return all(n % m for m in range(2, self.forbidden_divisor_max + 1))


def fixed_point_profile(f: SingleMap) -> FixedPointProfile:
    size = f.ground.size
    preimages: list[set[int]] = [set() for _ in range(size)]
    for x, y in enumerate(f.image):
        preimages[y].add(x)
    fixed = tuple(x for x in range(size) if f.image[x] == x)
    tails = {x: frozenset(preimages[x] - {x}) for x in fixed}
    non_isolated = tuple(x for x in fixed if tails[x])
    union: set[int] = set()
    for x in non_isolated:
        union |= tails[x]
    flags = {y: bool(preimages[y]) for x in non_isolated for y in tails[x]}
    return FixedPointProfile(fixed, tails, non_isolated, len(union), flags)


def rice_exclusion(f: SingleMap) -> OrderExclusion | None:
    """Exclude orders above the total tail mass, when some tail point has a preimage."""
    prof = fixed_point_profile(f)
    applicable = any(
        prof.tail_preimage_nonempty[y]
        for x in prof.non_isolated
        for y in prof.tails[x]
    )
    if not applicable:
        return None
    return OrderExclusion(prof.total_tail_size, None, "tail-mass")


def non_isolated_exclusion(f: SingleMap) -> OrderExclusion | None:
    """Exclude orders above the largest tail size that are coprime to every
    m up to the number of non-isolated fixed points.

    Requires at least two non-isolated fixed points and a nonempty preimage
    for every tail point; the count k is always taken from the full profile.
    """
    prof = fixed_point_profile(f)
    k = len(prof.non_isolated)
    if k < 2:
        return None
    if not all(
        prof.tail_preimage_nonempty[y]
        for x in prof.non_isolated
        for y in prof.tails[x]
    ):
        return None
    l = max(len(prof.tails[x]) for x in prof.non_isolated)
    return OrderExclusion(l, k, "non-isolated-count")
