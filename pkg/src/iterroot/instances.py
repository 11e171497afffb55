"""Deterministic construction of the named benchmark instances and seeded
random generators.

The two chain-family multifunctions are finite truncations of infinite
pictures: an unbounded forward chain is closed by routing its last point
into a preimage-free backward-chain tail, which keeps the domain total,
keeps every in-degree away from the hub at one, and adds no new two-step
route into the hub.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .core import GroundSet, Multifunction, SingleMap, mask_of


@dataclass(frozen=True)
class InstanceSpec:
    """A reproducible instance request; identical specs build identical objects."""

    name: str
    depth: int | None = None
    modulus: int | None = None
    exponent: int | None = None
    variant: str | None = None
    size: int | None = None
    max_out_degree: int | None = None
    density: float | None = None
    seed: int | None = None


def f1(depth: int = 3) -> Multifunction:
    """Hub with four in-routes fed pairwise by two branching points, plus a
    forward cycle; fires the forward path rule with M=2, N=1 but leaves the
    two-step preimage of the hub at exactly two points."""
    if depth < 3:
        raise ValueError("depth must be at least 3")
    labels = [f"x{i}" for i in range(depth + 1)]
    labels += [f"x-1.{j}" for j in range(1, 5)]
    for i in range(2, depth + 1):
        labels += [f"x-{i}.1", f"x-{i}.2"]
    ground = GroundSet(tuple(labels))
    idx = {lab: k for k, lab in enumerate(ground.labels)}
    images = [0] * ground.size
    for i in range(depth):
        images[idx[f"x{i}"]] = 1 << idx[f"x{i + 1}"]
    # close the forward chain into the preimage-free tail of backward chain 1
    images[idx[f"x{depth}"]] = 1 << idx[f"x-{depth}.1"]
    for j in range(1, 5):
        images[idx[f"x-1.{j}"]] = 1 << idx["x0"]
    images[idx["x-2.1"]] = mask_of((idx["x-1.1"], idx["x-1.2"]))
    images[idx["x-2.2"]] = mask_of((idx["x-1.3"], idx["x-1.4"]))
    for i in range(3, depth + 1):
        for j in (1, 2):
            images[idx[f"x-{i}.{j}"]] = 1 << idx[f"x-{i - 1}.{j}"]
    return Multifunction(ground, tuple(images))


def f2(depth: int = 3) -> Multifunction:
    """Hub branching into two forward chains with three in-routes and three
    backward chains; closed so the domain and image are both the whole set
    and every out-degree stays at most two."""
    if depth < 2:
        raise ValueError("depth must be at least 2")
    labels = ["x0"]
    for i in range(1, depth + 1):
        labels += [f"x{i}.1", f"x{i}.2"]
    for i in range(1, depth + 1):
        labels += [f"x-{i}.1", f"x-{i}.2", f"x-{i}.3"]
    ground = GroundSet(tuple(labels))
    idx = {lab: k for k, lab in enumerate(ground.labels)}
    images = [0] * ground.size
    images[idx["x0"]] = mask_of((idx["x1.1"], idx["x1.2"]))
    for i in range(1, depth):
        for j in (1, 2):
            images[idx[f"x{i}.{j}"]] = 1 << idx[f"x{i + 1}.{j}"]
    # close both forward chains so that all three backward tails get preimages
    images[idx[f"x{depth}.1"]] = mask_of((idx[f"x-{depth}.1"], idx[f"x-{depth}.3"]))
    images[idx[f"x{depth}.2"]] = 1 << idx[f"x-{depth}.2"]
    for j in (1, 2, 3):
        images[idx[f"x-1.{j}"]] = 1 << idx["x0"]
    for i in range(2, depth + 1):
        for j in (1, 2, 3):
            images[idx[f"x-{i}.{j}"]] = 1 << idx[f"x-{i - 1}.{j}"]
    return Multifunction(ground, tuple(images))


def fig67() -> tuple[SingleMap, SingleMap]:
    """The 20-point map with four non-isolated fixed points and its order-4 root."""
    labels = [f"x{j}" for j in range(1, 5)]
    labels += [f"y{j}.1" for j in range(1, 5)]
    labels += [f"y{j}.2" for j in range(1, 5)]
    labels += [f"z{j}.1" for j in range(1, 5)]
    labels += [f"z{j}.2" for j in range(1, 5)]
    ground = GroundSet(tuple(labels))
    idx = {lab: k for k, lab in enumerate(ground.labels)}
    f = [0] * ground.size
    g = [0] * ground.size
    for j in range(1, 5):
        f[idx[f"x{j}"]] = idx[f"x{j}"]
        g[idx[f"x{j}"]] = idx[f"x{j % 4 + 1}"]
        for i in (1, 2):
            f[idx[f"y{j}.{i}"]] = idx[f"x{j}"]
            f[idx[f"z{j}.{i}"]] = idx[f"y{j}.{i}"]
            if j <= 3:
                g[idx[f"y{j}.{i}"]] = idx[f"y{j + 1}.{i}"]
                g[idx[f"z{j}.{i}"]] = idx[f"z{j + 1}.{i}"]
            else:
                g[idx[f"y{j}.{i}"]] = idx["x1"]
                g[idx[f"z{j}.{i}"]] = idx[f"y1.{i}"]
    return SingleMap(ground, tuple(f)), SingleMap(ground, tuple(g))


def cyclic_power(modulus: int, exponent: int, variant: str = "add") -> SingleMap:
    """Residue arithmetic maps: translation by e or multiplication by e mod q."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if variant not in ("add", "mul"):
        raise ValueError("variant must be 'add' or 'mul'")
    ground = GroundSet(tuple(str(i) for i in range(modulus)))
    if variant == "add":
        image = tuple((x + exponent) % modulus for x in range(modulus))
    else:
        image = tuple((x * exponent) % modulus for x in range(modulus))
    return SingleMap(ground, image)


def _ground(size: int) -> GroundSet:
    return GroundSet(tuple(f"p{i}" for i in range(size)))


def random_multifunction(size: int, seed: int, max_out_degree: int | None = None,
                         density: float = 0.5) -> Multifunction:
    rng = random.Random(seed)
    images = []
    for _ in range(size):
        targets = [y for y in range(size) if rng.random() < density]
        if max_out_degree is not None and len(targets) > max_out_degree:
            targets = sorted(rng.sample(targets, max_out_degree))
        images.append(mask_of(targets))
    return Multifunction(_ground(size), tuple(images))


def random_single_map(size: int, seed: int) -> SingleMap:
    rng = random.Random(seed)
    return SingleMap(_ground(size), tuple(rng.randrange(size) for _ in range(size)))


def random_permutation(size: int, seed: int) -> SingleMap:
    rng = random.Random(seed)
    perm = list(range(size))
    rng.shuffle(perm)
    return SingleMap(_ground(size), tuple(perm))


def build(spec: InstanceSpec):
    """Dispatch a spec to its constructor; unknown names or parameters raise."""
    if spec.name == "f1":
        return f1(spec.depth if spec.depth is not None else 3)
    if spec.name == "f2":
        return f2(spec.depth if spec.depth is not None else 3)
    if spec.name == "fig67-f":
        return fig67()[0]
    if spec.name == "fig67-g":
        return fig67()[1]
    if spec.name == "cyclic-power":
        if spec.modulus is None or spec.exponent is None:
            raise ValueError("cyclic-power needs modulus and exponent")
        return cyclic_power(spec.modulus, spec.exponent, spec.variant or "add")
    if spec.name == "random-mf":
        if spec.size is None or spec.seed is None:
            raise ValueError("random-mf needs size and seed")
        return random_multifunction(spec.size, spec.seed, spec.max_out_degree,
                                    spec.density if spec.density is not None else 0.5)
    if spec.name == "random-map":
        if spec.size is None or spec.seed is None:
            raise ValueError("random-map needs size and seed")
        return random_single_map(spec.size, spec.seed)
    raise ValueError(f"unknown instance name {spec.name!r}")
