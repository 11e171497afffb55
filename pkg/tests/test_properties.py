"""Randomized structural properties driven by hypothesis strategies."""
from hypothesis import given, settings, strategies as st

from iterroot.core import (
    GroundSet,
    Multifunction,
    compose,
    equals,
    invert,
    iterate,
)
from iterroot.mfnio import parse, serialize
from iterroot.paths import path_matrix


@st.composite
def multifunctions(draw, min_size=1, max_size=5):
    size = draw(st.integers(min_size, max_size))
    ground = GroundSet(tuple(f"p{i}" for i in range(size)))
    masks = draw(st.tuples(*[st.integers(0, (1 << size) - 1)] * size))
    return Multifunction(ground, masks)


@given(multifunctions())
def test_serialization_round_trip(F):
    assert equals(parse(serialize(F)), F)


@given(multifunctions())
def test_invert_is_involutive(F):
    assert equals(invert(invert(F)), F)


@settings(max_examples=50)
@given(multifunctions(max_size=4), st.data())
def test_compose_associative(F, data):
    size = F.ground.size
    G = data.draw(multifunctions(min_size=size, max_size=size))
    H = data.draw(multifunctions(min_size=size, max_size=size))
    assert equals(compose(F, compose(G, H)), compose(compose(F, G), H))


@settings(max_examples=50)
@given(multifunctions(max_size=4), st.integers(1, 3), st.integers(1, 3))
def test_path_matrix_composition_law(F, k, l):
    size = F.ground.size
    a = path_matrix(F, k).entries
    b = path_matrix(F, l).entries
    total = path_matrix(F, k + l).entries
    for x in range(size):
        for z in range(size):
            assert total[x][z] == sum(a[x][y] * b[y][z] for y in range(size))


@settings(max_examples=50)
@given(multifunctions(max_size=4), st.integers(0, 2), st.integers(0, 2))
def test_iterate_additive(F, m, n):
    assert equals(iterate(F, m + n), compose(iterate(F, m), iterate(F, n)))
