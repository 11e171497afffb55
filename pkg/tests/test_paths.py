import itertools

import pytest

from iterroot.core import GroundSet, Multifunction, invert
from iterroot.instances import f1, random_multifunction
from iterroot.paths import count_paths, count_paths_dfs, path_matrix


def test_zero_length_gives_identity_matrix():
    F = random_multifunction(4, seed=1)
    pm = path_matrix(F, 0)
    for x in range(4):
        for y in range(4):
            assert pm.entries[x][y] == int(x == y)


def test_f1_two_paths_into_hub():
    F = f1(3)
    x0 = F.ground.index("x0")
    pm = path_matrix(F, 2)
    assert sum(pm.entries[x][x0] for x in range(F.ground.size)) == 4


def test_inverted_f1_one_paths_out_of_hub():
    F = invert(f1(3))
    x0 = F.ground.index("x0")
    pm = path_matrix(F, 1)
    assert sum(pm.entries[x0][y] for y in range(F.ground.size)) == 4


def test_count_paths_from_point_to_all_is_out_degree():
    F = random_multifunction(5, seed=7)
    for x in range(5):
        assert count_paths(F, [x], range(5), 1) == F.out_degree(x)


def test_count_paths_dominates_inverse_image_size():
    from iterroot.core import inverse_image
    for seed in range(10):
        F = random_multifunction(5, seed=seed)
        for k in (1, 2, 3):
            for x in range(5):
                assert count_paths(F, range(5), [x], k) >= len(inverse_image(F, [x], k))


def test_self_loop_has_one_path_of_every_length():
    F = Multifunction(GroundSet(("a",)), (1,))
    for k in (1, 2, 5, 17):
        assert count_paths(F, [0], [0], k) == 1


def test_zero_length_set_counting_rejected():
    F = random_multifunction(3, seed=0)
    with pytest.raises(ValueError):
        count_paths(F, [0], [1], 0)


def test_matrix_counts_match_dfs_enumeration():
    for seed in range(8):
        F = random_multifunction(6, seed=seed)
        for k in range(5):
            pm = path_matrix(F, k)
            for x in range(6):
                for y in range(6):
                    assert pm.entries[x][y] == count_paths_dfs(F, x, y, k)


def test_chapman_kolmogorov_on_random_instances():
    for seed in range(10):
        F = random_multifunction(5, seed=seed + 40)
        mats = {k: path_matrix(F, k).entries for k in range(1, 4)}
        for k, l in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2)]:
            total = path_matrix(F, k + l).entries
            for x in range(5):
                for z in range(5):
                    assert total[x][z] == sum(
                        mats[k][x][y] * mats[l][y][z] for y in range(5))


def test_counts_monotone_under_edge_addition():
    F = random_multifunction(5, seed=77, density=0.3)
    missing = [(x, y) for x in range(5) for y in range(5)
               if not F.images[x] >> y & 1]
    assert missing
    x, y = missing[0]
    images = list(F.images)
    images[x] |= 1 << y
    G = Multifunction(F.ground, tuple(images))
    for k in (1, 2, 3, 4):
        a = path_matrix(F, k).entries
        b = path_matrix(G, k).entries
        for i, j in itertools.product(range(5), repeat=2):
            assert b[i][j] >= a[i][j]


def test_dense_graph_counts_are_exact_big_integers():
    ground = GroundSet(tuple(f"p{i}" for i in range(10)))
    full = (1 << 10) - 1
    F = Multifunction(ground, (full,) * 10)
    assert count_paths(F, range(10), [0], 30) == 10**30
    assert path_matrix(F, 30).entries[0][0] == 10**29


def test_repeated_squaring_agrees_with_direct_products():
    F = random_multifunction(5, seed=5)
    direct = path_matrix(F, 4).entries
    for k in (5, 6, 9):
        via_squaring = path_matrix(F, k).entries
        step = path_matrix(F, k - 4).entries
        expected = [[sum(direct[x][y] * step[y][z] for y in range(5))
                     for z in range(5)] for x in range(5)]
        assert [list(r) for r in via_squaring] == expected
