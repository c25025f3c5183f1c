import itertools

import numpy as np
import pytest

from supermat.bounds import bound_B, bound_C, bound_S
from supermat.graph import build_graph, verify_universal_word
from supermat.pathfinder import (
    exact_min_word,
    greedy_cycle_path,
    nearest_neighbor_path,
    prefix_potential,
    remaining_lower_bound,
)
from supermat.perms import canon_inc0, class_index0, inc_class, perm

METHODS = {
    "greedy": greedy_cycle_path,
    "nn": nearest_neighbor_path,
}


def shortest_universal_length(n, max_len):
    """Brute force over all words starting with 1 (value shifts preserve universality)."""
    index = class_index0(n)
    table = np.full(n ** n, -1, dtype=np.int64)
    for w in itertools.permutations(range(n)):
        code = sum(x * n ** (n - 1 - i) for i, x in enumerate(w))
        table[code] = index[canon_inc0(w, n)]
    full = (1 << len(index)) - 1
    for length in range(n, max_len + 1):
        rest = np.array(list(itertools.product(range(n), repeat=length - 1)), dtype=np.int64)
        words = np.hstack([np.zeros((len(rest), 1), dtype=np.int64), rest])
        seen = np.zeros(len(words), dtype=np.int64)
        for s in range(length - n + 1):
            code = np.zeros(len(words), dtype=np.int64)
            for i in range(n):
                code = code * n + words[:, s + i]
            cls = table[code]
            seen |= np.where(cls >= 0, np.left_shift(1, np.maximum(cls, 0)), 0)
        if (seen == full).any():
            return length
    return None


def test_brute_force_minimum_n3():
    assert shortest_universal_length(3, 6) == 5


@pytest.mark.slow
def test_brute_force_minimum_n4():
    assert shortest_universal_length(4, 12) == 12


@pytest.mark.parametrize("method", METHODS)
@pytest.mark.parametrize("n", range(1, 8))
def test_construction_invariants(method, n):
    r = METHODS[method](n)
    assert verify_universal_word(r.word, n)
    assert r.length == r.weight + n == len(r.word)
    assert r.path.weight() == r.weight
    assert r.path.is_covering()
    assert bound_C(n) <= r.length <= bound_S(n)
    if method == "greedy":
        assert r.length <= bound_B(n)
    assert not r.optimal


@pytest.mark.parametrize("n, expected", [(1, "1"), (2, "12"), (3, "12321")])
def test_small_words(n, expected):
    assert str(greedy_cycle_path(n).word) == expected
    assert exact_min_word(n).length == len(expected)


def test_greedy_n4_reference_word():
    assert str(greedy_cycle_path(4).word) == "123421342143"
    assert nearest_neighbor_path(4, start=inc_class(perm("1234"))).length == 12


@pytest.mark.parametrize("n, expected", [(6, 164), (7, 915)])
def test_greedy_matches_published_best(n, expected):
    assert greedy_cycle_path(n).length == expected


@pytest.mark.slow
def test_greedy_n8():
    assert greedy_cycle_path(8).length == 6118


def test_nn_other_start():
    r = nearest_neighbor_path(5, start=inc_class(perm("15432")))
    assert verify_universal_word(r.word, 5)
    assert r.path.vertices[0] == 23


def test_wrong_graph_rejected():
    with pytest.raises(ValueError):
        greedy_cycle_path(4, graph=build_graph(5, "H"))
    with pytest.raises(ValueError):
        exact_min_word(4, graph=build_graph(4, "K"))


@pytest.mark.parametrize("n, expected", [(3, 5), (4, 12)])
def test_exact_small(n, expected):
    r = exact_min_word(n)
    assert r.optimal and r.length == expected
    assert verify_universal_word(r.word, n)


def test_exact_n5_is_38():
    r = exact_min_word(5, time_limit=300)
    assert r.optimal
    assert r.length == 38
    assert verify_universal_word(r.word, 5)
    assert bound_C(5) <= 38 < 39


@pytest.mark.parametrize("n", [3, 4, 5])
def test_potential_admissible_along_optimal_path(n):
    r = exact_min_word(n, time_limit=300)
    g = build_graph(n, "H")
    v = r.path.vertices
    so_far = 0
    for k in range(1, len(v) + 1):
        assert so_far + prefix_potential(n, v[:k]) <= r.weight
        if k < len(v):
            so_far += int(g.weight(v[k - 1], v[k]))


def test_remaining_lower_bound():
    assert remaining_lower_bound(0, 0) == 0
    assert remaining_lower_bound(5, 2) == 7


def test_limits_clear_optimal_flag():
    improvements = []
    r = exact_min_word(6, node_limit=2000, on_improve=improvements.append)
    assert not r.optimal
    assert r.length <= greedy_cycle_path(6).length
    assert improvements and improvements[0].length == 164
    assert verify_universal_word(r.word, 6)
    r = exact_min_word(6, time_limit=0.05)
    assert not r.optimal


def test_deterministic():
    for fn in (greedy_cycle_path, nearest_neighbor_path):
        assert fn(6).word == fn(6).word
    a, b = exact_min_word(5), exact_min_word(5)
    assert a.word == b.word and a.nodes_expanded == b.nodes_expanded


def test_as_dict():
    d = greedy_cycle_path(4).as_dict()
    assert d["word"] == "123421342143" and d["length"] == 12 and d["weight"] == 8
    assert d["path"][0] == "1234"
