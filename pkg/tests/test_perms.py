import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supermat.perms import (
    IncClass,
    Permutation,
    all_permutations,
    compose,
    format_word,
    identity,
    inc_class,
    inverse,
    matrix_to_perm,
    parse_word,
    perm,
    perm_matrix,
    power,
    rot_class,
    rotate_word,
    shift_values,
    sigma,
)


def permutations_of(n):
    return st.permutations(list(range(1, n + 1))).map(lambda w: Permutation(tuple(w)))


sized_perm_pairs = st.integers(1, 6).flatmap(lambda n: st.tuples(permutations_of(n), permutations_of(n)))


@pytest.mark.parametrize("a, b, expected", [
    (identity(3), perm("231"), "231"),
    (perm("231"), perm("312"), "123"),
    (perm("1243"), perm("2341"), "2431"),
])
def test_compose(a, b, expected):
    assert compose(a, b) == perm(expected)


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose(perm("12"), perm("123"))


@pytest.mark.parametrize("a, expected", [("123", "123"), ("231", "312"), ("1342", "1423")])
def test_inverse(a, expected):
    assert inverse(perm(a)) == perm(expected)


@pytest.mark.parametrize("n, expected", [(1, "1"), (3, "231"), (4, "2341")])
def test_sigma(n, expected):
    assert sigma(n) == perm(expected)


@pytest.mark.parametrize("a, k, expected", [("1234", 0, "1234"), ("1243", 1, "2314"), ("1243", 3, "4132")])
def test_shift_values(a, k, expected):
    assert shift_values(perm(a), k) == perm(expected)


@pytest.mark.parametrize("a, k, expected", [("1234", 4, "1234"), ("1243", 1, "2431"), ("1234", 2, "3412")])
def test_rotate_word(a, k, expected):
    assert rotate_word(perm(a), k) == perm(expected)


@pytest.mark.parametrize("a, rep", [("1234", "1234"), ("2314", "1243"), ("4132", "1243")])
def test_inc_class(a, rep):
    assert inc_class(perm(a)).rep == perm(rep)


@pytest.mark.parametrize("a", ["1234", "2341", "3412"])
def test_rot_class(a):
    assert rot_class(perm(a)).rep == perm("1234")


def test_perm_matrix_examples():
    assert perm_matrix(perm("1")).tolist() == [[1]]
    assert (perm_matrix(perm("123")) == np.eye(3)).all()
    assert perm_matrix(perm("21")).tolist() == [[0, 1], [1, 0]]


def test_matrix_to_perm_examples():
    assert matrix_to_perm(np.eye(4, dtype=int)) == perm("1234")
    assert matrix_to_perm([[0, 1], [1, 0]]) == perm("21")
    assert matrix_to_perm([[0, 0, 1], [1, 0, 0], [0, 1, 0]]) == perm("231")


@pytest.mark.parametrize("bad", [[[1, 1], [0, 0]], [[1, 0], [0, 0]], [[2, 0], [0, 1]], [[1, 0, 0]]])
def test_matrix_to_perm_rejects(bad):
    with pytest.raises(ValueError):
        matrix_to_perm(bad)


def test_invalid_permutation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        IncClass(perm("213"))


def test_word_formats():
    assert format_word((1, 2, 4, 3), 4) == "1243"
    assert format_word((1, 12, 3), 12) == "1,12,3"
    assert parse_word("1,12,3") == (1, 12, 3)
    assert str(Permutation(tuple(range(1, 11)))) == "1,2,3,4,5,6,7,8,9,10"


@pytest.mark.parametrize("n", range(1, 5))
def test_morphism_exhaustive(n):
    for a, b in itertools.product(list(all_permutations(n)), repeat=2):
        prod = perm_matrix(a).astype(int) @ perm_matrix(b).astype(int)
        assert (perm_matrix(compose(a, b)) == prod).all()


@settings(max_examples=200)
@given(st.integers(5, 6).flatmap(lambda n: st.tuples(permutations_of(n), permutations_of(n))))
def test_morphism_sampled(pair):
    a, b = pair
    prod = perm_matrix(a).astype(int) @ perm_matrix(b).astype(int)
    assert (perm_matrix(compose(a, b)) == prod).all()


@pytest.mark.parametrize("n", range(1, 6))
def test_perm_matrix_injective(n):
    mats = {perm_matrix(a).tobytes() for a in all_permutations(n)}
    assert len(mats) == len(list(all_permutations(n)))


@given(sized_perm_pairs)
def test_transpose_is_inverse(pair):
    a, _ = pair
    assert (perm_matrix(a).T == perm_matrix(inverse(a))).all()
    assert compose(a, inverse(a)) == identity(a.n)
    assert matrix_to_perm(perm_matrix(a)) == a


@given(sized_perm_pairs, st.integers(-20, 20))
def test_actions_match_sigma_powers(pair, k):
    a, _ = pair
    s = sigma(a.n)
    assert shift_values(a, k) == compose(power(s, k), a)
    assert rotate_word(a, k) == compose(a, power(s, k))


@given(sized_perm_pairs, st.integers(-20, 20))
def test_class_well_defined(pair, k):
    a, _ = pair
    assert inc_class(shift_values(a, k)) == inc_class(a)
    assert rot_class(rotate_word(a, k)) == rot_class(a)
    assert len(set(inc_class(a).members())) == a.n
    assert len(set(rot_class(a).members())) == a.n


@pytest.mark.parametrize("n", range(1, 7))
def test_number_of_classes(n):
    perms = list(all_permutations(n))
    fact = len(perms) // n
    assert len({inc_class(a) for a in perms}) == fact
    assert len({rot_class(a) for a in perms}) == fact
