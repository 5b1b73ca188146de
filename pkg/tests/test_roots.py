import itertools

import pytest

from kfpoly.errors import DomainError, RankError
from kfpoly.roots import (
    Permutation,
    WeightVector,
    coroot_pairing,
    enumerate_weyl,
    positive_roots,
    rho,
    sign,
    weyl_act,
)


@pytest.mark.parametrize("n, expected", [
    (2, [(1, 2)]),
    (3, [(1, 2), (1, 3), (2, 3)]),
    (4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
])
def test_positive_roots(n, expected):
    assert positive_roots(n) == expected


def test_rank_errors():
    with pytest.raises(RankError):
        positive_roots(1)
    with pytest.raises(RankError):
        rho(0)
    with pytest.raises(RankError):
        Permutation.simple(4, 4)


@pytest.mark.parametrize("n, expected", [(2, (1, 0)), (3, (2, 1, 0)), (4, (3, 2, 1, 0))])
def test_rho(n, expected):
    assert rho(n).coords == expected


def test_coroot_pairing():
    assert coroot_pairing(WeightVector((5, 4, 1, 0)), 2) == 3
    assert coroot_pairing(WeightVector((3, 2, 1, 0)), 1) == 1
    for i in (1, 2, 3):
        assert coroot_pairing(WeightVector((1, 1, 1, 1)), i) == 0


def test_weights_live_in_quotient():
    assert WeightVector((3, 3, 1, 1)) == WeightVector((2, 2, 0, 0))
    assert hash(WeightVector((3, 3, 1, 1))) == hash(WeightVector((2, 2, 0, 0)))
    assert WeightVector((1, 1, 1)).root_lattice_rep() == (0, 0, 0)
    assert WeightVector((1, 0, 0)).root_lattice_rep() is None


def test_parse():
    assert WeightVector.parse("2,2,0,0").coords == (2, 2, 0, 0)
    assert str(WeightVector.parse(" 1, 0 ,-1")) == "1,0,-1"
    for bad in ["", "1,,2", "a,b", "1.5,0"]:
        with pytest.raises(DomainError):
            WeightVector.parse(bad)


def test_weyl_act_examples():
    v = WeightVector((5, 4, 1, 0))
    s1, s3 = Permutation.simple(1, 4), Permutation.simple(3, 4)
    assert weyl_act(s1, v).coords == (4, 5, 1, 0)
    assert weyl_act(Permutation.identity(4), v) == v
    assert weyl_act(s3 * s1, v).coords == (4, 5, 0, 1)
    # the s3 s1 term of the worked example evaluates to 2 alpha_2
    shifted = weyl_act(s3 * s1, v) - WeightVector((1, 1, 1, 1)) - rho(4)
    assert shifted.root_lattice_rep() == (0, 2, -2, 0)


def test_weyl_act_length_mismatch():
    with pytest.raises(DomainError):
        weyl_act(Permutation.identity(3), (1, 2))


def test_sign_examples():
    assert sign(Permutation.identity(4)) == 1
    assert sign(Permutation.simple(1, 4)) == -1
    assert sign(Permutation.from_word([3, 1], 4)) == 1


@pytest.mark.parametrize("n, count", [(2, 2), (3, 6), (4, 24)])
def test_enumerate_weyl_counts(n, count):
    ws = list(enumerate_weyl(n))
    assert len(ws) == count == len(set(ws))
    assert ws[0].is_identity()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_action_and_sign_are_homomorphisms(n):
    ws = list(enumerate_weyl(n))
    v = WeightVector(tuple(range(10, 10 + n)))
    for u, w in itertools.product(ws, repeat=2):
        assert weyl_act(u * w, v) == weyl_act(u, weyl_act(w, v))
        assert sign(u * w) == sign(u) * sign(w)
    for w in ws:
        assert (w * w.inverse()).is_identity()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reduced_words_and_descents(n):
    for w in enumerate_weyl(n):
        word = w.reduced_word
        assert len(word) == w.length
        assert Permutation.from_word(word, n) == w
        for i in range(1, n):
            left = w.left_simple(i)
            assert left == Permutation.simple(i, n) * w
            assert w.has_left_descent(i) == (left.length < w.length)


def test_labels():
    assert Permutation.identity(4).label() == "id"
    assert Permutation.from_word([3, 1], 4).label() == "s3s1"
    assert Permutation.from_word([1, 3], 4).label() == "s3s1"
