import json
import re

import pytest

from kfpoly.errors import InvariantViolation
from kfpoly.kostant import KostantPartition as K
from kfpoly.kostant import SignedTerm, kf_alternating
from kfpoly.phi_graph import (
    build_graph,
    fixed_points,
    is_admissible,
    is_broken_by_after,
    k_values,
    kf_admissible,
    kf_positive,
    phi,
    psi,
    psi_map,
    to_dot,
    to_json,
)
from kfpoly.poly import Poly
from kfpoly.roots import Permutation
from kfpoly.verify import dominant_pairs

LAM, MU = (2, 2, 0, 0), (1, 1, 1, 1)
ID4 = Permutation.identity(4)


def kp(*roots):
    return K.from_roots(roots)


def term(word, *roots, n=4):
    return SignedTerm(Permutation.from_word(word, n), kp(*roots))


@pytest.fixture(scope="module")
def fig():
    return build_graph(LAM, MU, 4)


def test_k_values():
    assert k_values(ID4, LAM) == (1, 3, 1)
    assert k_values(Permutation.simple(1, 4), LAM) == (-1, 4, 1)
    assert k_values(ID4, (0, 0, 0, 0)) == (1, 1, 1)
    with pytest.raises(InvariantViolation):
        k_values(ID4, (0, 1, 0, 0))


def test_phi_examples():
    assert phi(term([1], (2, 3), (2, 4)), 1, LAM) == term([], (2, 3), (1, 4))
    assert phi(term([], (1, 4), (2, 3)), 1, LAM) == term([1], (2, 3), (2, 4))
    assert phi(term([], (1, 3), (2, 4)), 2, LAM) is None


def test_example_graph_shape(fig):
    assert len(fig.vertices) == 10
    assert len(fig.edges) == 6
    comps = fig.components
    assert len(comps) == 5
    assert sorted(len(c.vertices) for c in comps) == [1, 1, 2, 2, 4]
    sources = {c.source for c in comps}
    assert sources == {v for v in fig.vertices if v.w.is_identity()}
    square = next(c for c in comps if len(c.vertices) == 4)
    assert square.source == term([], (1, 4), (2, 3))
    assert square.labels == (1, 3)
    assert {v.w.label() for v in square.vertices} == {"id", "s1", "s3", "s3s1"}
    assert not fig.anomalies


def test_phi_edges_flip_sign_and_keep_size(fig):
    for a, i, b in fig.edges:
        assert b.w == a.w.left_simple(i)
        assert a.sign == -b.sign
        assert len(a.part) == len(b.part)
        assert fig.phi(b, i) == a


def test_psi_examples(fig):
    assert psi(term([], (1, 4), (2, 3)), fig) == term([1], (2, 3), (2, 4))
    assert psi(term([3], (1, 3), (2, 3)), fig) == term([3, 1], (2, 3), (2, 3))
    for fixed in (term([], (1, 3), (2, 4)), term([], (1, 2), (2, 3), (2, 3), (3, 4))):
        assert psi(fixed, fig) == fixed
        assert all(fig.phi(fixed, i) is None for i in (1, 2, 3))


def test_psi_is_sign_reversing_involution(fig):
    table = psi_map(fig)
    for v, p in table.items():
        assert table[p] == v
        assert len(p.part) == len(v.part)
        if p != v:
            assert p.sign == -v.sign


def test_fixed_points(fig):
    assert fixed_points(fig) == [term([], (1, 3), (2, 4)), term([], (1, 2), (2, 3), (2, 3), (3, 4))]
    g = build_graph((2, 1, 0), (1, 1, 1), 3)
    assert sorted(len(v.part) for v in fixed_points(g)) == [1, 2]


def test_trivial_instance():
    g = build_graph((2, 1, 0), (2, 1, 0), 3)
    assert g.vertices == [SignedTerm(Permutation.identity(3), K())]
    assert g.edges == []
    assert len(g.components) == 1 and g.components[0].is_singleton
    assert fixed_points(g) == g.vertices


def test_kf_positive_and_admissible_examples():
    for f in (kf_positive, kf_admissible):
        assert f(LAM, MU, 4) == Poly([0, 0, 1, 0, 1])
        assert f((2, 1, 0), (1, 1, 1), 3) == Poly([0, 1, 1])
        assert f((3, 1, 0, 0), (3, 1, 0, 0), 4) == 1


def test_is_admissible_examples():
    assert is_admissible(kp((1, 3), (2, 4)), (1, 3, 1))
    assert is_admissible(K(), (1, 3, 1))
    assert is_admissible(kp((1, 2), (2, 3), (2, 3), (3, 4)), (1, 3, 1))
    assert not is_admissible(kp((1, 4), (2, 3)), (1, 3, 1))


def test_admissible_reading_matters():
    # reading every minus rather than the unmatched ones overcounts here
    lam, mu = (4, 0, 0, 0), (1, 1, 1, 1)
    assert kf_admissible(lam, mu, 4) == Poly.monomial(6) == kf_alternating(lam, mu, 4)
    assert kf_admissible(lam, mu, 4, reading="all", check=False) == Poly([0, 0, 0, 0, 0, 1, 1])


@pytest.mark.parametrize("n", [2, 3])
def test_fixed_points_are_admissibles(n):
    for lam, mu in dominant_pairs(n, 6):
        g = build_graph(lam, mu, n)
        kv = k_values(Permutation.identity(n), lam)
        ids = [v for v in g.vertices if v.w.is_identity()]
        assert {v for v in ids if is_admissible(v.part, kv)} == set(fixed_points(g))


def test_broken_hexagon_witness():
    g = build_graph((4, 0, 0, 0), MU, 4)
    v = term([], (1, 2), (1, 3), (1, 4))
    ks = g.k(v)
    assert ks == (5, 1, 1)
    assert is_broken_by_after(v.part, 3, 2, ks)

    def ph(u, *word):
        for i in reversed(word):
            u = None if u is None else g.phi(u, i)
        return u

    assert ph(v, 3, 2, 3) is None and ph(v, 2, 3, 2) is None and ph(v, 3, 2) is None
    assert ph(v, 2, 3) is not None


def test_regular_hexagon_witness():
    g = build_graph((8, 0, 0, 0), (2, 2, 2, 2), 4)
    v = SignedTerm(ID4, K({(1, 2): 2, (1, 3): 2, (1, 4): 2}))
    ks = g.k(v)
    assert not is_broken_by_after(v.part, 2, 3, ks)
    assert not is_broken_by_after(v.part, 3, 2, ks)
    a = g.phi(g.phi(g.phi(v, 3), 2), 3)
    b = g.phi(g.phi(g.phi(v, 2), 3), 2)
    assert a is not None and a == b


def test_not_broken_when_phi_vanishes():
    v = term([], (1, 3), (2, 4))
    ks = k_values(ID4, LAM)
    for i in (1, 2, 3):
        for j in (i - 1, i + 1):
            if 1 <= j <= 3:
                assert not is_broken_by_after(v.part, i, j, ks)


def test_dot_export(fig):
    dot = to_dot(fig)
    assert dot == to_dot(build_graph(LAM, MU, 4))
    vertex_lines = re.findall(r"^  v\d+ \[label=", dot, re.M)
    assert len(vertex_lines) == 10
    assert len(re.findall(r"->", dot)) == 6
    assert dot.count("shape=box") == 2
    assert 'v1 [label="id | 3 / 4 | 2", psi="v1", shape=box];' in dot


def test_json_export(fig):
    data = json.loads(to_json(fig))
    assert data["lambda"] == list(LAM) and data["n"] == 4
    assert len(data["vertices"]) == 10 and len(data["edges"]) == 6
    fixed = [v for v in data["vertices"] if v["psi"] == v["id"]]
    assert sorted(v["size"] for v in fixed) == [2, 4]
