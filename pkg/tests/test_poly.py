from kfpoly.poly import Poly


def test_normalisation_and_equality():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]) == 0 and Poly().is_zero()
    assert Poly([3]) == 3
    assert Poly.from_degrees([2, 4, 2], [1, 1, -1]) == Poly.monomial(4)


def test_arithmetic():
    p, q = Poly([0, 1, 1]), Poly([1, -1])
    assert (p + q).coeffs == (1, 0, 1)
    assert (p - p).is_zero()
    assert (-q).coeffs == (-1, 1)
    assert p.scale(3)(2) == 18
    assert p.degree == 2


def test_str():
    assert str(Poly([0, 0, 1, 0, 1])) == "t^4 + t^2"
    assert str(Poly([0, 0, 0, 2])) == "2t^3"
    assert str(Poly([0, 1])) == "t"
    assert str(Poly([1])) == "1"
    assert str(Poly()) == "0"
    assert str(Poly([0, -1])) == "-t"
    assert str(Poly([1, -2, 1])) == "t^2 - 2t + 1"
    assert Poly([0, 1, 2]).to_json() == [0, 1, 2]


def test_nonnegative():
    assert Poly([0, 1, 1]).is_nonnegative()
    assert not Poly([1, -1]).is_nonnegative()
