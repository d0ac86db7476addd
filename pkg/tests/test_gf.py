from itertools import product

import pytest

from friendship import make_field
from friendship.errors import BadDegree, DivisionByZero, FieldMismatch, NotPrime

# (p, m) for every field order up to 9; small enough for exhaustive checks.
SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


def _mul_poly(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return tuple(out)


def _smallest_irreducible(p, m):
    """Oracle: sieve out every monic product of two smaller monic factors."""
    monic = {
        d: [tuple(low) + (1,) for low in product(range(p), repeat=d)]
        for d in range(1, m)
    }
    reducible = set()
    for d1 in range(1, m):
        d2 = m - d1
        if d2 < 1:
            continue
        for f in monic[d1]:
            for g in monic[d2]:
                reducible.add(_mul_poly(f, g, p))
    candidates = [tuple(low) + (1,) for low in product(range(p), repeat=m)]
    return next(c for c in candidates if c not in reducible)


def test_gf2_addition_has_characteristic_two():
    f = make_field(2, 1)
    one = f.one()
    assert (one + one).is_zero()


def test_gf4_modulus_is_unique_irreducible_quadratic():
    f = make_field(2, 2)
    assert f.modulus == (1, 1, 1)
    assert f.modulus == _smallest_irreducible(2, 2)


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (3, 2)])
def test_modulus_is_smallest_irreducible(p, m):
    assert make_field(p, m).modulus == _smallest_irreducible(p, m)


def test_composite_characteristic_rejected():
    with pytest.raises(NotPrime):
        make_field(4, 1)


@pytest.mark.parametrize("p", [0, 1, -3, 2.0])
def test_bad_characteristic_rejected(p):
    with pytest.raises(NotPrime):
        make_field(p, 1)


@pytest.mark.parametrize("m", [0, -1, 1.5])
def test_bad_degree_rejected(m):
    with pytest.raises(BadDegree):
        make_field(2, m)


def test_gf4_generator_square():
    f = make_field(2, 2)
    x = f.element([0, 1])
    assert (x * x).coeffs == (1, 1)  # x^2 reduces to x + 1


def test_gf5_inverse_of_two():
    assert 2 * 3 % 5 == 1
    f = make_field(5, 1)
    assert f.element([2]).inv() == f.element([3])


def test_inverse_of_zero_rejected():
    f = make_field(3, 1)
    with pytest.raises(DivisionByZero):
        f.zero().inv()


def test_mixed_field_arithmetic_rejected():
    a = make_field(2, 1).one()
    b = make_field(3, 1).one()
    with pytest.raises(FieldMismatch):
        a + b
    with pytest.raises(FieldMismatch):
        a * b


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, m):
    f = make_field(p, m)
    els = f.elements()
    assert len(els) == p**m
    zero, one = f.zero(), f.one()
    for a in els:
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        for b in els:
            assert a + b == b + a
            assert a * b == b * a
    for a in els:
        for b in els:
            for c in els:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_unit_group_has_full_order(p, m):
    f = make_field(p, m)
    q = p**m
    nonzero = [a for a in f.elements() if not a.is_zero()]
    assert len(nonzero) == q - 1
    one = f.one()
    for a in nonzero:
        assert a.inv() * a == one
        assert a ** (q - 1) == one
        for b in nonzero:
            assert not (a * b).is_zero()


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_frobenius_is_additive(p, m):
    f = make_field(p, m)
    els = f.elements()
    for a in els:
        for b in els:
            assert (a + b) ** p == a**p + b**p


@pytest.mark.parametrize("p,m", SMALL_FIELDS)
def test_index_round_trip(p, m):
    f = make_field(p, m)
    for i in range(p**m):
        assert f.from_index(i).index == i


def test_index_tables_match_element_arithmetic():
    f = make_field(3, 2)
    els = f.elements()
    for a in els:
        for b in els:
            assert f.add_index(a.index, b.index) == (a + b).index
            assert f.mul_index(a.index, b.index) == (a * b).index
