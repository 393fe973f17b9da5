import random

import pytest

from ffinv.gf import (
    Field,
    FieldError,
    euler_phi,
    factorize,
    moebius,
    parse_field,
)


def test_factorize():
    assert factorize(1) == []
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(97) == [(97, 1)]


def test_euler_phi_and_moebius():
    assert [euler_phi(m) for m in range(1, 9)] == [1, 1, 2, 2, 4, 2, 6, 4]
    assert [moebius(m) for m in range(1, 9)] == [1, -1, -1, 0, -1, 1, -1, 0]


def test_prime_field_basics():
    F = Field(7)
    assert F.q == 7 and F.k == 1 and F.modulus is None
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(2) == 5
    assert F.pow(3, 6) == 1


def test_extension_modulus_is_lex_smallest():
    # the first monic irreducible quadratic in coefficient-lex order
    assert Field(2, 2).modulus == (1, 1, 1)  # t^2 + t + 1
    assert Field(3, 2).modulus == (1, 0, 1)  # t^2 + 1


def test_field_axioms_random():
    rng = random.Random(7)
    for F in (Field(5), Field(2, 2), Field(3, 2), Field(2, 3)):
        for _ in range(200):
            a, b, c = (rng.randrange(F.q) for _ in range(3))
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            assert F.add(a, F.neg(a)) == 0
            if a:
                assert F.mul(a, F.inv(a)) == 1


def test_orders():
    F = Field(17)
    assert F.order(2) == 8
    assert F.order(13) == 4
    assert F.order(16) == 2
    assert F.primitive_element() == 3
    assert F.element_of_order(8) == 2
    assert F.element_of_order(5) is None
    F4 = Field(2, 2)
    # both non-identity units of F_4 generate the order-3 group
    assert all(F4.order(x) == 3 for x in range(2, 4))


def test_order_multiplicative_in_extension():
    F = Field(3, 2)
    for x in range(1, F.q):
        d = F.order(x)
        assert F.pow(x, d) == 1
        for r, _ in factorize(d):
            assert F.pow(x, d // r) != 1


def test_format_parse_roundtrip():
    F = Field(3, 2)
    for x in range(F.q):
        assert F.parse_elem(F.format_elem(x)) == x
    assert F.parse_elem("2") == 2  # bare ints name prime-subfield elements
    F7 = Field(7)
    assert F7.parse_elem("-1") == 6


def test_parse_field():
    assert parse_field("5").q == 5
    assert parse_field("3^2").q == 9
    with pytest.raises(FieldError):
        parse_field("4")


def test_bad_inputs():
    with pytest.raises(FieldError):
        Field(6)
    with pytest.raises(FieldError):
        Field(7).inv(0)
    with pytest.raises(FieldError):
        Field(7).order(0)
