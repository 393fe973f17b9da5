import random

import pytest

from ffinv.gf import Field
from ffinv.mpoly import Poly, parse_poly
from ffinv.action import (
    ActionError,
    GroupElem,
    apply,
    canonical_decomposition,
    element_order,
    group_mul,
    group_pow,
    inverse,
    parse_group_elem,
    reduce_to_type,
    to_original_frame,
)


F3 = Field(3)
F5 = Field(5)


def rand_elem(rng, ctx, n):
    return GroupElem(
        ctx, [(rng.randrange(1, ctx.q), rng.randrange(ctx.q)) for _ in range(n)]
    )


def rand_poly(rng, ctx, n, deg=3, terms=3):
    out = {}
    for _ in range(terms):
        m = tuple(rng.randrange(deg + 1) for _ in range(n))
        out[m] = rng.randrange(1, ctx.q)
    return Poly(ctx, n, out)


def test_parse_format():
    A = parse_group_elem(F5, "2,3;1,0")
    assert A.pairs == ((2, 3), (1, 0))
    assert A.format() == "2,3;1,0"
    F4 = Field(2, 2)
    B = parse_group_elem(F4, "[0,1],[1,1];1,0")
    assert B.pairs == ((2, 3), (1, 0))
    with pytest.raises(ActionError):
        parse_group_elem(F5, "0,1")


def test_apply_basic():
    A = parse_group_elem(F3, "1,1")
    x = Poly.variable(F3, 1, 1)
    assert apply(A, x) == parse_poly(F3, 1, "x1 + 1")
    assert apply(A, x ** 3 - x) == x ** 3 - x  # classic additive invariant


def test_apply_is_ring_hom():
    rng = random.Random(5)
    for _ in range(30):
        A = rand_elem(rng, F5, 2)
        f = rand_poly(rng, F5, 2)
        g = rand_poly(rng, F5, 2)
        assert apply(A, f * g) == apply(A, f) * apply(A, g)
        assert apply(A, f + g) == apply(A, f) + apply(A, g)


def test_apply_preserves_multidegree():
    rng = random.Random(9)
    for _ in range(30):
        A = rand_elem(rng, F5, 3)
        f = rand_poly(rng, F5, 3)
        if f.is_zero():
            continue
        assert apply(A, f).mdeg() == f.mdeg()


def test_group_mul_compatible_with_apply():
    rng = random.Random(13)
    for _ in range(30):
        A1 = rand_elem(rng, F5, 2)
        A2 = rand_elem(rng, F5, 2)
        f = rand_poly(rng, F5, 2)
        assert apply(group_mul(A2, A1), f) == apply(A2, apply(A1, f))


def test_inverse_and_pow():
    rng = random.Random(17)
    for _ in range(20):
        A = rand_elem(rng, F5, 2)
        assert group_mul(A, inverse(A)).is_identity()
        assert group_mul(inverse(A), A).is_identity()
        assert group_pow(A, 3) == group_mul(A, group_mul(A, A))
        assert group_pow(A, -1) == inverse(A)


def test_element_order_matches_brute_force():
    rng = random.Random(19)
    for ctx in (F3, F5, Field(2, 2)):
        for _ in range(20):
            A = rand_elem(rng, ctx, 2)
            d = element_order(A)
            assert group_pow(A, d).is_identity()
            B = A
            brute = 1
            while not B.is_identity():
                B = group_mul(A, B)
                brute += 1
            assert brute == d


def test_reduce_to_type_shape():
    A = parse_group_elem(F3, "2,1;1,2;1,0;2,0")
    info = reduce_to_type(A)
    assert (info.h, info.t) == (2, 1)
    assert info.H == (2, 2)
    assert info.orders == (2, 2)
    assert info.perm == (0, 3, 1, 2)
    assert info.reduced.pairs == ((2, 0), (2, 0), (1, 1), (1, 0))


def test_reduced_invariants_pull_back():
    # f is fixed by the reduced element iff its original-frame image is fixed by A
    rng = random.Random(23)
    for _ in range(20):
        A = rand_elem(rng, F5, 3)
        info = reduce_to_type(A)
        f = rand_poly(rng, F5, 3)
        fixed_reduced = apply(info.reduced, f) == f
        g = to_original_frame(info, f)
        assert (apply(A, g) == g) == fixed_reduced


def test_canonical_decomposition():
    A = parse_group_elem(F5, "2,0;1,1;1,0")
    A1, A2 = canonical_decomposition(A)
    assert A1.pairs == ((2, 0), (1, 0), (1, 0))
    assert A2.pairs == ((1, 0), (1, 1), (1, 0))
    assert group_mul(A1, A2) == A
    assert group_mul(A2, A1) == A
    with pytest.raises(ActionError):
        canonical_decomposition(parse_group_elem(F5, "2,3"))
