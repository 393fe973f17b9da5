"""Generating sets of fixed-point subrings: product-one exponent vectors,
divisibility-minimal monomials, translation chains, freeness and the
binomial bounds, Jacobian certificates, Sylow-subgroup invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb, gcd, lcm

from .gf import Field
from .mpoly import Poly, gradlex_key
from .action import (
    GroupElem,
    TypeInfo,
    reduce_to_type,
    to_original_frame,
)


def product_one_vectors(ctx: Field, H):
    """All exponent vectors (b_1..b_h), 0 <= b_i <= ord(a_i), not all zero,
    with a_1^b_1 * ... * a_h^b_h = 1.  Plain box scan."""
    H = list(H)
    orders = [ctx.order(a) for a in H]
    if any(d <= 1 for d in orders):
        raise ValueError("every element of H must have order > 1")
    out = set()
    for vec in product(*[range(d + 1) for d in orders]):
        if not any(vec):
            continue
        acc = 1
        for a, b in zip(H, vec):
            acc = ctx.mul(acc, ctx.pow(a, b))
        if acc == 1:
            out.add(vec)
    return out


def minimal_vectors(vectors):
    """Divisibility-minimal members: componentwise <= with at least one strict."""
    vecs = sorted(vectors, key=gradlex_key)
    out = []
    for v in vecs:
        if not any(
            w != v and all(x <= y for x, y in zip(w, v)) for w in vecs
        ):
            out.append(v)
    return out


def minimal_monomials(ctx: Field, H, n=None):
    """M* for the homothety multiset H, as monomials over n variables
    (the first h of them); n defaults to h."""
    H = list(H)
    h = len(H)
    if n is None:
        n = h
    out = []
    for v in minimal_vectors(product_one_vectors(ctx, H)):
        out.append(Poly.monomial(ctx, n, tuple(v) + (0,) * (n - h)))
    return out


def translation_generators(ctx: Field, h, t, n):
    """The chain for t translated variables after h homotheties, plus the
    untouched variables: [x_{h+1}-x_{h+2}, ..., x_{h+t}^p-x_{h+t}] and
    [x_{h+t+1}, ..., x_n]."""
    if h + t > n:
        raise ValueError("h + t exceeds variable count")
    p = ctx.p
    chain = []
    if t >= 1:
        for i in range(h + 1, h + t):
            chain.append(Poly.variable(ctx, n, i) - Poly.variable(ctx, n, i + 1))
        last = Poly.variable(ctx, n, h + t)
        chain.append(last ** p - last)
    untouched = [Poly.variable(ctx, n, i) for i in range(h + t + 1, n + 1)]
    return chain, untouched


@dataclass
class GeneratorSet:
    """Minimal generating set of the fixed-point subring of A, with both the
    reduced-frame and original-frame presentations."""

    info: TypeInfo
    mstar: list  # monomial generators, reduced frame
    chain: list  # translation chain, reduced frame
    vars: list  # untouched variables, reduced frame
    mstar_orig: list
    chain_orig: list
    vars_orig: list
    N: int
    ell: int

    @property
    def h(self):
        return self.info.h

    @property
    def t(self):
        return self.info.t

    @property
    def n(self):
        return self.info.reduced.n

    def reduced_frame(self):
        return self.mstar + self.chain + self.vars

    def original_frame(self):
        return self.mstar_orig + self.chain_orig + self.vars_orig


def generating_set(A: GroupElem) -> GeneratorSet:
    ctx = A.ctx
    n = A.n
    info = reduce_to_type(A)
    h, t = info.h, info.t
    if h:
        mstar = minimal_monomials(ctx, info.H, n=n)
        ell = lcm(*info.orders)
    else:
        mstar = []
        ell = 1
    chain, untouched = translation_generators(ctx, h, t, n)
    back = lambda gs: [to_original_frame(info, g) for g in gs]
    return GeneratorSet(
        info=info,
        mstar=mstar,
        chain=chain,
        vars=untouched,
        mstar_orig=back(mstar),
        chain_orig=back(chain),
        vars_orig=back(untouched),
        N=len(mstar) - h,
        ell=ell,
    )


def is_free(A: GroupElem):
    """Freeness of the fixed-point subring: true iff the homothety orders are
    pairwise coprime (trivially so for h <= 1).

    Returns (free, witness): witness is a non-coprime order pair (d_i, d_j)
    when not free, or the n independent generators (original frame) when free.
    """
    info = reduce_to_type(A)
    orders = info.orders
    for i in range(len(orders)):
        for j in range(i + 1, len(orders)):
            if gcd(orders[i], orders[j]) > 1:
                return False, (orders[i], orders[j])
    return True, generating_set(A).original_frame()


def nstar_bounds(A: GroupElem):
    """The binomial bound on the number of mixed monomial generators.

    Returns a dict with ell, N, the bound, whether it is attained, and the
    field-level bound that only depends on q.
    """
    S = generating_set(A)
    info = S.info
    h = info.h
    n = A.n
    q = A.ctx.q
    if h < 2:
        return {
            "ell": S.ell,
            "N": S.N,
            "bound": 0,
            "attained": S.N == 0,
            "global_bound": n,
        }
    bound = comb(S.ell + h - 1, h - 1) - h
    attained = len(set(info.H)) == 1 and info.orders[0] == S.ell
    return {
        "ell": S.ell,
        "N": S.N,
        "bound": bound,
        "attained": attained,
        "global_bound": comb(q + h - 2, h - 1) + n - h,
    }


def jacobian_det(fs) -> Poly:
    """Determinant of the matrix of formal partials of n polynomials in n
    variables; nonzero certifies algebraic independence."""
    fs = list(fs)
    if not fs:
        raise ValueError("empty polynomial list")
    n = fs[0].n
    if len(fs) != n:
        raise ValueError(f"need exactly {n} polynomials, got {len(fs)}")
    ctx = fs[0].ctx
    J = [[f.partial(j + 1) for j in range(n)] for f in fs]
    return _det(ctx, n, J)


def _det(ctx, n, M):
    size = len(M)
    if size == 1:
        return M[0][0]
    acc = Poly.zero(ctx, n)
    for i in range(size):
        minor = [row[1:] for k, row in enumerate(M) if k != i]
        term = M[i][0] * _det(ctx, n, minor)
        acc = acc + (term if i % 2 == 0 else -term)
    return acc


def sylow_invariant_generators(ctx: Field, n, which):
    """Free generators of the invariants of a full Sylow subgroup of the
    coordinatewise affine group.

    which = "char": the translation subgroup, generators x_i^q - x_i.
    which = r (prime dividing q-1): the scaling r-subgroup, generators
    x_i^d with d the full r-power in q-1.
    """
    if which == "char":
        q = ctx.q
        return [
            Poly.variable(ctx, n, i) ** q - Poly.variable(ctx, n, i)
            for i in range(1, n + 1)
        ]
    r = int(which)
    if (ctx.q - 1) % r != 0:
        raise ValueError(f"{r} does not divide q-1 = {ctx.q - 1}")
    d = 1
    m = ctx.q - 1
    while m % r == 0:
        d *= r
        m //= r
    return [Poly.variable(ctx, n, i) ** d for i in range(1, n + 1)]


def sylow_group_generators(ctx: Field, n, which):
    """Group elements generating the chosen Sylow subgroup (one per variable;
    for the translation subgroup, one per variable and field element)."""
    out = []
    if which == "char":
        for i in range(n):
            for b in range(1, ctx.q):
                pairs = [(1, 0)] * n
                pairs[i] = (1, b)
                out.append(GroupElem(ctx, pairs))
        return out
    r = int(which)
    if (ctx.q - 1) % r != 0:
        raise ValueError(f"{r} does not divide q-1 = {ctx.q - 1}")
    d = 1
    m = ctx.q - 1
    while m % r == 0:
        d *= r
        m //= r
    theta = ctx.element_of_order(d)
    for i in range(n):
        pairs = [(1, 0)] * n
        pairs[i] = (theta, 0)
        out.append(GroupElem(ctx, pairs))
    return out
