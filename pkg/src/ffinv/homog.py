"""Bivariate homogeneous invariants under diagonal scalings, the two
matrix actions on univariate and bivariate polynomials, graded dimension
formulas, and the irreducible-count formula with its binomial-factor
characterization.

Univariate polynomials are tuples of coefficients, low degree first, with
no trailing zeros.  Irreducibility at desk scale is by trial division
against a cached table of monic irreducibles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from math import lcm

from .gf import Field, euler_phi, moebius
from .mpoly import Poly


class HomogError(ValueError):
    pass


# -- univariate helpers ----------------------------------------------------


def u_trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def u_deg(f):
    return len(f) - 1


def u_add(ctx, f, g):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return u_trim(ctx.add(a, b) for a, b in zip(f, g))


def u_mul(ctx, f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return u_trim(out)


def u_scale(ctx, c, f):
    if c == 0:
        return ()
    return u_trim(ctx.mul(c, a) for a in f)


def u_pow(ctx, f, e):
    r = (1,)
    b = f
    while e:
        if e & 1:
            r = u_mul(ctx, r, b)
        b = u_mul(ctx, b, b)
        e >>= 1
    return r


def u_divmod(ctx, num, den):
    if not den:
        raise ZeroDivisionError("univariate division by zero")
    num = list(num)
    dd = len(den) - 1
    inv_lead = ctx.inv(den[-1])
    quo = [0] * max(len(num) - dd, 0)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        f = ctx.mul(c, inv_lead)
        quo[i - dd] = f
        for j in range(dd + 1):
            num[i - dd + j] = ctx.sub(num[i - dd + j], ctx.mul(f, den[j]))
    return u_trim(quo), u_trim(num)


def u_monic(ctx, f):
    if not f:
        return f
    return u_scale(ctx, ctx.inv(f[-1]), f)


_irr_cache = {}


def monic_irreducibles(ctx: Field, max_deg):
    """Table of monic irreducibles of degree 1..max_deg, sieved by trial
    division, grouped by degree."""
    key = (ctx.p, ctx.k)
    table = _irr_cache.setdefault(key, {})
    for d in range(1, max_deg + 1):
        if d in table:
            continue
        found = []
        lower = [g for dd in range(1, d // 2 + 1) for g in table[dd]]
        for tail in iproduct(range(ctx.q), repeat=d):
            f = tuple(tail) + (1,)
            if d > 1 and f[0] == 0:
                continue  # divisible by t
            if all(u_divmod(ctx, f, g)[1] for g in lower):
                found.append(f)
        table[d] = found
    return table


def u_is_irreducible(ctx: Field, f):
    f = u_trim(f)
    d = u_deg(f)
    if d < 1:
        return False
    table = monic_irreducibles(ctx, max(1, d // 2))
    fm = u_monic(ctx, f)
    if d == 1:
        return True
    for dd in range(1, d // 2 + 1):
        for g in table[dd]:
            if not u_divmod(ctx, fm, g)[1]:
                return False
    return True


def u_factor(ctx: Field, f):
    """Monic irreducible factors with multiplicity, by trial division."""
    f = u_trim(f)
    if u_deg(f) < 1:
        return []
    table = monic_irreducibles(ctx, u_deg(f))
    rem = u_monic(ctx, f)
    out = []
    for d in range(1, u_deg(f) + 1):
        for g in table[d]:
            while u_deg(rem) >= d:
                quo, r = u_divmod(ctx, rem, g)
                if r:
                    break
                out.append(g)
                rem = quo
            if u_deg(rem) < 1:
                return out
    return out


# -- the two matrix actions ------------------------------------------------


def _check_invertible(ctx, M):
    (a1, a2), (a3, a4) = M
    det = ctx.sub(ctx.mul(a1, a4), ctx.mul(a2, a3))
    if det == 0:
        raise HomogError("singular matrix")
    return det


def diamond(ctx: Field, M, f, n=None):
    """(a3*t + a4)^n * f((a1*t + a2)/(a3*t + a4)) with the declared degree n
    clearing denominators."""
    _check_invertible(ctx, M)
    f = u_trim(f)
    if not f:
        raise HomogError("diamond of the zero polynomial")
    if n is None:
        n = u_deg(f)
    if n < u_deg(f):
        raise HomogError("declared degree below deg f")
    (a1, a2), (a3, a4) = M
    num = u_trim((a2, a1))
    den = u_trim((a4, a3))
    acc = ()
    for i, c in enumerate(f):
        if c == 0:
            continue
        term = u_mul(ctx, u_pow(ctx, num, i), u_pow(ctx, den, n - i))
        acc = u_add(ctx, acc, u_scale(ctx, c, term))
    return acc


def star(M, f: Poly) -> Poly:
    """Linear substitution f(a1*x + a2*y, a3*x + a4*y) on bivariate polynomials."""
    ctx = f.ctx
    if f.n != 2:
        raise HomogError("star acts on bivariate polynomials")
    _check_invertible(ctx, M)
    (a1, a2), (a3, a4) = M
    gx = Poly(ctx, 2, {(1, 0): a1, (0, 1): a2})
    gy = Poly(ctx, 2, {(1, 0): a3, (0, 1): a4})
    return f.substitute([gx, gy])


def homogenize(ctx: Field, f, n) -> Poly:
    """y^n * f(x/y) as a bivariate form of degree n."""
    f = u_trim(f)
    if f and n < u_deg(f):
        raise HomogError("target degree below deg f")
    terms = {}
    for i, c in enumerate(f):
        if c:
            terms[(i, n - i)] = c
    if not f:
        return Poly.zero(ctx, 2)
    return Poly(ctx, 2, terms)


def dehomogenize(g: Poly):
    """Inverse of homogenize: returns (f, n) for a nonzero form g of degree n."""
    if g.is_zero():
        raise HomogError("dehomogenize of zero")
    degs = {sum(m) for m in g.terms}
    if len(degs) != 1:
        raise HomogError("not homogeneous")
    n = degs.pop()
    coeffs = [0] * (n + 1)
    for (i, _), c in g.terms.items():
        coeffs[i] = c
    return u_trim(coeffs), n


def is_homogeneous(g: Poly):
    return g.is_zero() or len({sum(m) for m in g.terms}) == 1


# -- graded structure under a diagonal pair --------------------------------


@dataclass(frozen=True)
class FormSpec:
    """A diagonal scaling pair (x, y) -> (a*x, b*y) with its derived orders."""

    ctx: Field
    a: int
    b: int
    c: int  # a * b^-1
    k: int  # ord(b)
    ell: int  # ord(c)
    D: int  # lcm(ord(a), ord(b))

    @classmethod
    def create(cls, ctx, a, b):
        if a == 0 or b == 0:
            raise HomogError("diagonal entries must be nonzero")
        c = ctx.mul(a, ctx.inv(b))
        return cls(
            ctx=ctx,
            a=a,
            b=b,
            c=c,
            k=ctx.order(b),
            ell=ctx.order(c),
            D=lcm(ctx.order(a), ctx.order(b)),
        )


def s_set(spec: FormSpec):
    """Residues n in 0..k admitting d <= n with b^-n = c^d; degree n forms
    fixed by the pair exist exactly when [n mod k] lands here."""
    ctx = spec.ctx
    out = set()
    for n in range(spec.k + 1):
        target = ctx.pow(ctx.inv(spec.b), n)
        for d in range(min(n, spec.ell - 1) + 1):
            if ctx.pow(spec.c, d) == target:
                out.add(n)
                break
    return out


@dataclass(frozen=True)
class GradedComponent:
    n: int
    nonzero: bool
    d0: int  # least exponent with c^d0 = b^-n, when nonzero
    s: int
    size: int  # number of fixed forms of degree n, zero included
    basis: tuple  # exponent pairs (i, n-i) of the basis monomials


def graded_component(spec: FormSpec, n: int) -> GradedComponent:
    ctx = spec.ctx
    target = ctx.pow(ctx.inv(spec.b), n)
    d0 = None
    for d in range(min(n, spec.ell - 1) + 1):
        if ctx.pow(spec.c, d) == target:
            d0 = d
            break
    if d0 is None:
        return GradedComponent(n=n, nonzero=False, d0=-1, s=-1, size=1, basis=())
    s = (n - d0) // spec.ell
    basis = tuple((d0 + spec.ell * j, n - d0 - spec.ell * j) for j in range(s + 1))
    return GradedComponent(
        n=n, nonzero=True, d0=d0, s=s, size=spec.ctx.q ** (s + 1), basis=basis
    )


def count_invariant_irreducible(spec: FormSpec, n: int) -> int:
    """Number of irreducible degree-n forms fixed by the diagonal pair, from
    the Mobius-sum counting formula (0 unless ord of the pair divides n)."""
    if n < 2:
        raise HomogError("irreducible counting starts at degree 2")
    D, ell, q = spec.D, spec.ell, spec.ctx.q
    if n % D != 0:
        return 0
    total = 0
    for d in range(1, n // ell + 1):
        if (n // ell) % d == 0 and gcd_(d, ell) == 1:
            total += moebius(d) * (q ** (n // (d * ell)) - 1)
    # Phi(ell)/n times the sum is an integer count of monics; q-1 scalars each
    assert (euler_phi(ell) * total) % n == 0
    return (q - 1) * euler_phi(ell) * total // n


def gcd_(a, b):
    while b:
        a, b = b, a % b
    return a


def invariant_factors_of_binomial(spec: FormSpec, r: int, target_deg: int):
    """Irreducible fixed forms of degree target_deg arising as factors of
    a*x^(q^r - 1) - b*y^(q^r - 1), via the univariate companion
    c*t^(q^r - 1) - 1."""
    ctx = spec.ctx
    N = ctx.q ** r - 1
    if ctx.q ** r > 2 ** 16:
        raise HomogError("q^r exceeds the desk-scale bound")
    companion = [0] * (N + 1)
    companion[0] = ctx.neg(1)
    companion[N] = spec.c
    companion = u_trim(companion)
    out = []
    seen = set()
    for g in u_factor(ctx, companion):
        if u_deg(g) == target_deg and g not in seen:
            seen.add(g)
            out.append(homogenize(ctx, g, target_deg))
    return out
