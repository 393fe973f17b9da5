"""Sparse multivariate polynomials over F_q under graded lex order x1 > ... > xn.

A monomial is a tuple of exponents (a1, ..., an).  A Poly stores a dict
monomial -> nonzero coefficient (int, see gf).  Polys are immutable by
convention: every operation returns a fresh value.
"""

from __future__ import annotations

import re
from math import comb

from .gf import Field

LT, EQ, GT = -1, 0, 1


class PolyError(ValueError):
    pass


def gradlex_cmp(a, b):
    """Compare exponent vectors: total degree first, then lex with x1 > ... > xn."""
    if len(a) != len(b):
        raise PolyError("monomial length mismatch")
    da, db = sum(a), sum(b)
    if da != db:
        return LT if da < db else GT
    for x, y in zip(a, b):
        if x != y:
            return GT if x > y else LT
    return EQ


def gradlex_key(a):
    return (sum(a), a)


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b):
    """True if x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


class Poly:
    __slots__ = ("ctx", "n", "terms")

    def __init__(self, ctx: Field, n: int, terms=None):
        self.ctx = ctx
        self.n = n
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if len(m) != n:
                    raise PolyError("monomial length mismatch")
                if c % 1 != 0:
                    raise PolyError("coefficients must be ints")
                if c != 0:
                    self.terms[m] = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ctx, n):
        return cls(ctx, n)

    @classmethod
    def const(cls, ctx, n, c):
        return cls(ctx, n, {(0,) * n: c})

    @classmethod
    def monomial(cls, ctx, n, expts, coeff=1):
        return cls(ctx, n, {tuple(expts): coeff})

    @classmethod
    def variable(cls, ctx, n, i):
        """x_i with 1-based index i."""
        if not 1 <= i <= n:
            raise PolyError(f"variable index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(ctx, n, {tuple(e): 1})

    # -- basics ------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ctx == other.ctx
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ctx, self.n, frozenset(self.terms.items())))

    def _check(self, other):
        if not isinstance(other, Poly):
            raise PolyError(f"cannot combine Poly with {type(other).__name__}")
        if self.ctx != other.ctx or self.n != other.n:
            raise PolyError("context mismatch")

    def mdeg(self):
        """Gradlex-maximal exponent vector of the support."""
        if not self.terms:
            raise PolyError("mdeg of zero polynomial")
        return max(self.terms, key=gradlex_key)

    def total_degree(self):
        if not self.terms:
            raise PolyError("degree of zero polynomial")
        return max(sum(m) for m in self.terms)

    def leading_coeff(self):
        return self.terms[self.mdeg()]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        self._check(other)
        f = self.ctx
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = f.add(out.get(m, 0), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(self.ctx, self.n, out)

    def __neg__(self):
        f = self.ctx
        return Poly(self.ctx, self.n, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        f = self.ctx
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                v = f.add(out.get(m, 0), f.mul(c1, c2))
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Poly(self.ctx, self.n, out)

    def scale(self, c):
        f = self.ctx
        if c == 0:
            return Poly.zero(self.ctx, self.n)
        return Poly(self.ctx, self.n, {m: f.mul(c, v) for m, v in self.terms.items()})

    def __pow__(self, e):
        if e < 0:
            raise PolyError("negative power")
        r = Poly.const(self.ctx, self.n, 1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def eval(self, point):
        """Evaluate at a tuple of n field elements."""
        if len(point) != self.n:
            raise PolyError("point length mismatch")
        f = self.ctx
        acc = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = f.mul(v, f.pow(x, e))
            acc = f.add(acc, v)
        return acc

    def partial(self, i):
        """Formal partial derivative with respect to x_i (1-based)."""
        f = self.ctx
        out = {}
        for m, c in self.terms.items():
            e = m[i - 1]
            if e == 0:
                continue
            c2 = f.mul(c, e % f.p)
            if c2 == 0:
                continue
            m2 = m[: i - 1] + (e - 1,) + m[i:]
            v = f.add(out.get(m2, 0), c2)
            if v:
                out[m2] = v
            else:
                out.pop(m2, None)
        return Poly(self.ctx, self.n, out)

    def substitute(self, images):
        """Replace x_i by images[i-1] (a Poly over the same or another ambient)."""
        if len(images) != self.n:
            raise PolyError("need one image per variable")
        tgt = images[0] if images else None
        f = self.ctx
        n2 = tgt.n if tgt is not None else self.n
        acc = Poly.zero(self.ctx, n2)
        for m, c in self.terms.items():
            t = Poly.const(self.ctx, n2, c)
            for g, e in zip(images, m):
                if e:
                    t = t * g ** e
            acc = acc + t
        return acc

    def rename(self, perm):
        """Move the variable at position j (0-based) to position perm[j]."""
        out = {}
        for m, c in self.terms.items():
            m2 = [0] * self.n
            for j, e in enumerate(m):
                m2[perm[j]] = e
            out[tuple(m2)] = c
        return Poly(self.ctx, self.n, out)

    # -- separation of variables ------------------------------------------

    def separate(self, block):
        """Write f = sum over beta of x^beta * P_beta with x^beta supported on
        `block` (1-based variable indices) and P_beta on the complement.

        Returns a list of (beta_monomial, Poly) pairs, sorted by gradlex on beta.
        """
        if not self.terms:
            raise PolyError("separate of zero polynomial")
        block = set(block)
        groups = {}
        for m, c in self.terms.items():
            beta = tuple(e if (j + 1) in block else 0 for j, e in enumerate(m))
            rest = tuple(0 if (j + 1) in block else e for j, e in enumerate(m))
            groups.setdefault(beta, {})[rest] = c
        out = []
        for beta in sorted(groups, key=gradlex_key):
            out.append((beta, Poly(self.ctx, self.n, groups[beta])))
        return out

    # -- text form ---------------------------------------------------------

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def count_monomials(n, d):
    """Number of monomials in n variables of total degree <= d."""
    return comb(n + d, n)


def monomials_upto(n, d):
    """All exponent vectors of total degree <= d, sorted by gradlex."""
    out = []

    def rec(prefix, remaining, budget):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for e in range(budget + 1):
            rec(prefix + [e], remaining - 1, budget - e)

    rec([], n, d)
    out.sort(key=gradlex_key)
    return out


# -- parsing / printing ----------------------------------------------------

_VAR_RE = re.compile(r"x(\d+)(?:\^(\d+))?")


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    ctx = f.ctx
    parts = []
    for m in sorted(f.terms, key=gradlex_key, reverse=True):
        c = f.terms[m]
        factors = []
        for j, e in enumerate(m):
            if e == 1:
                factors.append(f"x{j + 1}")
            elif e > 1:
                factors.append(f"x{j + 1}^{e}")
        cs = ctx.format_elem(c)
        if not factors:
            parts.append(cs)
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(cs + "*" + "*".join(factors))
    return " + ".join(parts)


def parse_poly(ctx: Field, n: int, text: str) -> Poly:
    """Parse "3*x1^2*x2 + 4*x3" style text.  Round-trips with format_poly."""
    text = text.strip()
    if text in ("", "0"):
        return Poly.zero(ctx, n)
    # split on top-level + and - (the leading sign belongs to the first term)
    terms = []
    sign = 1
    i = 0
    buf = ""
    depth = 0
    def flush(s, sg):
        s = s.strip()
        if s:
            terms.append((sg, s))
    while i < len(text):
        ch = text[i]
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if depth == 0 and ch in "+-" and buf.strip():
            flush(buf, sign)
            sign = 1 if ch == "+" else -1
            buf = ""
        elif depth == 0 and ch in "+-" and not buf.strip():
            sign = sign * (1 if ch == "+" else -1)
        else:
            buf += ch
        i += 1
    flush(buf, sign)

    result = Poly.zero(ctx, n)
    for sg, term in terms:
        coeff = 1
        expts = [0] * n
        for factor in _split_factors(term):
            factor = factor.strip()
            if not factor:
                continue
            mv = _VAR_RE.fullmatch(factor)
            if mv:
                idx = int(mv.group(1))
                if not 1 <= idx <= n:
                    raise PolyError(f"variable x{idx} out of range 1..{n}")
                expts[idx - 1] += int(mv.group(2) or 1)
            else:
                coeff = ctx.mul(coeff, ctx.parse_elem(factor))
        if sg < 0:
            coeff = ctx.neg(coeff)
        result = result + Poly.monomial(ctx, n, expts, coeff)
    return result


def _split_factors(term):
    parts = []
    depth = 0
    buf = ""
    for ch in term:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "*" and depth == 0:
            parts.append(buf)
            buf = ""
        else:
            buf += ch
    parts.append(buf)
    return parts
