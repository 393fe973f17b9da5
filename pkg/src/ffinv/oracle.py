"""Independent brute-force verifiers: invariant-space dimensions by dense
elimination over F_q, subalgebra dimensions by span closure, generating-set
validation, and exhaustive fixed-form enumeration.

Deliberately shares no code with the formula paths it checks; the
elimination and the irreducibility test here are self-contained.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product as iproduct

from .gf import Field
from .mpoly import Poly, count_monomials, monomials_upto
from .action import GroupElem, apply


DEFAULT_BUDGET = 5000


class BudgetError(ValueError):
    pass


def _budget():
    v = os.environ.get("FFINV_BUDGET")
    return int(v) if v else DEFAULT_BUDGET


def _check_budget(n, d):
    c = count_monomials(n, d)
    if c > _budget():
        raise BudgetError(
            f"{c} monomials of degree <= {d} in {n} variables exceeds the "
            f"budget of {_budget()}"
        )


@dataclass
class GradedDimProfile:
    degrees: list  # 0..d
    dims: list  # dimension of the degree-<=j slice


def _row_reduce_basis(ctx, rows):
    """Maintain a reduced row set; returns the rank.  rows is a list of dicts
    column -> coefficient, destructively echelonized into `basis`."""
    basis = {}  # pivot column -> row dict
    rank = 0
    for row in rows:
        row = _reduce_row(ctx, dict(row), basis)
        if row:
            piv = max(row)
            inv = ctx.inv(row[piv])
            basis[piv] = {c: ctx.mul(inv, v) for c, v in row.items()}
            rank += 1
    return rank


def _reduce_row(ctx, row, basis):
    changed = True
    while changed:
        changed = False
        for piv in list(row):
            if piv in basis and row.get(piv):
                f = row[piv]
                for c, v in basis[piv].items():
                    nv = ctx.sub(row.get(c, 0), ctx.mul(f, v))
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
                changed = True
    return {c: v for c, v in row.items() if v}


def invariant_space_dim(As, n, d) -> GradedDimProfile:
    """Dimension profile of the joint fixed space of one or more group
    elements on polynomials of total degree <= j, for j = 0..d.

    Kernel of the stacked (apply - id) maps, by elimination over F_q.
    """
    if isinstance(As, GroupElem):
        As = [As]
    if not As:
        raise ValueError("need at least one group element")
    ctx = As[0].ctx
    _check_budget(n, d)
    mons = monomials_upto(n, d)
    # images of each basis monomial under each element
    images = {}
    for idx, A in enumerate(As):
        for m in mons:
            images[(idx, m)] = apply(A, Poly.monomial(ctx, n, m)).terms

    degrees = list(range(d + 1))
    dims = []
    for j in degrees:
        sub = [m for m in mons if sum(m) <= j]
        sub_idx = {m: i for i, m in enumerate(sub)}
        # one column per source monomial: the stacked (apply - id) images.
        # kernel dim = #columns - rank, and rank is the same over columns.
        cols = []
        for m in sub:
            col = {}
            for idx in range(len(As)):
                for m2, c in images[(idx, m)].items():
                    col[(idx, sub_idx[m2])] = c
                key = (idx, sub_idx[m])
                v = ctx.sub(col.get(key, 0), 1)
                if v:
                    col[key] = v
                else:
                    col.pop(key, None)
            if col:
                cols.append(col)
        rank = _row_reduce_basis(ctx, cols)
        dims.append(len(sub) - rank)
    return GradedDimProfile(degrees=degrees, dims=dims)


def subalgebra_graded_dim(S, n, d, ctx=None) -> GradedDimProfile:
    """Dimension profile of the span of all products of elements of S
    (empty product included) of total degree <= j, by span closure."""
    S = [g for g in S if not g.is_zero()]
    if S:
        ctx = S[0].ctx
        n = S[0].n
    if ctx is None:
        raise ValueError("need a field context for an empty generator list")
    _check_budget(n, d)
    mons = monomials_upto(n, d)
    col = {m: i for i, m in enumerate(mons)}

    basis = {}  # pivot column -> (row dict, Poly)
    queue = [Poly.const(ctx, n, 1)]
    while queue:
        f = queue.pop()
        row = {col[m]: c for m, c in f.terms.items()}
        row = _reduce_row(ctx, row, {p: r for p, (r, _) in basis.items()})
        if not row:
            continue
        piv = max(row)
        inv = ctx.inv(row[piv])
        basis[piv] = ({c: ctx.mul(inv, v) for c, v in row.items()}, f)
        for g in S:
            prod = f * g
            if prod.is_zero() or prod.total_degree() > d:
                continue
            queue.append(prod)

    degrees = list(range(d + 1))
    dims = []
    for j in degrees:
        cnt = 0
        for piv, (row, _) in basis.items():
            if sum(mons[piv]) <= j:
                cnt += 1
        dims.append(cnt)
    return GradedDimProfile(degrees=degrees, dims=dims)


def verify_generators(A: GroupElem, S, d: int):
    """True iff the subalgebra generated by S matches the fixed space of A
    at every degree slice <= d.  S may be a GeneratorSet or a list of Poly."""
    gens = S.original_frame() if hasattr(S, "original_frame") else list(S)
    inv = invariant_space_dim(A, A.n, d)
    alg = subalgebra_graded_dim(gens, A.n, d, ctx=A.ctx)
    ok = inv.dims == alg.dims
    return ok, inv, alg


# -- exhaustive form enumeration (degree-graded, bivariate) ----------------


def enumerate_fixed_forms(ctx: Field, a, b, n):
    """Coefficient vectors (c_0..c_n) of all degree-n forms sum c_i x^i y^(n-i)
    fixed by (x, y) -> (a*x, b*y), by exhaustive scan."""
    if ctx.q ** (n + 1) > 10 ** 7:
        raise BudgetError("coefficient space exceeds the enumeration budget")
    scale = [ctx.mul(ctx.pow(a, i), ctx.pow(b, n - i)) for i in range(n + 1)]
    out = []
    for vec in iproduct(range(ctx.q), repeat=n + 1):
        if all(ctx.mul(scale[i], c) == c for i, c in enumerate(vec)):
            out.append(vec)
    return out


def _own_is_irreducible(ctx: Field, coeffs):
    """Self-contained trial-division irreducibility for a univariate poly
    (low-first coefficient tuple)."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    deg = len(cs) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    lead_inv = ctx.inv(cs[-1])
    cs = [ctx.mul(lead_inv, c) for c in cs]
    for dd in range(1, deg // 2 + 1):
        for tail in iproduct(range(ctx.q), repeat=dd):
            den = list(tail) + [1]
            rem = list(cs)
            for i in range(len(rem) - 1, dd - 1, -1):
                c = rem[i]
                if c == 0:
                    continue
                rem[i] = 0
                for j in range(dd):
                    rem[i - dd + j] = ctx.sub(rem[i - dd + j], ctx.mul(c, den[j]))
            if not any(rem):
                return False
    return True


_irr_seen = {}  # (p, k, monic coeff tuple) -> bool


def count_irreducible_among(ctx: Field, vectors, n):
    """Count the irreducible forms among degree-n coefficient vectors: the
    companion c_0 + c_1 t + ... + c_n t^n must have degree exactly n and be
    irreducible."""
    cache = _irr_seen
    cnt = 0
    for vec in vectors:
        if vec[n] == 0:
            continue
        # irreducibility is scalar-invariant: cache by the monic companion
        inv = ctx.inv(vec[n])
        monic = tuple(ctx.mul(inv, c) for c in vec)
        key = (ctx.p, ctx.k, monic)
        if key not in cache:
            cache[key] = _own_is_irreducible(ctx, monic)
        if cache[key]:
            cnt += 1
    return cnt
