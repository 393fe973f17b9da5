"""The group of coordinatewise affine substitutions x_i -> a_i*x_i + b_i
acting on F_q[x1..xn], plus reduction to (h, t) normal form.

A group element is a tuple of n pairs (a_i, b_i) with a_i != 0; it encodes
the automorphism f |-> f(a_1*x_1 + b_1, ..., a_n*x_n + b_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, lcm

from .gf import Field
from .mpoly import Poly


class ActionError(ValueError):
    pass


class GroupElem:
    __slots__ = ("ctx", "pairs")

    def __init__(self, ctx: Field, pairs):
        pairs = tuple((a, b) for a, b in pairs)
        for a, _ in pairs:
            if a == 0:
                raise ActionError("scaling part must be nonzero")
        self.ctx = ctx
        self.pairs = pairs

    @classmethod
    def identity(cls, ctx, n):
        return cls(ctx, [(1, 0)] * n)

    @property
    def n(self):
        return len(self.pairs)

    def is_identity(self):
        return all(a == 1 and b == 0 for a, b in self.pairs)

    def __eq__(self, other):
        return (
            isinstance(other, GroupElem)
            and self.ctx == other.ctx
            and self.pairs == other.pairs
        )

    def __hash__(self):
        return hash((self.ctx, self.pairs))

    def __repr__(self):
        ctx = self.ctx
        body = ";".join(
            f"{ctx.format_elem(a)},{ctx.format_elem(b)}" for a, b in self.pairs
        )
        return f"GroupElem<{body}>"

    def format(self):
        ctx = self.ctx
        return ";".join(
            f"{ctx.format_elem(a)},{ctx.format_elem(b)}" for a, b in self.pairs
        )


def parse_group_elem(ctx: Field, text: str) -> GroupElem:
    """Parse "a,b;a,b;..." using the field element syntax of gf."""
    pairs = []
    for chunk in text.strip().split(";"):
        parts = _split_pair(chunk)
        if len(parts) != 2:
            raise ActionError(f"bad coordinate {chunk!r}: expected 'a,b'")
        a = ctx.parse_elem(parts[0])
        b = ctx.parse_elem(parts[1])
        pairs.append((a, b))
    return GroupElem(ctx, pairs)


def _split_pair(chunk):
    parts = []
    depth = 0
    buf = ""
    for ch in chunk:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(buf)
            buf = ""
        else:
            buf += ch
    parts.append(buf)
    return parts


# -- the action ------------------------------------------------------------


def apply(A: GroupElem, f: Poly) -> Poly:
    """A acting on f: substitute x_i -> a_i*x_i + b_i."""
    if A.n != f.n or A.ctx != f.ctx:
        raise ActionError("dimension or context mismatch")
    ctx = f.ctx
    n = f.n
    # per-variable power cache: (a x + b)^e expanded by the binomial theorem
    cache = {}

    def axb_pow(i, e):
        key = (i, e)
        if key in cache:
            return cache[key]
        a, b = A.pairs[i]
        out = {}
        if b == 0:
            out[e] = ctx.pow(a, e)
        else:
            for j in range(e + 1):
                c = ctx.mul(comb(e, j) % ctx.p, ctx.mul(ctx.pow(a, j), ctx.pow(b, e - j)))
                if c:
                    out[j] = c
        cache[key] = out
        return out

    result = {}
    for m, c in f.terms.items():
        partial = {(): c}
        for i, e in enumerate(m):
            if e == 0:
                nxt = {k + (0,): v for k, v in partial.items()}
            else:
                pw = axb_pow(i, e)
                nxt = {}
                for k, v in partial.items():
                    for j, w in pw.items():
                        key = k + (j,)
                        acc = ctx.add(nxt.get(key, 0), ctx.mul(v, w))
                        if acc:
                            nxt[key] = acc
                        else:
                            nxt.pop(key, None)
            partial = nxt
        for k, v in partial.items():
            acc = ctx.add(result.get(k, 0), v)
            if acc:
                result[k] = acc
            else:
                result.pop(k, None)
    return Poly(ctx, n, result)


def group_mul(A2: GroupElem, A1: GroupElem) -> GroupElem:
    """Composition: apply(group_mul(A2, A1), f) == apply(A2, apply(A1, f)).

    Coordinatewise (a1*a2, a1*b2 + b1): substituting A2 into the image of A1.
    """
    if A2.ctx != A1.ctx or A2.n != A1.n:
        raise ActionError("mismatched group elements")
    ctx = A1.ctx
    pairs = []
    for (a1, b1), (a2, b2) in zip(A1.pairs, A2.pairs):
        pairs.append((ctx.mul(a1, a2), ctx.add(ctx.mul(a1, b2), b1)))
    return GroupElem(ctx, pairs)


def inverse(A: GroupElem) -> GroupElem:
    ctx = A.ctx
    pairs = []
    for a, b in A.pairs:
        ai = ctx.inv(a)
        pairs.append((ai, ctx.neg(ctx.mul(ai, b))))
    return GroupElem(ctx, pairs)


def group_pow(A: GroupElem, e: int) -> GroupElem:
    if e < 0:
        return group_pow(inverse(A), -e)
    R = GroupElem.identity(A.ctx, A.n)
    B = A
    while e:
        if e & 1:
            R = group_mul(R, B)
        B = group_mul(B, B)
        e >>= 1
    return R


def coordinate_order(ctx: Field, a, b) -> int:
    """Order of a single coordinate (a, b) in the affine group."""
    if a != 1:
        return ctx.order(a)
    return 1 if b == 0 else ctx.p


def element_order(A: GroupElem) -> int:
    """lcm of the coordinate orders; always divides p*(q-1)."""
    o = 1
    for a, b in A.pairs:
        o = lcm(o, coordinate_order(A.ctx, a, b))
    return o


# -- reduction to (h, t) type ---------------------------------------------


@dataclass(frozen=True)
class TypeInfo:
    """Normal form data: h homothety coordinates, then t translation
    coordinates, then identities, reached by a per-coordinate conjugation
    followed by a stable variable permutation.

    perm[j] is the original (0-based) variable index sitting at reduced
    position j.  `reduced` lives in the reduced variable ordering;
    `conjugator` is in the original ordering.
    """

    h: int
    t: int
    H: tuple  # scaling parts of the h-type coordinates, reduced order
    conjugator: GroupElem
    reduced: GroupElem
    perm: tuple

    @property
    def orders(self):
        ctx = self.conjugator.ctx
        return tuple(ctx.order(a) for a in self.H)


def reduce_to_type(A: GroupElem) -> TypeInfo:
    ctx = A.ctx
    n = A.n
    conj_pairs = []
    kinds = []  # 0 = h-type, 1 = t-type, 2 = identity
    reduced_coords = []
    for a, b in A.pairs:
        if a != 1:
            # shift by b/(a-1) turns (a, b) into the pure scaling (a, 0)
            delta = ctx.neg(ctx.div(b, ctx.sub(a, 1)))
            conj_pairs.append((1, delta))
            kinds.append(0)
            reduced_coords.append((a, 0))
        elif b != 0:
            # rescale by b so the translation step becomes 1
            conj_pairs.append((b, 0))
            kinds.append(1)
            reduced_coords.append((1, 1))
        else:
            conj_pairs.append((1, 0))
            kinds.append(2)
            reduced_coords.append((1, 0))
    perm = tuple(
        [i for i in range(n) if kinds[i] == 0]
        + [i for i in range(n) if kinds[i] == 1]
        + [i for i in range(n) if kinds[i] == 2]
    )
    h = kinds.count(0)
    t = kinds.count(1)
    conjugator = GroupElem(ctx, conj_pairs)
    reduced = GroupElem(ctx, [reduced_coords[i] for i in perm])
    H = tuple(reduced.pairs[j][0] for j in range(h))
    return TypeInfo(h=h, t=t, H=H, conjugator=conjugator, reduced=reduced, perm=perm)


def to_original_frame(info: TypeInfo, g: Poly) -> Poly:
    """Map a polynomial over the reduced variables back to the original frame.

    Renames reduced position j to original index perm[j], then undoes the
    conjugation; invariants of the reduced element map to invariants of A.
    """
    return apply(inverse(info.conjugator), g.rename(info.perm))


def canonical_decomposition(A: GroupElem):
    """Split a reduced (h, t) element into its homothety part and its
    translation part; the parts commute and multiply back to A."""
    ctx = A.ctx
    a1_pairs = []
    a2_pairs = []
    for a, b in A.pairs:
        if a != 1 and b == 0:
            a1_pairs.append((a, 0))
            a2_pairs.append((1, 0))
        elif a == 1 and b in (0, 1):
            a1_pairs.append((1, 0))
            a2_pairs.append((1, b))
        else:
            raise ActionError("element is not in reduced (h, t) form")
    return GroupElem(ctx, a1_pairs), GroupElem(ctx, a2_pairs)
