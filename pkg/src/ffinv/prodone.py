"""Minimal product-one sequences in cyclic groups.

Sequences over F_q* are canonicalized as sorted tuples of field elements.
The Davenport brute-forcer works in the abstract cyclic group C_m,
represented additively as residues mod m with identity 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .gf import Field


@dataclass(frozen=True)
class ProdOneSeq:
    elements: tuple  # sorted multiset of nonzero field elements
    minimal: bool

    @property
    def length(self):
        return len(self.elements)


def monomial_to_sequence(ctx: Field, m, H) -> ProdOneSeq:
    """The sequence (a_1 repeated b_1 times, ..., a_h repeated b_h times)
    attached to the monomial x1^b1...xh^bh over the homothety multiset H."""
    H = list(H)
    expts = m.mdeg() if hasattr(m, "mdeg") else tuple(m)
    if any(e for e in expts[len(H):]):
        raise ValueError("monomial touches non-homothety variables")
    seq = []
    for a, b in zip(H, expts):
        seq.extend([a] * b)
    seq = tuple(sorted(seq))
    acc = 1
    for a in seq:
        acc = ctx.mul(acc, a)
    if acc != 1:
        raise ValueError("sequence product is not 1")
    return ProdOneSeq(seq, _is_minimal(seq, ctx.mul))


def is_minimal_product_one(ctx: Field, elements) -> bool:
    """Exhaustive proper-sub-multiset check; product must be 1."""
    seq = tuple(sorted(elements))
    acc = 1
    for a in seq:
        acc = ctx.mul(acc, a)
    if acc != 1:
        raise ValueError("sequence product is not 1")
    return _is_minimal(seq, ctx.mul)


def _is_minimal(seq, mul):
    """No nonempty proper sub-multiset has product 1.

    DP over elements tracking achievable products of proper and of all
    nonempty sub-multisets.
    """
    if len(seq) <= 1:
        return True
    all_prods = set()  # products over nonempty sub-multisets of the prefix
    proper = set()  # ... over those that are proper within the prefix
    for x in seq:
        proper = all_prods | {mul(p, x) for p in proper} | ({x} if all_prods else set())
        all_prods = all_prods | {mul(p, x) for p in all_prods} | {x}
    return 1 not in proper


def davenport_brute(m: int):
    """Exhaustive maximal minimal-sequence length in C_m.

    Returns (D, extremal) where extremal lists the length-D minimal
    sequences as sorted tuples of residues mod m.  DFS over nondecreasing
    multisets, pruning once a proper nonempty sub-multiset sums to zero;
    pigeonhole on prefix sums terminates every branch by length m + 1.
    """
    if not 1 <= m <= 16:
        raise ValueError("m out of range 1..16")
    if m == 1:
        return 1, [(0,)]

    best = [0]
    extremal = []
    full = (1 << m) - 1

    def bit(r):
        return 1 << (r % m)

    def shift(mask, r):
        # rotate the achievable-sum bitmask by r (mod m)
        r %= m
        return ((mask << r) | (mask >> (m - r))) & full

    def dfs(seq, total, all_mask, proper_mask):
        if total == 0 and seq:
            if not proper_mask & 1:
                L = len(seq)
                if L > best[0]:
                    best[0] = L
                    extremal.clear()
                if L == best[0]:
                    extremal.append(tuple(seq))
            return  # any extension has this whole multiset as a zero subset
        if proper_mask & 1:
            return
        start = seq[-1] if seq else 1
        for x in range(start, m):
            new_proper = all_mask | shift(proper_mask, x)
            if seq:
                new_proper |= bit(x)
            new_all = all_mask | shift(all_mask, x) | bit(x)
            seq.append(x)
            dfs(seq, (total + x) % m, new_all, new_proper)
            seq.pop()

    dfs([], 0, 0, 0)
    extremal.sort()
    return best[0], extremal


def generators_of_cyclic(m: int):
    return [g for g in range(1, m) if gcd(g, m) == 1] or [0]
