"""Arithmetic in F_q, q = p^k, with exact element orders.

Elements are plain ints in [0, q).  For prime fields the value is the
residue itself; for extensions it encodes the coefficient tuple
(c0, c1, ..., c_{k-1}) of the polynomial basis, low degree first, as
c0 + c1*p + c2*p^2 + ...  All arithmetic goes through a Field context.
"""

from __future__ import annotations

class FieldError(ValueError):
    pass


def factorize(m):
    """Prime factorization by trial division, as a list of (prime, exponent)."""
    if m < 1:
        raise ValueError("factorize requires m >= 1")
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def euler_phi(m):
    if m < 1:
        raise ValueError("euler_phi requires m >= 1")
    result = m
    for r, _ in factorize(m):
        result -= result // r
    return result


def moebius(m):
    if m < 1:
        raise ValueError("moebius requires m >= 1")
    fac = factorize(m)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def is_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def _fp_poly_divmod(num, den, p):
    """Divide coefficient lists (low first) over F_p; den must be nonzero."""
    num = list(num)
    dd = len(den) - 1
    while dd >= 0 and den[dd] == 0:
        dd -= 1
    inv_lead = pow(den[dd], -1, p)
    quo = [0] * max(len(num) - dd, 0)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        f = (c * inv_lead) % p
        quo[i - dd] = f
        for j in range(dd + 1):
            num[i - dd + j] = (num[i - dd + j] - f * den[j]) % p
    while num and num[-1] == 0:
        num.pop()
    return quo, num


def _fp_irreducible(coeffs, p):
    """Trial-division irreducibility for a monic poly over F_p (low first)."""
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    # no roots
    for a in range(p):
        v = 0
        for c in reversed(coeffs):
            v = (v * a + c) % p
        if v == 0:
            return False
    # no monic factor of degree 2..deg//2
    for d in range(2, deg // 2 + 1):
        for idx in range(p ** d):
            den = []
            t = idx
            for _ in range(d):
                den.append(t % p)
                t //= p
            den.append(1)
            _, rem = _fp_poly_divmod(coeffs, den, p)
            if not rem:
                return False
    return True


def _smallest_irreducible(p, k):
    """Lexicographically smallest monic irreducible of degree k over F_p,
    comparing coefficient tuples (c0, ..., c_{k-1}) low degree first."""
    for tail in _tuples_lex(p, k):
        coeffs = list(tail) + [1]
        if _fp_irreducible(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no irreducible of degree {k} over F_{p}")  # unreachable


def _tuples_lex(p, k):
    """All k-tuples over {0..p-1} in lexicographic order (first entry most significant)."""
    if k == 0:
        yield ()
        return
    for head in range(p):
        for rest in _tuples_lex(p, k - 1):
            yield (head,) + rest


class Field:
    """Immutable context for F_q, q = p^k.  Thread-safe after construction."""

    def __init__(self, p, k=1):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if k < 1:
            raise FieldError("extension degree must be >= 1")
        q = p ** k
        if q > 2 ** 63:
            raise FieldError(f"q = {p}^{k} exceeds 2^63")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = _smallest_irreducible(p, k) if k > 1 else None
        self.qm1_factors = factorize(q - 1) if q > 1 else []
        self._mul_table = None
        self._inv_table = None
        if k > 1 and q <= 1024:
            self._build_tables()

    def __repr__(self):
        if self.k == 1:
            return f"Field({self.p})"
        return f"Field({self.p}^{self.k})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    # -- encoding ----------------------------------------------------------

    def coeffs(self, x):
        """Coefficient tuple (c0, ..., c_{k-1}) of element x."""
        out = []
        for _ in range(self.k):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    def from_coeffs(self, cs):
        v = 0
        for c in reversed(cs):
            v = v * self.p + (c % self.p)
        return v

    def elements(self):
        return range(self.q)

    def elements_coeff_order(self):
        """All elements sorted by coefficient tuple, c0 most significant."""
        return sorted(range(self.q), key=self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        v, mult = 0, 1
        for _ in range(self.k):
            v += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return v

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        v, mult = 0, 1
        for _ in range(self.k):
            v += ((-a) % p) * mult
            a //= p
            mult *= p
        return v

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        return self._mul_slow(a, b)

    def _mul_slow(self, a, b):
        p = self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        _, rem = _fp_poly_divmod(prod, list(self.modulus), p)
        rem += [0] * (self.k - len(rem))
        return self.from_coeffs(rem)

    def _build_tables(self):
        q = self.q
        self._mul_table = tbl = [0] * (q * q)
        for a in range(q):
            for b in range(a, q):
                v = self._mul_slow(a, b)
                tbl[a * q + b] = v
                tbl[b * q + a] = v
        self._inv_table = inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if tbl[a * q + b] == 1:
                    inv[a] = b
                    break

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.k == 1:
            return pow(a, e, self.p)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        if a == 0:
            raise FieldError("inverse of zero")
        if self.k == 1:
            return pow(a, -1, self.p)
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- orders ------------------------------------------------------------

    def order(self, x):
        """Multiplicative order, via the cached factorization of q-1."""
        if x == 0:
            raise FieldError("order of zero")
        d = self.q - 1
        for r, _ in self.qm1_factors:
            while d % r == 0 and self.pow(x, d // r) == 1:
                d //= r
        return d

    def primitive_element(self):
        """Smallest element (coefficient-tuple order) of order q - 1."""
        if self.q == 2:
            return 1
        for x in self.elements_coeff_order():
            if x != 0 and self.order(x) == self.q - 1:
                return x
        raise FieldError("no primitive element found")  # unreachable

    def element_of_order(self, m):
        """Smallest element (coefficient-tuple order) of order m, or None."""
        if (self.q - 1) % m != 0:
            return None
        for x in self.elements_coeff_order():
            if x != 0 and self.order(x) == m:
                return x
        return None

    # -- text forms --------------------------------------------------------

    def format_elem(self, x):
        if self.k == 1:
            return str(x)
        return "[" + ",".join(str(c) for c in self.coeffs(x)) + "]"

    def parse_elem(self, s):
        s = s.strip()
        if s.startswith("["):
            if not s.endswith("]"):
                raise FieldError(f"bad element literal {s!r}")
            cs = [int(t) for t in s[1:-1].split(",")] if s[1:-1].strip() else []
            if len(cs) > self.k:
                raise FieldError(f"too many coefficients in {s!r}")
            return self.from_coeffs(cs + [0] * (self.k - len(cs)))
        v = int(s)
        if self.k > 1:
            # bare integers name prime-subfield elements
            return v % self.p
        return v % self.p


def field_create(p, k=1):
    return Field(p, k)


def parse_field(spec):
    """Parse a field spec string "p" or "p^k"."""
    spec = spec.strip()
    if "^" in spec:
        ps, ks = spec.split("^", 1)
        return Field(int(ps), int(ks))
    return Field(int(spec))
