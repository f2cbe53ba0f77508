"""Exact arithmetic in small finite fields GF(p^e).

Elements are encoded as integers in [0, q).  For a prime field the encoding
is the residue itself; for an extension field it is the base-p packing
sum(c_i * p**i) of the coefficient vector of the polynomial-basis
representative.  All arithmetic is table backed, which caps the supported
field size at 2**16.
"""

from __future__ import annotations

import itertools

MAX_FIELD_ORDER = 1 << 16
_ADD_TABLE_MAX = 1024  # full q*q addition tables only below this order


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# dense polynomials over GF(p), coefficient lists indexed by degree


def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_rem(a, b, p):
    """Remainder of a modulo b; b must be monic."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - db
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - lead * bi) % p
        _poly_trim(a)
        if not a:
            break
    return a


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree 1..deg//2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _poly_rem(poly, divisor, p):
                return False
    return True


def _smallest_irreducible(p, e):
    """Lexicographically smallest monic irreducible of degree e over GF(p).

    Coefficient tuples (c_0, ..., c_{e-1}) are compared low degree first.
    """
    for tail in itertools.product(range(p), repeat=e):
        poly = list(tail) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


def _prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class FieldSpec:
    """Immutable description of GF(p^e) plus its arithmetic tables.

    Do not instantiate directly; use :func:`field_make`, which caches specs
    so that equal fields share tables.
    """

    __slots__ = ("p", "e", "q", "modulus", "_exp", "_log", "_add", "_neg",
                 "generator")

    def __init__(self, p, e, modulus):
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = modulus
        if e == 1:
            self._exp = None
            self._log = None
            self._add = None
            self._neg = None
            self.generator = None
            return
        self._build_tables()

    # -- encoding helpers ---------------------------------------------------

    def coeffs(self, a):
        """Coefficient vector (length e) of the encoded element a."""
        p = self.p
        return tuple((a // p ** i) % p for i in range(self.e))

    def from_coeffs(self, cs):
        cs = list(cs)
        if len(cs) > self.e:
            raise ValueError("too many coefficients")
        return sum((c % self.p) * self.p ** i for i, c in enumerate(cs))

    def _raw_mul(self, a, b):
        prod = _poly_mul(list(self.coeffs(a)), list(self.coeffs(b)), self.p)
        rem = _poly_rem(prod, list(self.modulus), self.p)
        return self.from_coeffs(rem)

    def _raw_add(self, a, b):
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.e):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _build_tables(self):
        q = self.q
        # negation and (for small q) addition
        self._neg = [self._raw_add(0, self.from_coeffs(
            [(-c) % self.p for c in self.coeffs(a)])) for a in range(q)]
        if q <= _ADD_TABLE_MAX:
            self._add = [self._raw_add(a, b) for a in range(q) for b in range(q)]
        else:
            self._add = None
        # discrete log tables on the smallest generator (by encoding)
        order_factors = _prime_factors(q - 1)
        gen = None
        for g in range(2, q):
            if all(self._raw_pow(g, (q - 1) // r) != 1 for r in order_factors):
                gen = g
                break
        if gen is None:  # q == 2 has no g >= 2; unreachable since e > 1
            gen = 1
        self.generator = gen
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._raw_mul(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    def _raw_pow(self, a, n):
        out = 1
        base = a
        while n:
            if n & 1:
                out = self._raw_mul(out, base)
            base = self._raw_mul(base, base)
            n >>= 1
        return out

    # -- integer-level field operations ------------------------------------

    def add_i(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a * self.q + b]
        return self._raw_add(a, b)

    def neg_i(self, a):
        if self.e == 1:
            return (-a) % self.p
        return self._neg[a]

    def sub_i(self, a, b):
        return self.add_i(a, self.neg_i(b))

    def mul_i(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv_i(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.q)
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div_i(self, a, b):
        return self.mul_i(a, self.inv_i(b))

    def pow_i(self, a, n):
        if n < 0:
            return self.pow_i(self.inv_i(a), -n)
        if self.e == 1:
            return pow(a, n, self.p)
        if a == 0:
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    # -- boxed elements ------------------------------------------------------

    def element(self, value):
        if isinstance(value, FieldElement):
            if value.spec is not self:
                raise ValueError("element from a different field")
            return value
        v = int(value)
        if self.e == 1:
            v %= self.p
        elif not 0 <= v < self.q:
            raise ValueError("encoding %d out of range for GF(%d)" % (v, self.q))
        return FieldElement(self, v)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    def elements(self):
        return [FieldElement(self, v) for v in range(self.q)]

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.e)

    def __reduce__(self):  # pickle support (worker processes)
        return (field_make, (self.p, self.e))


class FieldElement:
    """An element of a FieldSpec, stored as its canonical integer encoding."""

    __slots__ = ("spec", "value")

    def __init__(self, spec, value):
        self.spec = spec
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ValueError("mixed field arithmetic")
            return other.value
        if isinstance(other, int):
            return self.spec.element(other).value
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add_i(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub_i(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub_i(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul_i(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.div_i(self.value, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.div_i(v, self.value))

    def __pow__(self, n):
        return FieldElement(self.spec, self.spec.pow_i(self.value, n))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg_i(self.value))

    def inverse(self):
        return FieldElement(self.spec, self.spec.inv_i(self.value))

    def is_zero(self):
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == self.spec.element(other).value
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.q, self.value))

    def __repr__(self):
        return "%r(%d)" % (self.spec, self.value)

    def __int__(self):
        return self.value


_SPEC_CACHE: dict[tuple[int, int], FieldSpec] = {}


def field_make(p, e=1):
    """Build (and cache) the spec for GF(p^e).

    The modulus is the lexicographically smallest monic irreducible
    polynomial of degree e over GF(p), coefficients compared low degree
    first, so encodings are reproducible across runs.
    """
    key = (p, e)
    cached = _SPEC_CACHE.get(key)
    if cached is not None:
        return cached
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if not is_prime(p):
        raise ValueError("%d is not prime" % p)
    q = p ** e
    if q > MAX_FIELD_ORDER:
        raise ValueError("field order %d exceeds table bound %d" % (q, MAX_FIELD_ORDER))
    modulus = () if e == 1 else _smallest_irreducible(p, e)
    spec = FieldSpec(p, e, modulus)
    _SPEC_CACHE[key] = spec
    return spec


def subfield_elements(spec, d):
    """The p^d elements of the subfield GF(p^d), i.e. solutions of x^(p^d) = x."""
    if spec.e % d != 0:
        raise ValueError("%d does not divide extension degree %d" % (d, spec.e))
    n = spec.p ** d
    out = [FieldElement(spec, v) for v in range(spec.q)
           if spec.pow_i(v, n) == v]
    if len(out) != n:
        raise AssertionError("subfield size mismatch")  # cannot happen
    return out
