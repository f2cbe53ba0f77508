"""Multivariate polynomials over finite fields and Groebner basis machinery.

Polynomials are order-agnostic term maps; every order-sensitive operation
takes the monomial order explicitly.  Coefficients are stored as canonical
integer encodings (see :mod:`mindist.gf`); use :meth:`Polynomial.coefficient`
for boxed access.
"""

from __future__ import annotations

import heapq
import re
from operator import add as _add, gt as _gt, sub as _sub

from .gf import FieldElement


class ParseError(ValueError):
    """Raised for malformed polynomial / point / spec text."""


class BudgetExceededError(RuntimeError):
    """Raised when an exhaustive search would exceed the candidate budget."""


class Monomial:
    """Exponent-vector monomial with cached total degree."""

    __slots__ = ("exps", "deg")

    def __init__(self, exps):
        self.exps = tuple(exps)
        self.deg = sum(self.exps)

    @property
    def arity(self):
        return len(self.exps)

    def is_one(self):
        return self.deg == 0

    def __mul__(self, other):
        return Monomial(map(_add, self.exps, other.exps))

    def divides(self, other):
        return not any(map(_gt, self.exps, other.exps))

    def __truediv__(self, other):
        if not other.divides(self):
            raise ValueError("inexact monomial division")
        return Monomial(map(_sub, self.exps, other.exps))

    def lcm(self, other):
        return Monomial(map(max, self.exps, other.exps))

    def gcd(self, other):
        return Monomial(map(min, self.exps, other.exps))

    def coprime(self, other):
        return all(a == 0 or b == 0 for a, b in zip(self.exps, other.exps))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return "Monomial%r" % (self.exps,)

    def __str__(self):
        if self.deg == 0:
            return "1"
        parts = []
        for i, a in enumerate(self.exps):
            if a == 1:
                parts.append("t%d" % (i + 1))
            elif a > 1:
                parts.append("t%d^%d" % (i + 1, a))
        return "*".join(parts)


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """Total multiplicative well-order on monomials of a fixed arity.

    Orders are exposed as sort keys: m1 precedes m2 iff key(m1) < key(m2).
    Keys are memoized per exponent tuple since the hot loops compare the
    same monomials over and over.
    """

    arity = 0

    def key_raw(self, exps):
        raise NotImplementedError

    def key(self, m):
        cache = self._key_cache
        k = cache.get(m.exps)
        if k is None:
            k = cache[m.exps] = self.key_raw(m.exps)
        return k

    def compare(self, a, b):
        if a.arity != b.arity or a.arity != self.arity:
            raise ValueError("arity mismatch in monomial comparison")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def cache_token(self):
        raise NotImplementedError


class Lex(MonomialOrder):
    """Lexicographic order.

    ``priority`` lists 0-based variable indices from least to greatest; the
    default (0, ..., s-1) makes t1 the least variable.
    """

    def __init__(self, arity, priority=None):
        self.arity = arity
        if priority is None:
            priority = tuple(range(arity))
        self.priority = tuple(priority)
        if sorted(self.priority) != list(range(arity)):
            raise ValueError("priority must be a permutation of 0..s-1")
        self._sig = tuple(reversed(self.priority))
        self._key_cache = {}

    def key_raw(self, exps):
        return tuple(exps[i] for i in self._sig)

    def cache_token(self):
        return ("lex", self.priority)

    def __repr__(self):
        return "Lex(%d, %r)" % (self.arity, self.priority)


class GrevLex(MonomialOrder):
    """Graded reverse lexicographic order; ties broken from the least variable."""

    def __init__(self, arity, priority=None):
        self.arity = arity
        if priority is None:
            priority = tuple(range(arity))
        self.priority = tuple(priority)
        if sorted(self.priority) != list(range(arity)):
            raise ValueError("priority must be a permutation of 0..s-1")
        self._key_cache = {}

    def key_raw(self, exps):
        return (sum(exps), tuple(-exps[i] for i in self.priority))

    def cache_token(self):
        return ("grevlex", self.priority)

    def __repr__(self):
        return "GrevLex(%d, %r)" % (self.arity, self.priority)


class BlockElim(MonomialOrder):
    """Elimination (block) order: the first k variables dominate the rest."""

    def __init__(self, arity, k, front=None, back=None):
        if not 0 < k < arity:
            raise ValueError("elimination prefix must be a proper nonempty block")
        self.arity = arity
        self.k = k
        self.front = front if front is not None else GrevLex(k)
        self.back = back if back is not None else GrevLex(arity - k)
        self._key_cache = {}

    def key_raw(self, exps):
        k = self.k
        return (self.front.key_raw(exps[:k]), self.back.key_raw(exps[k:]))

    def cache_token(self):
        return ("block", self.k, self.front.cache_token(), self.back.cache_token())

    def __repr__(self):
        return "BlockElim(%d, k=%d)" % (self.arity, self.k)


def order_compare(order, a, b):
    """-1, 0 or 1 as a precedes, equals or follows b under the order."""
    return order.compare(a, b)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Polynomial over a finite field: map monomial -> nonzero coefficient."""

    __slots__ = ("field", "arity", "terms")

    def __init__(self, field, arity, terms=None):
        self.field = field
        self.arity = arity
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if isinstance(c, FieldElement):
                    if c.spec != field:
                        raise ValueError("coefficient from a different field")
                    cv = c.value
                else:
                    cv = int(c)
                    if field.e == 1:
                        cv %= field.p
                    elif not 0 <= cv < field.q:
                        raise ValueError("coefficient encoding out of range")
                if cv:
                    if m.arity != arity:
                        raise ValueError("monomial arity mismatch")
                    self.terms[m] = cv

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field, arity):
        return cls(field, arity)

    @classmethod
    def constant(cls, field, arity, c):
        return cls(field, arity, {Monomial((0,) * arity): c})

    @classmethod
    def term(cls, field, monomial, c=1):
        return cls(field, monomial.arity, {monomial: c})

    @classmethod
    def _raw(cls, field, arity, terms):
        """Trusted constructor: terms already int-encoded with no zeros."""
        p = object.__new__(cls)
        p.field = field
        p.arity = arity
        p.terms = terms
        return p

    # -- basic queries -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, m):
        return self.field.element(self.terms.get(m, 0))

    def monomials(self):
        return list(self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(m.deg for m in self.terms)

    def is_homogeneous(self):
        degs = {m.deg for m in self.terms}
        return len(degs) <= 1

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.field != other.field or self.arity != other.arity:
            raise ValueError("mixed rings in polynomial arithmetic")

    def __add__(self, other):
        self._check(other)
        f = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = f.add_i(out.get(m, 0), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(f, self.arity, out)

    def __sub__(self, other):
        self._check(other)
        f = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = f.sub_i(out.get(m, 0), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(f, self.arity, out)

    def __neg__(self):
        f = self.field
        return Polynomial._raw(f, self.arity,
                               {m: f.neg_i(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        self._check(other)
        f = self.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                v = f.add_i(out.get(m, 0), f.mul_i(c1, c2))
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(f, self.arity, out)

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        f = self.field
        cv = f.element(c).value
        if cv == 0:
            return Polynomial._raw(f, self.arity, {})
        return Polynomial._raw(f, self.arity,
                               {m: f.mul_i(v, cv) for m, v in self.terms.items()})

    def times_term(self, c, mono):
        """self * (c * mono) with c an int encoding."""
        f = self.field
        if c == 0:
            return Polynomial._raw(f, self.arity, {})
        out = {}
        for m, v in self.terms.items():
            out[m * mono] = f.mul_i(v, c)
        return Polynomial._raw(f, self.arity, out)

    # -- order-sensitive -----------------------------------------------------

    def leading_monomial(self, order):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_term(self, order):
        m = self.leading_monomial(order)
        return m, self.field.element(self.terms[m])

    def monic(self, order):
        m = self.leading_monomial(order)
        c = self.terms[m]
        if c == 1:
            return self
        return self.scale(self.field.inv_i(c))

    # -- evaluation ----------------------------------------------------------

    def eval_i(self, coords):
        """Evaluate at a tuple of int-encoded coordinates."""
        f = self.field
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, a in zip(coords, m.exps):
                if a:
                    if x == 0:
                        v = 0
                        break
                    v = f.mul_i(v, f.pow_i(x, a))
            if v:
                total = f.add_i(total, v)
        return total

    def __call__(self, coords):
        vals = [self.field.element(x).value for x in coords]
        return self.field.element(self.eval_i(tuple(vals)))

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.field == other.field and self.arity == other.arity
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def to_str(self, order=None):
        if not self.terms:
            return "0"
        if order is None:
            order = GrevLex(self.arity)
        monos = sorted(self.terms, key=order.key, reverse=True)
        f = self.field
        neg_one = f.neg_i(1)
        parts = []
        for i, m in enumerate(monos):
            c = self.terms[m]
            if m.is_one():
                body = str(c)
            elif c == 1:
                body = str(m)
            elif c == neg_one and neg_one != 1:
                body = str(m)
                c = -1  # rendered via the join sign
            else:
                body = "%d*%s" % (c, m)
            if i == 0:
                parts.append("-" + body if c == -1 else body)
            else:
                parts.append(("- " if c == -1 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "<Polynomial %s over %r>" % (self.to_str(), self.field)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(?P<var>t(?P<idx>\d+))(?:\s*\^\s*(?P<exp>\d+))?"
                    r"|(?P<int>\d+)|(?P<op>[+\-*]))")


def max_variable_index(text):
    """Largest tK index appearing in the text, or 0."""
    return max((int(m.group("idx")) for m in _TOKEN.finditer(text)
                if m.group("var")), default=0)


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ParseError("cannot parse polynomial at %r" % text[pos:pos + 12])
        pos = mt.end()
        if mt.group("var"):
            e = int(mt.group("exp")) if mt.group("exp") else 1
            tokens.append(("var", int(mt.group("idx")), e))
        elif mt.group("int") is not None:
            tokens.append(("int", int(mt.group("int")), None))
        else:
            tokens.append(("op", mt.group("op"), None))
    return tokens


def parse_polynomial(text, field, arity):
    """Parse `2*t1^2*t2 - t3 + 1` style text into a Polynomial.

    Integer coefficients are reduced mod p for prime fields; for extension
    fields they are read as canonical encodings (and must lie in [0, q)) so
    printed polynomials round-trip.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text")
    terms = {}
    i = 0
    n = len(tokens)
    while i < n:
        sign = 1
        while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ParseError("dangling sign in %r" % text)
        coeff = 1
        exps = [0] * arity
        while True:
            kind, a, b = tokens[i]
            if kind == "int":
                v = a % field.p if field.e == 1 else a
                if field.e > 1 and not 0 <= v < field.q:
                    raise ParseError("coefficient %d out of range for %r" % (a, field))
                coeff = field.mul_i(coeff, v)
            elif kind == "var":
                if not 1 <= a <= arity:
                    raise ParseError("unknown variable t%d (arity %d)" % (a, arity))
                exps[a - 1] += b
            else:
                raise ParseError("expected a factor in %r" % text)
            i += 1
            if i < n and tokens[i] == ("op", "*", None):
                i += 1
                if i >= n:
                    raise ParseError("dangling '*' in %r" % text)
                continue
            break
        if i < n and not (tokens[i][0] == "op" and tokens[i][1] in "+-"):
            raise ParseError("expected '+' or '-' between terms in %r" % text)
        c = coeff if sign > 0 else field.neg_i(coeff)
        m = Monomial(exps)
        v = field.add_i(terms.get(m, 0), c)
        if v:
            terms[m] = v
        else:
            terms.pop(m, None)
    return Polynomial._raw(field, arity, terms)


# ---------------------------------------------------------------------------
# ideals and Groebner bases


class Ideal:
    """Finitely generated ideal of K[t1..ts]."""

    __slots__ = ("field", "arity", "generators", "_gb_cache")

    def __init__(self, field, arity, generators):
        self.field = field
        self.arity = arity
        gens = []
        for g in generators:
            if g.field != field or g.arity != arity:
                raise ValueError("generator from a different ring")
            if g:
                gens.append(g)
        self.generators = tuple(gens)
        self._gb_cache = {}

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def groebner(self, order=None):
        if order is None:
            order = GrevLex(self.arity)
        tok = order.cache_token()
        gb = self._gb_cache.get(tok)
        if gb is None:
            gb = buchberger(self, order)
            self._gb_cache[tok] = gb
        return gb

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(g.to_str() for g in self.generators)


class GroebnerBasis:
    """Reduced Groebner basis paired with its monomial order."""

    __slots__ = ("order", "basis", "field", "arity")

    def __init__(self, order, basis, field, arity):
        self.order = order
        self.basis = tuple(basis)
        self.field = field
        self.arity = arity

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.basis]

    def initial_ideal(self):
        from .hilbert import MonomialIdeal
        return MonomialIdeal.from_monomials(self.arity, self.leading_monomials())

    def normal_form(self, f):
        return divide(f, list(self.basis), self.order)[1]

    def reduces_to_zero(self, f):
        return not self.normal_form(f)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return "GroebnerBasis[%s]" % "; ".join(g.to_str(self.order) for g in self.basis)


def divide(f, divisors, order):
    """Division with remainder: f = sum a_i g_i + h.

    No term of h is divisible by any leading monomial of the divisors, and
    in(a_i g_i) never exceeds in(f).  Divisor choice at each step is the
    first match in list order, making the output deterministic.
    """
    for g in divisors:
        if not g:
            raise ValueError("zero divisor polynomial")
        if g.field != f.field or g.arity != f.arity:
            raise ValueError("mixed rings in division")
    field = f.field
    key = order.key
    lead = [(g.leading_monomial(order), g) for g in divisors]
    quotients = [Polynomial.zero(field, f.arity) for _ in divisors]
    remainder = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=key)
        c = work[m]
        for i, (lm, g) in enumerate(lead):
            if lm.divides(m):
                factor_m = m / lm
                factor_c = field.div_i(c, g.terms[lm])
                quotients[i] = quotients[i] + Polynomial.term(field, factor_m, factor_c)
                for gm, gc in g.terms.items():
                    key_m = gm * factor_m
                    v = field.sub_i(work.get(key_m, 0), field.mul_i(gc, factor_c))
                    if v:
                        work[key_m] = v
                    else:
                        work.pop(key_m, None)
                break
        else:
            remainder[m] = c
            del work[m]
    return quotients, Polynomial._raw(field, f.arity, remainder)


def _reduce_fully(f, lead_pairs, order, field):
    """Remainder of f under the (lm, poly) pairs; internal fast path."""
    key = order.key
    remainder = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, g in lead_pairs:
            if lm.divides(m):
                factor_m = m / lm
                factor_c = field.div_i(c, g.terms[lm])
                for gm, gc in g.terms.items():
                    key_m = gm * factor_m
                    v = field.sub_i(work.get(key_m, 0), field.mul_i(gc, factor_c))
                    if v:
                        work[key_m] = v
                    else:
                        work.pop(key_m, None)
                break
        else:
            remainder[m] = c
            del work[m]
    return Polynomial._raw(field, f.arity, remainder)


def normal_form(f, gb):
    """Remainder of f on division by the basis: zero or a standard polynomial."""
    return gb.normal_form(f)


def spolynomial(f, g, order):
    mf = f.leading_monomial(order)
    mg = g.leading_monomial(order)
    l = mf.lcm(mg)
    field = f.field
    a = f.times_term(field.inv_i(f.terms[mf]), l / mf)
    b = g.times_term(field.inv_i(g.terms[mg]), l / mg)
    return a - b


def buchberger(ideal_or_polys, order, seeded_prefix=0):
    """Reduced Groebner basis via Buchberger's algorithm.

    Pair selection: smallest lcm degree first (normal strategy), ties broken
    by the order key of the lcm and then pair indices.  Both classical
    criteria (coprime leading monomials; chain) prune pairs.  The first
    ``seeded_prefix`` generators are promised to be a Groebner basis of the
    subideal they generate, so pairs among them are skipped.
    """
    if isinstance(ideal_or_polys, Ideal):
        field, arity = ideal_or_polys.field, ideal_or_polys.arity
        gens = [g for g in ideal_or_polys.generators if g]
    else:
        gens = [g for g in ideal_or_polys if g]
        if not gens:
            raise ValueError("cannot infer ring from an empty generator list")
        field, arity = gens[0].field, gens[0].arity
    if not gens:
        return GroebnerBasis(order, [], field, arity)

    basis = [g.monic(order) for g in gens]
    lms = [g.leading_monomial(order) for g in basis]
    key = order.key

    pending = set()
    heap = []

    def push_pair(i, j):
        l = lms[i].lcm(lms[j])
        if l == lms[i] * lms[j]:  # coprime criterion
            return
        pending.add((i, j))
        heapq.heappush(heap, (l.deg, key(l), i, j))

    n0 = min(int(seeded_prefix), len(basis))
    for j in range(len(basis)):
        for i in range(j):
            if j < n0:
                continue  # seed pairs already reduce to zero
            push_pair(i, j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        l = lms[i].lcm(lms[j])
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if lms[k].divides(l):
                pi = (min(i, k), max(i, k))
                pj = (min(j, k), max(j, k))
                if pi not in pending and pj not in pending:
                    skip = True
                    break
        if skip:
            continue
        s = spolynomial(basis[i], basis[j], order)
        r = _reduce_fully(s, list(zip(lms, basis)), order, field)
        if r:
            r = r.monic(order)
            basis.append(r)
            lms.append(r.leading_monomial(order))
            t = len(basis) - 1
            for m in range(t):
                push_pair(m, t)

    # minimalize: drop elements whose lm is divisible by another's lm
    keep = []
    for i, lm in enumerate(lms):
        dominated = False
        for j, other in enumerate(lms):
            if i == j:
                continue
            if other.divides(lm) and (other != lm or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    minimal = [basis[i] for i in keep]

    # inter-reduce tails
    reduced = []
    for i, g in enumerate(minimal):
        others = [h for j, h in enumerate(minimal) if j != i]
        pairs = [(h.leading_monomial(order), h) for h in others]
        r = _reduce_fully(g, pairs, order, field)
        if r:
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: key(g.leading_monomial(order)))
    return GroebnerBasis(order, reduced, field, arity)


# ---------------------------------------------------------------------------
# ideal operations via an auxiliary elimination variable


def _shift_poly(f, extra_front, new_arity):
    terms = {}
    pad = (0,) * extra_front
    tail = (0,) * (new_arity - extra_front - f.arity)
    for m, c in f.terms.items():
        terms[Monomial(pad + m.exps + tail)] = c
    return Polynomial._raw(f.field, new_arity, terms)


def _project_poly(f, drop_front, new_arity):
    terms = {}
    for m, c in f.terms.items():
        terms[Monomial(m.exps[drop_front:])] = c
    return Polynomial._raw(f.field, new_arity, terms)


def _uses_front(f, k):
    return any(any(m.exps[:k]) for m in f.terms)


def intersect_ideals(I, J):
    """Generators of the intersection, via u*I + (1-u)*J and elimination of u.

    The left ideal is replaced by its reduced basis under the order induced
    on the non-auxiliary block; u times that basis is a Groebner basis of
    the ideal it generates (multiplication by a fixed monomial preserves
    leading terms and reductions), so pairs inside it are pre-seeded.  This
    makes repeated intersections against a fixed I cheap.
    """
    if I.field != J.field or I.arity != J.arity:
        raise ValueError("ideals live in different rings")
    field, s = I.field, I.arity
    if not I.generators or not J.generators:
        return Ideal(field, s, [])
    ext = s + 1
    u = Polynomial.term(field, Monomial((1,) + (0,) * s))
    one = Polynomial.constant(field, ext, 1)
    left = I.groebner(GrevLex(s))
    gens = []
    for g in left.basis:
        gens.append(u * _shift_poly(g, 1, ext))
    for h in J.generators:
        gens.append((one - u) * _shift_poly(h, 1, ext))
    order = BlockElim(ext, 1)
    gb = buchberger(Ideal(field, ext, gens), order, seeded_prefix=len(left.basis))
    kept = [_project_poly(g, 1, s) for g in gb if not _uses_front(g, 1)]
    return Ideal(field, s, kept)


def colon_ideal(I, f):
    """Generators of (I : f), via intersection with (f) and exact division."""
    if not f:
        raise ValueError("colon by the zero polynomial")
    inter = intersect_ideals(I, Ideal(I.field, I.arity, [f]))
    order = GrevLex(I.arity)
    out = []
    for g in inter.generators:
        qs, r = divide(g, [f], order)
        if r:
            raise AssertionError("inexact division in colon computation")
        out.append(qs[0])
    return Ideal(I.field, I.arity, out)


def ideal_equal(I, J, order=None):
    """Ideal equality via reduced Groebner bases under a fixed canonical order."""
    if I.field != J.field or I.arity != J.arity:
        return False
    if order is None:
        order = GrevLex(I.arity)
    return I.groebner(order).basis == J.groebner(order).basis


def is_zero_divisor(I, f):
    """True iff (I : f) != I.

    I is always contained in (I : f), so inequality holds exactly when some
    generator of the colon ideal fails to reduce to zero against a Groebner
    basis of I; this avoids a fresh basis computation per test.
    """
    gb = I.groebner(GrevLex(I.arity))
    quot = colon_ideal(I, f)
    return any(gb.normal_form(g) for g in quot.generators)


def eliminate(I, k):
    """Generators of I ∩ K[t_{k+1}..t_s]: basis elements free of the prefix."""
    if not 0 < k < I.arity:
        raise ValueError("elimination prefix must be a proper nonempty block")
    order = BlockElim(I.arity, k)
    gb = buchberger(I, order)
    kept = [_project_poly(g, k, I.arity - k) for g in gb if not _uses_front(g, k)]
    return Ideal(I.field, I.arity - k, kept)
