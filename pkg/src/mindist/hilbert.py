"""Monomial-ideal combinatorics: footprints, Hilbert series, degree, regularity.

All Hilbert data of a graded polynomial ideal flows through its initial
ideal (the Hilbert function, degree and regularity are invariant under
passing to the initial ideal), so this module only ever works with monomial
ideals.  The series numerator h(t) with HS(S/M) = h(t)/(1-t)^s is computed
by the pivot recursion HS(S/M) = HS(S/(M+(v))) + t*HS(S/(M:v)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .mpoly import GroebnerBasis, Ideal, Monomial


def _minimalize(monomials):
    """Inclusion-minimal subset under divisibility, canonically sorted."""
    ordered = sorted(set(m.exps for m in monomials))
    ordered.sort(key=sum)
    out = []
    for exps in ordered:
        m = Monomial(exps)
        if not any(g.divides(m) for g in out):
            out.append(m)
    out.sort(key=lambda m: m.exps)
    return tuple(out)


class MonomialIdeal:
    """Monomial ideal stored by its minimal generators."""

    __slots__ = ("arity", "gens")

    def __init__(self, arity, gens):
        self.arity = arity
        self.gens = gens

    @classmethod
    def from_monomials(cls, arity, monomials):
        for m in monomials:
            if m.arity != arity:
                raise ValueError("monomial arity mismatch")
        return cls(arity, _minimalize(monomials))

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return any(g.deg == 0 for g in self.gens)

    def contains(self, m):
        return any(g.divides(m) for g in self.gens)

    def plus(self, m):
        return MonomialIdeal.from_monomials(self.arity, list(self.gens) + [m])

    def colon_monomial(self, m):
        return MonomialIdeal.from_monomials(
            self.arity,
            [Monomial(tuple(max(a - b, 0) for a, b in zip(g.exps, m.exps)))
             for g in self.gens])

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal)
                and self.arity == other.arity and self.gens == other.gens)

    def __hash__(self):
        return hash((self.arity, self.gens))

    def __repr__(self):
        if not self.gens:
            return "MonomialIdeal(0)"
        return "MonomialIdeal(%s)" % ", ".join(str(g) for g in self.gens)


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series numerator plus the invariants read off from it.

    numerator: coefficients of h(t) with HS(S/M) = h(t)/(1-t)^s.
    reduced_numerator: g(t) = h(t)/(1-t)^(s-dim) with g(1) != 0.
    degree: g(1), the degree (multiplicity) of S/M.
    """

    numerator: tuple
    dim: int
    degree: int
    reduced_numerator: tuple


# -- integer polynomial helpers (coefficient lists indexed by degree) --------


def _ipoly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _ipoly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return _ipoly_trim(out)


def _ipoly_shift(a, k):
    return [0] * k + list(a) if a else []


def _ipoly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _ipoly_trim(out)


def _ipoly_eval1(a):
    return sum(a)

def _ipoly_div_one_minus_t(a):
    """Exact quotient a(t)/(1-t); requires a(1) == 0."""
    if _ipoly_eval1(a) != 0:
        raise ValueError("polynomial not divisible by (1-t)")
    out = []
    carry = 0
    for i in range(len(a) - 1):
        carry = a[i] + carry
        out.append(carry)
    return _ipoly_trim(out)


def _pivot_variable(gens):
    """Variable occurring in the most multi-variable generators; ties to the
    smallest index."""
    arity = gens[0].arity
    counts = [0] * arity
    for g in gens:
        if sum(1 for a in g.exps if a) >= 2:
            for i, a in enumerate(g.exps):
                if a:
                    counts[i] += 1
    best = max(counts)
    return counts.index(best)


def hilbert_numerator(M):
    """Coefficients of h(t) with HS(S/M) = h(t)/(1-t)^s."""
    return list(_numerator(M.gens, M.arity))


def _numerator(gens, arity):
    if any(g.deg == 0 for g in gens):
        return ()
    if not gens:
        return (1,)
    if all(sum(1 for a in g.exps if a) == 1 for g in gens):
        # pairwise coprime pure powers: h = prod (1 - t^deg)
        h = [1]
        for g in gens:
            factor = [1] + [0] * (g.deg - 1) + [-1]
            h = _ipoly_mul(h, factor)
        return tuple(h)
    v = _pivot_variable(gens)
    pivot = Monomial(tuple(1 if i == v else 0 for i in range(arity)))
    plus = _minimalize([g for g in gens if g.exps[v] == 0] + [pivot])
    colon = _minimalize(
        [Monomial(tuple(max(a - b, 0) for a, b in zip(g.exps, pivot.exps)))
         for g in gens])
    h_plus = _numerator(plus, arity)
    h_colon = _numerator(colon, arity)
    return tuple(_ipoly_add(h_plus, _ipoly_shift(h_colon, 1)))


def hilbert_data_from_numerator(h, arity):
    """HilbertData read off a series numerator h(t) over (1-t)^arity."""
    if not h:
        raise ValueError("unit ideal has no dimension/degree data")
    g = list(h)
    mult = 0
    while _ipoly_eval1(g) == 0:
        g = _ipoly_div_one_minus_t(g)
        mult += 1
    dim = arity - mult
    degree = _ipoly_eval1(g)
    if degree < 1:
        raise AssertionError("degree must be positive")  # cannot happen
    return HilbertData(numerator=tuple(h), dim=dim, degree=degree,
                       reduced_numerator=tuple(g))


def dim_degree(M):
    """Krull dimension and degree of S/M, read off the series numerator."""
    if M.is_unit():
        raise ValueError("unit ideal has no dimension/degree data")
    return hilbert_data_from_numerator(hilbert_numerator(M), M.arity)


def series_coefficient(numerator, s, d):
    """Coefficient of t^d in numerator(t)/(1-t)^s (an independent expansion)."""
    total = 0
    for i, c in enumerate(numerator):
        if i > d:
            break
        if c:
            total += c * math.comb(d - i + s - 1, s - 1)
    return total


def footprint_slice(M, d):
    """All degree-d standard monomials of M, lex ascending on exponent tuples."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    out = []
    exps = [0] * M.arity

    def rec(pos, remaining):
        if pos == M.arity - 1:
            exps[pos] = remaining
            m = Monomial(tuple(exps))
            if not M.contains(m):
                out.append(m)
            exps[pos] = 0
            return
        for a in range(remaining + 1):
            exps[pos] = a
            rec(pos + 1, remaining - a)
        exps[pos] = 0

    rec(0, d)
    return out


def _as_monomial_ideal(obj, order=None):
    if isinstance(obj, MonomialIdeal):
        return obj
    if isinstance(obj, GroebnerBasis):
        return obj.initial_ideal()
    if isinstance(obj, Ideal):
        if not obj.is_homogeneous():
            raise ValueError("Hilbert data requires homogeneous generators")
        return obj.groebner(order).initial_ideal()
    raise TypeError("expected MonomialIdeal, Ideal or GroebnerBasis")


def hilbert_function(obj, d, order=None):
    """H(d): the number of degree-d standard monomials of the initial ideal."""
    M = _as_monomial_ideal(obj, order)
    return len(footprint_slice(M, d))


def regularity_dim0(M):
    """Least d >= 1 with no standard monomials in degree d (dim 0 only)."""
    data = dim_degree(M)
    if data.dim != 0:
        raise ValueError("regularity_dim0 requires a zero-dimensional quotient")
    cap = sum(g.deg for g in M.gens) + 1
    for d in range(1, cap + 1):
        if not footprint_slice(M, d):
            return d
    raise AssertionError("regularity search exceeded its cap")  # cannot happen


def regularity_points(obj, order=None):
    """Least r with H(r) = deg(S/I) for the vanishing ideal of a point set.

    Validates the strict increase 1 = H(0) < H(1) < ... < H(r) = deg; any
    violation signals that the input is not a point-set ideal.
    """
    M = _as_monomial_ideal(obj, order)
    data = dim_degree(M)
    if data.dim != 1:
        raise ValueError("point-set regularity requires a one-dimensional quotient")
    target = data.degree
    prev = None
    d = 0
    while True:
        h = len(footprint_slice(M, d))
        if prev is not None and h <= prev:
            raise ValueError("Hilbert values fail strict increase; "
                             "input is not a point-set ideal")
        if h == target:
            return d
        if h > target:
            raise ValueError("Hilbert values overshoot the degree; "
                             "input is not a point-set ideal")
        prev = h
        d += 1
