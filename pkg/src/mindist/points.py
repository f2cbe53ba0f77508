"""Finite point sets in projective space over GF(q) and their vanishing ideals.

Points are stored by canonical representative: the first nonzero coordinate
is scaled to 1.  Vanishing ideals come from two independent constructions,
intersection of point ideals and elimination from a monomial
parameterization; both return reduced Groebner bases.
"""

from __future__ import annotations

import itertools
import re

from .hilbert import dim_degree
from .mpoly import (BlockElim, GrevLex, Ideal, Monomial, ParseError,
                    Polynomial, buchberger, ideal_equal, intersect_ideals,
                    _project_poly)


class ProjectivePoint:
    """Point of P^{s-1}, coordinates int-encoded, first nonzero equal to 1."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = tuple(coords)

    @property
    def arity(self):
        return len(self.coords)

    def coordinate(self, i):
        return self.field.element(self.coords[i])

    def pivot(self):
        for i, v in enumerate(self.coords):
            if v:
                return i
        raise AssertionError("zero vector stored as a point")

    def __eq__(self, other):
        return (isinstance(other, ProjectivePoint)
                and self.field == other.field and self.coords == other.coords)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "[%s]" % ":".join(str(v) for v in self.coords)


def normalize(field, raw):
    """Canonical representative: scale so the first nonzero coordinate is 1."""
    vals = [field.element(x).value for x in raw]
    pivot = next((i for i, v in enumerate(vals) if v), None)
    if pivot is None:
        raise ValueError("the zero vector has no projective class")
    inv = field.inv_i(vals[pivot])
    return ProjectivePoint(field, tuple(field.mul_i(inv, v) for v in vals))


class PointSet:
    """Deduplicated, canonically sorted set of projective points."""

    __slots__ = ("field", "arity", "points", "_ideal_cache")

    def __init__(self, field, points):
        pts = {}
        arity = None
        for P in points:
            if P.field != field:
                raise ValueError("point from a different field")
            if arity is None:
                arity = P.arity
            elif P.arity != arity:
                raise ValueError("points of mixed arity")
            pts[P.coords] = P
        if not pts:
            raise ValueError("a point set must contain at least one point")
        self.field = field
        self.arity = arity
        self.points = tuple(pts[c] for c in sorted(pts))
        self._ideal_cache = {}

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, P):
        return isinstance(P, ProjectivePoint) and any(
            P.coords == Q.coords for Q in self.points)

    def coordinate_rows(self):
        return [P.coords for P in self.points]

    def vanishing_ideal(self, order=None):
        if order is None:
            order = GrevLex(self.arity)
        tok = order.cache_token()
        cached = self._ideal_cache.get(tok)
        if cached is None:
            cached = vanishing_ideal_points(self, order)
            self._ideal_cache[tok] = cached
        return cached

    def __repr__(self):
        return "PointSet(%d points in P^%d over %r)" % (
            len(self.points), self.arity - 1, self.field)


def enumerate_space(kind, s=None, field=None, sets=None):
    """Point sets: the full projective space, the torus, or [A_1 x ... x A_s]."""
    if kind == "full":
        if s is None or field is None:
            raise ValueError("full space needs an arity and a field")
        pts = []
        q = field.q
        for pivot in range(s):
            for tail in itertools.product(range(q), repeat=s - pivot - 1):
                coords = (0,) * pivot + (1,) + tail
                pts.append(ProjectivePoint(field, coords))
        return PointSet(field, pts)
    if kind == "torus":
        if s is None or field is None:
            raise ValueError("torus needs an arity and a field")
        units = [v for v in range(1, field.q)]
        pts = [ProjectivePoint(field, (1,) + tail)
               for tail in itertools.product(units, repeat=s - 1)]
        return PointSet(field, pts)
    if kind == "cartesian":
        if field is None or not sets:
            raise ValueError("cartesian space needs the component sets")
        comps = []
        for A in sets:
            vals = sorted({field.element(a).value for a in A})
            if not vals:
                raise ValueError("empty cartesian component")
            comps.append(vals)
        pts = []
        for tup in itertools.product(*comps):
            if any(tup):
                pts.append(normalize(field, tup))
        if not pts:
            raise ValueError("cartesian product contains only the zero vector")
        return PointSet(field, pts)
    raise ValueError("unknown space kind %r" % kind)


def point_ideal(P):
    """Vanishing ideal of one point: s-1 binomials t_i - a_i*t_k, k the pivot."""
    field = P.field
    s = P.arity
    k = P.pivot()
    gens = []
    for i in range(s):
        if i == k:
            continue
        ti = Monomial(tuple(1 if j == i else 0 for j in range(s)))
        tk = Monomial(tuple(1 if j == k else 0 for j in range(s)))
        gens.append(Polynomial(field, s, {ti: 1, tk: field.neg_i(P.coords[i])}))
    return Ideal(field, s, gens)


def vanishing_ideal_points(X, order=None):
    """I(X) as the intersection of the point ideals, reduced GB attached."""
    if order is None:
        order = GrevLex(X.arity)
    ideal = point_ideal(X.points[0])
    for P in X.points[1:]:
        ideal = intersect_ideals(ideal, point_ideal(P))
    gb = buchberger(ideal, order)
    result = Ideal(X.field, X.arity, list(gb.basis))
    result._gb_cache[order.cache_token()] = gb
    data = dim_degree(gb.initial_ideal())
    if data.dim != 1 or data.degree != len(X):
        raise AssertionError("vanishing ideal sanity check failed")  # cannot happen
    return result


class ParameterizedSpec:
    """Projective set parameterized by monomials y^{v_1}, ..., y^{v_s}."""

    __slots__ = ("field", "exponents", "n_params", "relatively_prime")

    def __init__(self, field, exponents):
        exps = tuple(tuple(int(a) for a in v) for v in exponents)
        if len(exps) < 2:
            raise ValueError("parameterization needs at least two monomials")
        n = len(exps[0])
        if any(len(v) != n for v in exps):
            raise ValueError("exponent vectors of mixed length")
        if any(all(a == 0 for a in v) for v in exps):
            raise ValueError("constant monomials cannot parameterize a point")
        if any(a < 0 for v in exps for a in v):
            raise ValueError("negative exponents")
        self.field = field
        self.exponents = exps
        self.n_params = n
        # gcd of the defining monomials is 1: needed for the footprint bound
        self.relatively_prime = all(min(v[j] for v in exps) == 0 for j in range(n))

    @property
    def arity(self):
        return len(self.exponents)


def _monomial_value(field, v, xs):
    out = 1
    for a, x in zip(v, xs):
        if a:
            if x == 0:
                return 0
            out = field.mul_i(out, field.pow_i(x, a))
    return out


def parameterized_points(spec):
    """Direct evaluation of the parameterization over all parameter tuples."""
    field = spec.field
    pts = []
    for xs in itertools.product(range(field.q), repeat=spec.n_params):
        coords = tuple(_monomial_value(field, v, xs) for v in spec.exponents)
        if any(coords):
            pts.append(normalize(field, coords))
    return PointSet(field, pts)


def vanishing_ideal_parameterized(spec, order=None, validate=True):
    """(X, I(X)) via elimination of the parameters and the scaling variable.

    In K[y_1..y_n, z, t_1..t_s], I(X) is the elimination ideal of
    ({t_i - y^{v_i} z} ∪ {y_j^q - y_j}) with the y's and z in the leading
    block.  With ``validate`` the result is checked against the
    point-intersection construction (identical reduced bases).
    """
    field = spec.field
    s = spec.arity
    n = spec.n_params
    if order is None:
        order = GrevLex(s)
    X = parameterized_points(spec)
    big = n + 1 + s
    gens = []
    for i, v in enumerate(spec.exponents):
        ti = Monomial((0,) * (n + 1 + i) + (1,) + (0,) * (s - i - 1))
        yz = Monomial(tuple(v) + (1,) + (0,) * s)
        gens.append(Polynomial(field, big, {ti: 1, yz: field.neg_i(1)}))
    for j in range(n):
        yq = Monomial(tuple(field.q if i == j else 0 for i in range(n)) + (0,) * (s + 1))
        y1 = Monomial(tuple(1 if i == j else 0 for i in range(n)) + (0,) * (s + 1))
        gens.append(Polynomial(field, big, {yq: 1, y1: field.neg_i(1)}))
    elim_order = BlockElim(big, n + 1, back=GrevLex(s))
    gb_big = buchberger(Ideal(field, big, gens), elim_order)
    kept = [_project_poly(g, n + 1, s) for g in gb_big
            if not any(any(m.exps[:n + 1]) for m in g.terms)]
    gb = buchberger(Ideal(field, s, kept), order)
    ideal = Ideal(field, s, list(gb.basis))
    ideal._gb_cache[order.cache_token()] = gb
    if validate and not ideal_equal(ideal, X.vanishing_ideal(order)):
        raise AssertionError("elimination and intersection constructions disagree")
    return X, ideal


def evaluate(f, P):
    """Value of a homogeneous polynomial at the canonical representative."""
    if not f.is_homogeneous():
        raise ValueError("evaluation on projective points needs homogeneous input")
    return f.field.element(f.eval_i(P.coords))


def count_zeros(X, f):
    """|V_X(f)| by direct evaluation at every point."""
    if not f:
        raise ValueError("count_zeros needs a nonzero polynomial")
    if not f.is_homogeneous():
        raise ValueError("count_zeros needs a homogeneous polynomial")
    n = 0
    for P in X.points:
        if f.eval_i(P.coords) == 0:
            n += 1
    return n


# ---------------------------------------------------------------------------
# file formats

def parse_points_text(field, text):
    """Points file: one point per line, comma-separated encodings, '#' comments."""
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            vals = [int(tok) for tok in line.split(",")]
        except ValueError as exc:
            raise ParseError("line %d: %s" % (lineno, exc)) from None
        if any(not 0 <= v < field.q for v in vals):
            raise ParseError("line %d: encoding out of range for %r" % (lineno, field))
        pts.append(normalize(field, vals))
    if not pts:
        raise ParseError("no points in input")
    return PointSet(field, pts)


_YMONO = re.compile(r"\s*y(\d+)(?:\s*\^\s*(\d+))?\s*")


def parse_parameterized_text(field, text):
    """Spec file: one monomial in y-variables per line, e.g. ``y1*y2``."""
    raw = []
    max_idx = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        exps = {}
        for part in line.split("*"):
            mt = _YMONO.fullmatch(part)
            if not mt:
                raise ParseError("line %d: cannot parse monomial factor %r"
                                 % (lineno, part))
            idx = int(mt.group(1))
            e = int(mt.group(2)) if mt.group(2) else 1
            if idx < 1:
                raise ParseError("line %d: variables are numbered from y1" % lineno)
            exps[idx] = exps.get(idx, 0) + e
            max_idx = max(max_idx, idx)
        raw.append(exps)
    if not raw:
        raise ParseError("no monomials in input")
    vectors = [tuple(exps.get(i, 0) for i in range(1, max_idx + 1)) for exps in raw]
    return ParameterizedSpec(field, vectors)
