"""Projective nested cartesian sets: closed forms and exhaustive oracles.

For non-decreasing sizes d_1 <= ... <= d_s (d_1 >= 2) the monomial ideal L
generated by all t_i*t_j^{d_j} with i < j is the lex initial ideal of the
vanishing ideal of a nested cartesian set (t_1 the least variable).  This
module carries the combinatorial side: the degree of S/(L, t^a) in closed
form, the (k, ell) decomposition behind the conjectured minimum distance,
zero-count upper bounds, and the product inequalities used to prove them,
all cross-checkable against the Hilbert engine and the point-set machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .gf import subfield_elements
from .hilbert import MonomialIdeal, dim_degree
from .mpoly import BudgetExceededError, Monomial, Polynomial
from .points import PointSet, enumerate_space
from .codes import candidate_count, projective_candidates

DEFAULT_BUDGET = 20_000_000


class CartesianSpec:
    """Component sets A_1..A_s of a projective cartesian configuration.

    Construction accepts arbitrary nonempty subsets; the nested conditions
    are checked separately by :func:`validate_nested`, and only the closed
    forms require them.
    """

    __slots__ = ("field", "sets")

    def __init__(self, field, sets):
        comps = []
        for A in sets:
            vals = sorted({field.element(a).value for a in A})
            if not vals:
                raise ValueError("empty cartesian component")
            comps.append(tuple(vals))
        if len(comps) < 2:
            raise ValueError("a cartesian configuration needs s >= 2 components")
        self.field = field
        self.sets = tuple(comps)

    @property
    def arity(self):
        return len(self.sets)

    @property
    def sizes(self):
        return tuple(len(A) for A in self.sets)

    def points(self):
        return enumerate_space("cartesian", field=self.field, sets=self.sets)

    def __repr__(self):
        return "CartesianSpec(sizes=%r over %r)" % (list(self.sizes), self.field)


@dataclass(frozen=True)
class Violation:
    condition: str  # "contains-0-1" | "ratio-closure" | "size-order"
    detail: tuple


@dataclass(frozen=True)
class NestedReport:
    violations: tuple

    @property
    def ok(self):
        return not self.violations


def validate_nested(spec):
    """Check the three nested-cartesian conditions, reporting every violation."""
    field = spec.field
    out = []
    for i, A in enumerate(spec.sets, 1):
        if 0 not in A or 1 not in A:
            out.append(Violation("contains-0-1", (i,)))
    for i in range(len(spec.sets)):
        for j in range(i + 1, len(spec.sets)):
            Aj = set(spec.sets[j])
            for a in spec.sets[j]:
                for b in spec.sets[i]:
                    if b == 0:
                        continue
                    if field.div_i(a, b) not in Aj:
                        out.append(Violation("ratio-closure", (i + 1, j + 1, a, b)))
    sizes = spec.sizes
    if sizes[0] < 2 or any(sizes[k] > sizes[k + 1] for k in range(len(sizes) - 1)):
        out.append(Violation("size-order", sizes))
    return NestedReport(tuple(out))


def is_subfield_chain(spec):
    """True when the configuration is a chain of subfields (the proven case)."""
    if not validate_nested(spec).ok:
        return False
    field = spec.field
    for A in spec.sets:
        matched = False
        for ddeg in range(1, field.e + 1):
            if field.e % ddeg:
                continue
            if len(A) == field.p ** ddeg:
                sub = {x.value for x in subfield_elements(field, ddeg)}
                if set(A) == sub:
                    matched = True
                break
        if not matched:
            return False
    for i in range(len(spec.sets) - 1):
        if not set(spec.sets[i]) <= set(spec.sets[i + 1]):
            return False
    return True


# ---------------------------------------------------------------------------
# the ideal L and its closed forms


def _check_sizes(ds):
    ds = tuple(int(d) for d in ds)
    if len(ds) < 2:
        raise ValueError("need s >= 2 sizes")
    if ds[0] < 2:
        raise ValueError("sizes must satisfy d_1 >= 2")
    if any(ds[k] > ds[k + 1] for k in range(len(ds) - 1)):
        raise ValueError("sizes must be non-decreasing")
    return ds


def closed_degree(ds):
    """deg(S/L) = 1 + sum_{i=2..s} d_i*...*d_s."""
    ds = _check_sizes(ds)
    s = len(ds)
    total = 1
    for i in range(1, s):  # 0-based index i corresponds to d_{i+1}
        prod = 1
        for j in range(i, s):
            prod *= ds[j]
        total += prod
    return total


def closed_reg(ds):
    """reg(S/I(X)) = 1 + sum_{i=2..s} (d_i - 1)."""
    ds = _check_sizes(ds)
    return 1 + sum(d - 1 for d in ds[1:])


@dataclass(frozen=True)
class LIdeal:
    exponents: tuple
    ideal: MonomialIdeal
    primary_components: tuple
    degree: int


def l_ideal(ds):
    """L = (t_i t_j^{d_j} : i < j) with its primary components and degree.

    The closed-form degree is cross-checked against the Hilbert engine and
    against additivity over the components
    q_i = (t_1,...,t_{i-1}, t_{i+1}^{d_{i+1}},...,t_s^{d_s}).
    """
    ds = _check_sizes(ds)
    s = len(ds)
    gens = []
    for i in range(s):
        for j in range(i + 1, s):
            exps = [0] * s
            exps[i] = 1
            exps[j] = ds[j]
            gens.append(Monomial(exps))
    M = MonomialIdeal.from_monomials(s, gens)
    components = []
    for i in range(s):
        comp = []
        for j in range(s):
            if j < i:
                exps = [0] * s
                exps[j] = 1
                comp.append(Monomial(exps))
            elif j > i:
                exps = [0] * s
                exps[j] = ds[j]
                comp.append(Monomial(exps))
        components.append(MonomialIdeal.from_monomials(s, comp))
    degree = closed_degree(ds)
    engine = dim_degree(M)
    additive = sum(dim_degree(c).degree for c in components)
    if engine.degree != degree or engine.dim != 1 or additive != degree:
        raise AssertionError("degree closed form disagrees with the engine")
    return LIdeal(exponents=ds, ideal=M, primary_components=tuple(components),
                  degree=degree)


def _standard_split(ds, a):
    """Validate t^a standard for L; return the 0-based index of the first
    nonzero exponent."""
    ds = _check_sizes(ds)
    a = tuple(int(x) for x in a)
    if len(a) != len(ds):
        raise ValueError("exponent vector length mismatch")
    if any(x < 0 for x in a):
        raise ValueError("negative exponents")
    r = next((i for i, x in enumerate(a) if x), None)
    if r is None:
        raise ValueError("the monomial 1 is not in the admissible range")
    for i in range(r + 1, len(ds)):
        if a[i] > ds[i] - 1:
            raise ValueError("t^a is not a standard monomial of L")
    return r


def deg_l_plus_monomial(ds, a):
    """deg S/(L, t^a) for a standard monomial t^a, by the four-case closed form."""
    ds = _check_sizes(ds)
    r = _standard_split(ds, a)
    s = len(ds)
    deg = closed_degree(ds)

    def tail_prod(i0):  # prod_{j=i0..s-1} (d_j - a_j), 0-based, empty = 1
        prod = 1
        for j in range(i0, s):
            prod *= ds[j] - a[j]
        return prod

    if r == s - 1:
        if a[r] <= ds[r]:
            return deg - sum(tail_prod(i) for i in range(1, s)) - 1
        return deg - 1
    if a[r] <= ds[r]:
        return deg - sum(tail_prod(i) for i in range(1, r + 2))
    return deg - tail_prod(r + 1)


def zeros_upper_bound(ds, a):
    """Upper bound for |V_X(f)| when in(f) = t^a: the two-case closed form
    deg - sum_{i=2..r+1} (d_i-a_i)...(d_s-a_s)      if a_r <= d_r
    deg - (d_{r+1}-a_{r+1})...(d_s-a_s)             if a_r >= d_r + 1
    with the empty-product convention (d_i-a_i)...(d_s-a_s) = 1 for i > s."""
    ds = _check_sizes(ds)
    r = _standard_split(ds, a)
    s = len(ds)
    deg = closed_degree(ds)

    def tail_prod(i0):
        prod = 1
        for j in range(i0, s):
            prod *= ds[j] - a[j]
        return prod

    if a[r] <= ds[r]:
        return deg - sum(tail_prod(i) for i in range(1, r + 2))
    return deg - tail_prod(r + 1)


@dataclass(frozen=True)
class KEllDecomposition:
    k: int
    ell: int


def k_ell_split(ds, d):
    """The unique (k, ell) with d = sum_{i=2..k+1}(d_i - 1) + ell,
    1 <= ell <= d_{k+2} - 1, 0 <= k <= s - 2; None outside 1 <= d <= reg - 1."""
    ds = _check_sizes(ds)
    s = len(ds)
    if d < 1 or d > sum(x - 1 for x in ds[1:]):
        return None
    base = 0
    for k in range(s - 1):
        width = ds[k + 1] - 1  # d_{k+2} in 1-based labels
        if d <= base + width:
            return KEllDecomposition(k=k, ell=d - base)
        base += width
    raise AssertionError("decomposition search fell through")  # cannot happen


def conjecture_delta(ds, d):
    """(decomposition, conjectured minimum distance) for the cartesian code.

    Returns (None, 1) in the saturated range d >= 1 + sum (d_i - 1).
    """
    ds = _check_sizes(ds)
    if d < 1:
        raise ValueError("degree must be >= 1")
    split = k_ell_split(ds, d)
    if split is None:
        return None, 1
    s = len(ds)
    value = ds[split.k + 1] - split.ell + 1  # d_{k+2} - ell + 1
    for j in range(split.k + 2, s):  # d_{k+3}*...*d_s
        value *= ds[j]
    return split, value


def t1_slice_closed_form(ds, d):
    """max |V_X(f)| over t_1-divisible forms: deg - (d_{k+2}-ell+1)d_{k+3}...d_s."""
    split, value = conjecture_delta(ds, d)
    if split is None:
        raise ValueError("degree outside the range 1..sum(d_i - 1)")
    return closed_degree(ds) - value


def ineq_oracle(es, bs, k, b0=None):
    """Instance check of the product inequalities.

    Without b0:
      prod(e_i - b_i) >= (sum_{i<=k}(e_i - b_i) - (k-1) - sum_{i>k} b_i) * e_{k+1}...e_m
      for 1 <= k <= m.
    With b0 >= 1 the sum runs to k+1, b0 is subtracted and the product starts
    at e_{k+2}, for 0 <= k <= m-1.
    """
    es = tuple(int(e) for e in es)
    bs = tuple(int(b) for b in bs)
    m = len(es)
    if len(bs) != m or m == 0:
        raise ValueError("e and b must have equal positive length")
    if any(es[i] > es[i + 1] for i in range(m - 1)) or es[0] < 1:
        raise ValueError("e must satisfy 1 <= e_1 <= ... <= e_m")
    if any(not 0 <= bs[i] <= es[i] - 1 for i in range(m)):
        raise ValueError("b must satisfy 0 <= b_i <= e_i - 1")
    lhs = 1
    for e, b in zip(es, bs):
        lhs *= e - b
    if b0 is None:
        if not 1 <= k <= m:
            raise ValueError("k out of range 1..m")
        coeff = sum(es[i] - bs[i] for i in range(k)) - (k - 1) - sum(bs[k:])
        prod = 1
        for e in es[k:]:
            prod *= e
        return lhs >= coeff * prod
    if b0 < 1:
        raise ValueError("b0 must be >= 1")
    if not 0 <= k <= m - 1:
        raise ValueError("k out of range 0..m-1")
    coeff = (sum(es[i] - bs[i] for i in range(k + 1)) - (k - 1) - b0
             - sum(bs[k + 2:]))
    prod = 1
    for e in es[k + 2:]:
        prod *= e
    return lhs >= coeff * prod


def max_zeros_t1_slice(spec, d, budget=DEFAULT_BUDGET):
    """Exact max |V_X(f)| over nonzero forms f of degree d in the span of the
    t_1-divisible monomials, f not vanishing identically on X."""
    ds = _check_sizes(spec.sizes)
    if not 1 <= d <= sum(x - 1 for x in ds[1:]):
        raise ValueError("degree outside the range 1..sum(d_i - 1)")
    field = spec.field
    s = spec.arity
    monos = [Monomial((a0 + 1,) + rest)
             for a0 in range(d)
             for rest in _compositions(d - 1 - a0, s - 1)]
    monos.sort(key=lambda m: m.exps)
    n = len(monos)
    if candidate_count(field.q, n) > budget:
        raise BudgetExceededError("%d candidates exceed the budget"
                                  % candidate_count(field.q, n))
    X = spec.points()
    coords = [P.coords for P in X.points]
    m = len(X)
    best = 0
    for _, coeffs in projective_candidates(field.q, n, 0):
        f = Polynomial._raw(field, s, {mo: c for mo, c in zip(monos, coeffs) if c})
        z = sum(1 for c in coords if f.eval_i(c) == 0)
        if z == m:
            continue  # f vanishes identically: f lies in I(X)
        if z > best:
            best = z
            if best == m - 1:
                break
    return best


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# file format

def parse_sets_text(field, text):
    """Sets file: one line per component, comma-separated encodings."""
    from .mpoly import ParseError
    comps = []
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
        comps.append(vals)
    if len(comps) < 2:
        raise ParseError("a cartesian spec needs at least two component lines")
    return CartesianSpec(field, comps)
