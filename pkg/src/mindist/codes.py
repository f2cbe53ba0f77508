"""Reed-Muller-type evaluation codes and minimum distance computations.

Three independent routes to the minimum distance are provided: exhaustive
codeword weight search on the generator matrix, zero counting over standard
polynomials, and the degree formula
delta_I(d) = deg(S/I) - max deg(S/(I,f)) over degree-d zero-divisors f,
plus the colon-ideal variant delta_I(d) = min deg(S/(I:f)) and the cheap
footprint lower bound fp_I(d) over standard monomials.

Candidate polynomials are enumerated deterministically: coefficient vectors
indexed by the canonical footprint-slice order, odometer with index 0
fastest, restricted to projective representatives (highest-index nonzero
coefficient equal to 1); the first maximizer wins ties.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .gf import field_make
from .hilbert import (dim_degree, footprint_slice, hilbert_data_from_numerator,
                      hilbert_numerator, regularity_points)
from .mpoly import (BudgetExceededError, GroebnerBasis, Ideal, Polynomial,
                    buchberger, is_zero_divisor)

DEFAULT_BUDGET = 20_000_000


@dataclass
class DistanceReport:
    d: int
    length: int
    dimension: int
    delta: int | None
    fp: int | None
    singleton_upper: int
    witness: Polynomial | None
    method: str
    fd_empty: bool = False


class EvaluationCode:
    """Generator matrix of C_X(d): standard monomials evaluated at the points.

    With canonical representatives the per-point normalizers can be taken as
    the pivot coordinate raised to d, which evaluates to 1, so matrix entries
    are plain monomial values.
    """

    __slots__ = ("X", "d", "basis_monomials", "matrix", "field")

    def __init__(self, X, d, basis_monomials, matrix):
        self.X = X
        self.d = d
        self.basis_monomials = tuple(basis_monomials)
        self.matrix = matrix
        self.field = X.field

    @property
    def length(self):
        return len(self.X)

    @property
    def dimension(self):
        return len(self.basis_monomials)

    def __repr__(self):
        return "EvaluationCode(d=%d, %dx%d over %r)" % (
            self.d, self.dimension, self.length, self.field)


def build_code(X, d, order=None):
    """Evaluation code of degree d on X; rows are standard-monomial values."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    field = X.field
    gb = X.vanishing_ideal(order).groebner(order)
    basis = footprint_slice(gb.initial_ideal(), d)
    rows = []
    for m in basis:
        row = []
        for P in X.points:
            v = 1
            for x, a in zip(P.coords, m.exps):
                if a:
                    if x == 0:
                        v = 0
                        break
                    v = field.mul_i(v, field.pow_i(x, a))
            row.append(v)
        rows.append(row)
    matrix = np.array(rows, dtype=np.int64) if rows else np.zeros((0, len(X)), dtype=np.int64)
    return EvaluationCode(X, d, basis, matrix)


def field_matrix_rank(field, rows):
    """Rank over GF(q) by Gaussian elimination on int-encoded entries."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = field.inv_i(mat[rank][col])
        mat[rank] = [field.mul_i(inv, v) for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                c = mat[r][col]
                mat[r] = [field.sub_i(v, field.mul_i(c, w))
                          for v, w in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


# ---------------------------------------------------------------------------
# candidate enumeration


def candidate_count(q, n):
    """Number of projective coefficient classes: (q^n - 1)/(q - 1)."""
    return (q ** n - 1) // (q - 1)


def check_budget(q, n, budget):
    total = candidate_count(q, n)
    if total > budget:
        raise BudgetExceededError(
            "%d candidates exceed the budget of %d" % (total, budget))
    return total


def _decode_candidate(q, top, counter):
    coeffs = [0] * top + [1]
    m = counter
    for i in range(top):
        coeffs[i] = m % q
        m //= q
    return coeffs


def projective_candidates(q, n, start=0, stop=None):
    """Yield (index, coeffs) for candidate indices in [start, stop).

    Candidate i has some top position with coefficient 1, zeros above it and
    an odometer (index 0 fastest) below; the global index is the odometer
    rank, which is ascending in the integer value of the coefficient vector.
    """
    if stop is None:
        stop = candidate_count(q, n)
    idx = 0
    for top in range(n):
        block = q ** top
        if idx + block <= start:
            idx += block
            continue
        first = max(start - idx, 0)
        for counter in range(first, block):
            gidx = idx + counter
            if gidx >= stop:
                return
            coeffs = _decode_candidate(q, top, counter)
            coeffs.extend([0] * (n - top - 1))
            yield gidx, coeffs
        idx += block


def _candidate_polynomial(field, basis, coeffs):
    return Polynomial._raw(field, basis[0].arity,
                           {m: c for m, c in zip(basis, coeffs) if c})


# ---------------------------------------------------------------------------
# brute force over the generator matrix


def _weight_scan(field, rows, q, n, m, start, stop):
    """Best (weight, index, coeffs) over a candidate index range."""
    best_w = None
    best = None
    add = field.add_i
    mul = field.mul_i
    for gidx, coeffs in projective_candidates(q, n, start, stop):
        word = [0] * m
        for i, c in enumerate(coeffs):
            if c:
                row = rows[i]
                if c == 1:
                    for j in range(m):
                        if row[j]:
                            word[j] = add(word[j], row[j])
                else:
                    for j in range(m):
                        if row[j]:
                            word[j] = add(word[j], mul(c, row[j]))
        w = sum(1 for v in word if v)
        if best_w is None or w < best_w:
            best_w = w
            best = (w, gidx, tuple(coeffs))
            if w == 1:
                break
    return best


def _bruteforce_worker(args):
    p, e, rows, q, n, m, start, stop = args
    field = field_make(p, e)
    return _weight_scan(field, rows, q, n, m, start, stop)


def min_distance_bruteforce(code, budget=DEFAULT_BUDGET, jobs=1):
    """Exact minimum Hamming weight over all nonzero codewords."""
    field = code.field
    q = field.q
    n = code.dimension
    m = code.length
    if n == 0:
        raise ValueError("the zero code has no minimum distance")
    total = check_budget(q, n, budget)
    rows = [tuple(int(v) for v in r) for r in code.matrix]
    if jobs > 1 and total > 4096:
        chunks = []
        step = -(-total // jobs)
        for k in range(jobs):
            lo, hi = k * step, min((k + 1) * step, total)
            if lo < hi:
                chunks.append((field.p, field.e, rows, q, n, m, lo, hi))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for r in pool.map(_bruteforce_worker, chunks) if r]
        best = min(results, key=lambda t: (t[0], t[1]))
    else:
        best = _weight_scan(field, rows, q, n, m, 0, total)
    w, _, coeffs = best
    witness = _candidate_polynomial(field, list(code.basis_monomials), coeffs)
    return DistanceReport(d=code.d, length=m, dimension=n, delta=w, fp=None,
                          singleton_upper=m - n + 1, witness=witness,
                          method="bruteforce")


# ---------------------------------------------------------------------------
# zero counting over standard polynomials


def delta_via_zeros(X, d, order=None, budget=DEFAULT_BUDGET):
    """delta_X(d) = |X| - max |V_X(f)| over standard polynomials of degree d.

    The zero-divisor condition is realized by evaluation: f qualifies iff it
    vanishes somewhere on X (and, being a nonzero standard polynomial, it
    never vanishes everywhere).
    """
    if len(X) < 2:
        raise ValueError("delta_via_zeros needs at least two points")
    if d < 1:
        raise ValueError("delta_via_zeros needs degree >= 1")
    field = X.field
    gb = X.vanishing_ideal(order).groebner(order)
    basis = footprint_slice(gb.initial_ideal(), d)
    n = len(basis)
    m = len(X)
    check_budget(field.q, n, budget)
    coords = [P.coords for P in X.points]
    best_z = 0
    best = None
    for _, coeffs in projective_candidates(field.q, n, 0):
        f = _candidate_polynomial(field, basis, coeffs)
        z = sum(1 for c in coords if f.eval_i(c) == 0)
        if z > best_z:
            best_z = z
            best = f
            if z == m - 1:
                break
    if best is None:
        # no candidate vanishes anywhere: F_d is empty, paper convention applies
        return DistanceReport(d=d, length=m, dimension=n, delta=m, fp=None,
                              singleton_upper=m - n + 1, witness=None,
                              method="zeros", fd_empty=True)
    return DistanceReport(d=d, length=m, dimension=n, delta=m - best_z, fp=None,
                          singleton_upper=m - n + 1, witness=best,
                          method="zeros")


# ---------------------------------------------------------------------------
# degree formula for arbitrary graded ideals


def _require_graded(I):
    if not I.generators:
        raise ValueError("the zero ideal is not supported")
    if not I.is_homogeneous():
        raise ValueError("a graded ideal (homogeneous generators) is required")


def _regular_numerator(h_ideal, d):
    """Series numerator of S/(I,f) for a REGULAR degree-d form f: (1-t^d)*h_I.

    Multiplication by f on S/I is injective exactly when (I:f) = I, and the
    exact sequence 0 -> ((I:f)/I)[-d] -> (S/I)[-d] -> S/I -> S/(I,f) -> 0
    then forces the numerator of S/(I,f) to be (1-t^d)*h_I(t); any deviation
    certifies a zero-divisor.  This decides membership in F_d from data the
    degree computation needs anyway.
    """
    out = [0] * (len(h_ideal) + d)
    for i, c in enumerate(h_ideal):
        out[i] += c
        out[i + d] -= c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def delta_graded(I, d, order=None, budget=DEFAULT_BUDGET):
    """deg(S/I) - max deg(S/(I,f)) over degree-d zero-divisors f not in I.

    Returns deg(S/I) when no standard polynomial of degree d is a
    zero-divisor (the F_d = empty convention, including d = 0).
    """
    _require_graded(I)
    gb = I.groebner(order)
    data = dim_degree(gb.initial_ideal())
    deg = data.degree
    basis = footprint_slice(gb.initial_ideal(), d)
    n = len(basis)
    if n == 0 or d == 0:
        return deg
    field = I.field
    check_budget(field.q, n, budget)
    regular_h = _regular_numerator(data.numerator, d)
    cap = deg - 1 if data.dim == 0 else None
    best = None
    for _, coeffs in projective_candidates(field.q, n, 0):
        f = _candidate_polynomial(field, basis, coeffs)
        gbf = buchberger(list(gb.basis) + [f], gb.order,
                         seeded_prefix=len(gb.basis))
        h = tuple(hilbert_numerator(gbf.initial_ideal()))
        if h == regular_h:
            continue  # (I : f) = I, so f is not in F_d
        val = hilbert_data_from_numerator(h, I.arity).degree
        if best is None or val > best:
            best = val
            if cap is not None and best >= cap:
                break
    if best is None:
        return deg
    return deg - best


def delta_colon(I, d, order=None, budget=DEFAULT_BUDGET):
    """min deg(S/(I:f)) over degree-d standard polynomials (unmixed ideals).

    Agrees with delta_graded on unmixed inputs; unmixedness is the caller's
    responsibility.  Raises when m^d is contained in I (no candidates).
    """
    _require_graded(I)
    gb = I.groebner(order)
    basis = footprint_slice(gb.initial_ideal(), d)
    n = len(basis)
    if n == 0:
        raise ValueError("every degree-%d form lies in the ideal (m^d inside I)" % d)
    field = I.field
    check_budget(field.q, n, budget)
    from .mpoly import colon_ideal
    best = None
    for _, coeffs in projective_candidates(field.q, n, 0):
        f = _candidate_polynomial(field, basis, coeffs)
        quot = colon_ideal(I, f)
        val = dim_degree(quot.groebner().initial_ideal()).degree
        if best is None or val < best:
            best = val
    return best


def fp_bound(I, d, order=None):
    """Footprint bound: deg(S/I) - max deg(S/(in(I), t^a)) over the degree-d
    standard monomials t^a; may be negative.  deg(S/I) when the slice is empty.
    """
    _require_graded(I)
    gb = I.groebner(order)
    M = gb.initial_ideal()
    deg = dim_degree(M).degree
    slice_d = footprint_slice(M, d)
    if not slice_d:
        return deg
    worst = max(dim_degree(M.plus(m)).degree for m in slice_d)
    return deg - worst


def delta_upper_subset(I, d, order=None, budget=DEFAULT_BUDGET):
    """Upper bound delta'_I(d) >= delta_I(d) from {0,1}-coefficient standard
    polynomials only (2^n - 1 candidates)."""
    _require_graded(I)
    gb = I.groebner(order)
    data = dim_degree(gb.initial_ideal())
    deg = data.degree
    basis = footprint_slice(gb.initial_ideal(), d)
    n = len(basis)
    if n == 0 or d == 0:
        return deg
    if 2 ** n - 1 > budget:
        raise BudgetExceededError("%d candidates exceed the budget" % (2 ** n - 1))
    field = I.field
    regular_h = _regular_numerator(data.numerator, d)
    best = None
    for mask in range(1, 2 ** n):
        coeffs = [(mask >> i) & 1 for i in range(n)]
        f = _candidate_polynomial(field, basis, coeffs)
        gbf = buchberger(list(gb.basis) + [f], gb.order,
                         seeded_prefix=len(gb.basis))
        h = tuple(hilbert_numerator(gbf.initial_ideal()))
        if h == regular_h:
            continue
        val = hilbert_data_from_numerator(h, I.arity).degree
        if best is None or val > best:
            best = val
    if best is None:
        return deg
    return deg - best


# ---------------------------------------------------------------------------
# parameter tables


def params_table(X, d_max, order=None, method="auto", budget=DEFAULT_BUDGET,
                 jobs=1):
    """One DistanceReport per degree d = 1..d_max for the code family on X.

    method "auto" short-circuits rows with d >= reg(S/I(X)) to delta = 1 and
    otherwise runs the matrix brute force when it fits the budget; explicit
    methods always run their search and mark budget-exceeded rows "skipped".
    """
    if d_max < 1:
        raise ValueError("the table needs d_max >= 1")
    field = X.field
    ideal = X.vanishing_ideal(order)
    gb = ideal.groebner(order)
    M = gb.initial_ideal()
    m = len(X)
    reg = regularity_points(gb)
    rows = []
    for d in range(1, d_max + 1):
        h = len(footprint_slice(M, d))
        fp = fp_bound(ideal, d, order)
        singleton = m - h + 1
        if method == "fp":
            rows.append(DistanceReport(d=d, length=m, dimension=h, delta=None,
                                       fp=fp, singleton_upper=singleton,
                                       witness=None, method="fp"))
            continue
        if method == "auto" and (d >= reg and m >= 2):
            rows.append(DistanceReport(d=d, length=m, dimension=h, delta=1,
                                       fp=fp, singleton_upper=singleton,
                                       witness=None, method="regularity"))
            continue
        try:
            if method in ("auto", "brute"):
                rep = min_distance_bruteforce(build_code(X, d, order),
                                              budget=budget, jobs=jobs)
            elif method == "degree":
                rep = delta_via_zeros(X, d, order, budget=budget)
            elif method == "all":
                rep = min_distance_bruteforce(build_code(X, d, order),
                                              budget=budget, jobs=jobs)
                other = delta_via_zeros(X, d, order, budget=budget)
                if rep.delta != other.delta:
                    raise AssertionError(
                        "bruteforce and zero-count disagree at d=%d" % d)
                rep.method = "all"
            else:
                raise ValueError("unknown method %r" % method)
        except BudgetExceededError:
            rows.append(DistanceReport(d=d, length=m, dimension=h, delta=None,
                                       fp=fp, singleton_upper=singleton,
                                       witness=None, method="skipped"))
            continue
        rep.fp = fp
        rows.append(rep)
    return rows
