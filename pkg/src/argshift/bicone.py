"""The nilpotent bicone: pairs whose whole span is nilpotent.

The defining ideal lives in doubled variables (x-block then y-block) and is
generated by every bigraded component of every invariant generator -- one
more component per generator than the shift family uses.  This module builds
that ideal, decides membership, runs the dimension / fiber checks, and
implements the exact pencil-regularity certificate: a line misses the
singular locus exactly when the maximal minors of the invariant gradient
matrix, restricted to the line, have no common nonzero root, which is a gcd
computation for binary forms over Q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .exactpoly import Poly
from .groebner import DimensionReport, MonomialOrder, jacobian_rank, regular_sequence_verdict
from .invariants import InvariantFamily
from .liealg import LieAlgebraData, dual_of, index_of, is_regular_point
from .shift import bigraded_components, mf_generators


@dataclass
class BiconeIdeal:
    algebra: LieAlgebraData
    generators: list[tuple[int, int, Poly]]  # (i, j) with j = 0..d_i, in 2n vars

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    def polynomials(self) -> list[Poly]:
        return [p for _, _, p in self.generators]


def counting_identity(L: LieAlgebraData, fam: InvariantFamily) -> dict:
    """Exact integer bookkeeping behind the bicone dimension formula.

    With n = 2b - ell and sum(d_i) = b we get sum(d_i + 1) = b + ell and
    2n - (b + ell) = 3(b - ell); all three equalities are asserted.
    """
    n = L.dim
    ell = index_of(L).index
    b = (n + ell) // 2
    if 2 * b != n + ell:
        raise AssertionError("dim + index is odd (structure matrix rank bug)")
    degree_sum = sum(fam.degrees)
    count = sum(d + 1 for d in fam.degrees)
    ok = degree_sum == b and count == b + ell and 2 * n - count == 3 * (b - ell)
    if not ok:
        raise AssertionError("bicone counting identity fails: family is not a b-degree family")
    return {
        "dim": n,
        "index": ell,
        "b": b,
        "degree_sum": degree_sum,
        "generator_count": count,
        "three_b_minus_ell": 3 * (b - ell),
        "identity_ok": True,
    }


def bicone_generators(L: LieAlgebraData, fam: InvariantFamily) -> BiconeIdeal:
    """All bigraded components p_i^{(j)}, j = 0..d_i, in doubled variables."""
    gens = []
    for i, p in enumerate(fam.generators):
        for j, comp in enumerate(bigraded_components(p)):
            gens.append((i, j, comp))
    return BiconeIdeal(algebra=L, generators=gens)


def bicone_membership(L: LieAlgebraData, fam: InvariantFamily, x, y) -> bool:
    """True iff span(x, y) lies in the nilpotent cone (x, y elements of g)."""
    point = dual_of(L, [Fraction(v) for v in x]) + dual_of(L, [Fraction(v) for v in y])
    for i, p in enumerate(fam.generators):
        for comp in bigraded_components(p):
            if comp.evaluate(point) != 0:
                return False
    return True


def bicone_dimension_check(
    L: LieAlgebraData,
    fam: InvariantFamily,
    order: MonomialOrder | None = None,
    timeout_secs: float | None = None,
    cache_dir: str | None = None,
) -> DimensionReport:
    """Full bicone: verdict true iff its dimension is 3(b - ell) in 2n vars."""
    identity = counting_identity(L, fam)
    ideal = bicone_generators(L, fam)
    report = regular_sequence_verdict(
        ideal.polynomials(),
        2 * L.dim,
        order=order,
        timeout_secs=timeout_secs,
        cache_dir=cache_dir,
    )
    report.extra["counting_identity"] = identity
    return report


def bicone_fiber_check(
    L: LieAlgebraData,
    fam: InvariantFamily,
    e,
    order: MonomialOrder | None = None,
    timeout_secs: float | None = None,
    cache_dir: str | None = None,
) -> DimensionReport:
    """Fiber of the first projection over a regular nilpotent element e.

    Substitutes the x-block at e and measures the resulting ideal in the
    y-block; verdict true iff the dimension equals b - ell.  The report also
    runs the plain shift-family verdict at xi = e and records whether the two
    dimensions agree (they must: the fiber generators are scalar multiples of
    the shift family).
    """
    e = [Fraction(v) for v in e]
    xi = dual_of(L, e)
    if not is_regular_point(L, xi):
        raise ValueError("base point is not regular")
    zero = [Fraction(0)] * L.dim
    if not bicone_membership(L, fam, e, zero):
        raise ValueError("base point is not nilpotent")
    identity = counting_identity(L, fam)
    b, ell = identity["b"], identity["index"]
    n = L.dim
    ideal = bicone_generators(L, fam)
    images = [Poly.constant(n, v) for v in xi] + [Poly.variable(n, k) for k in range(n)]
    substituted = [(i, j, p.substitute(images)) for i, j, p in ideal.generators]
    nonzero = [p for _, _, p in substituted if not p.is_zero()]
    dropped = [(i, j) for i, j, p in substituted if p.is_zero()]
    gb_report = regular_sequence_verdict(
        nonzero, n, order=order, timeout_secs=timeout_secs, cache_dir=cache_dir
    )
    fiber_dim = gb_report.ideal_dimension
    mf = mf_generators(L, fam, xi)
    mf_report = regular_sequence_verdict(
        mf.polynomials(), n, order=order, timeout_secs=timeout_secs, cache_dir=cache_dir
    )
    status = gb_report.status
    verdict = None if fiber_dim is None else (fiber_dim == b - ell)
    report = DimensionReport(
        arity=n,
        generator_count=len(nonzero),
        ideal_dimension=fiber_dim,
        expected_dimension=b - ell,
        verdict=verdict,
        status=status,
        zero_generators=dropped,
        order=gb_report.order,
        input_hash=gb_report.input_hash,
    )
    report.extra["counting_identity"] = identity
    report.extra["shift_family_dimension"] = mf_report.ideal_dimension
    report.extra["matches_shift_family"] = (
        fiber_dim is not None and fiber_dim == mf_report.ideal_dimension
    )
    return report


# ---------------------------------------------------------------------------
# pencil regularity: the exact gcd certificate
# ---------------------------------------------------------------------------


def _binary_form(p: Poly, a: list[Fraction], b: list[Fraction], degree: int) -> list[Fraction]:
    """Coefficients c_0..c_D of p(s*a + t*b) = sum c_j s^(D-j) t^j.

    p must be homogeneous of the given degree (or zero).
    """
    out = [Fraction(0)] * (degree + 1)
    for mono, coeff in p.terms.items():
        cur = [coeff]
        for r, e in enumerate(mono):
            for _ in range(e):
                nxt = [Fraction(0)] * (len(cur) + 1)
                for idx, c in enumerate(cur):
                    if c:
                        nxt[idx] += c * a[r]
                        nxt[idx + 1] += c * b[r]
                cur = nxt
        for idx, c in enumerate(cur):
            out[idx] += c
    return out


def _form_mul(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, c in enumerate(g):
                if c:
                    out[i + j] += a * c
    return out


def _form_det(matrix: list[list[list[Fraction]]]) -> list[Fraction]:
    """Determinant of a square matrix of binary forms (Leibniz expansion)."""
    size = len(matrix)
    deg = sum(len(matrix[i][i]) - 1 for i in range(size))
    total = [Fraction(0)] * (deg + 1)
    for perm in itertools.permutations(range(size)):
        sign = 1
        seen = list(perm)
        for i in range(size):
            for j in range(i + 1, size):
                if seen[i] > seen[j]:
                    sign = -sign
        term = [Fraction(sign)]
        for i in range(size):
            term = _form_mul(term, matrix[i][perm[i]])
        for idx, c in enumerate(term):
            total[idx] += c
    return total


def _poly_gcd_univariate(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    """Monic gcd of univariate rational polynomials given as coefficient lists
    (index = degree)."""

    def trim(h):
        while h and h[-1] == 0:
            h.pop()
        return h

    f, g = trim(list(f)), trim(list(g))
    while g:
        # remainder of f mod g
        f = list(f)
        while len(f) >= len(g) and f:
            factor = f[-1] / g[-1]
            shift_by = len(f) - len(g)
            for i, c in enumerate(g):
                f[shift_by + i] -= factor * c
            trim(f)
        f, g = g, f
    f = trim(f)
    if f:
        lead = f[-1]
        f = [c / lead for c in f]
    return f


def pencil_regularity(L: LieAlgebraData, fam: InvariantFamily, x, y) -> bool:
    """True iff span(x, y) is 2-dimensional and all its nonzero points are
    regular.

    Sampling cannot certify this (the bad locus on the projective line is
    finite), so the test is exact: restrict the gradients of the invariant
    generators to the line s*x + t*y, form all maximal minors as binary forms
    in (s, t), and check they have no common nonzero root.  By the
    differential regularity criterion, a common root is precisely a
    non-regular point on the line.
    """
    x = [Fraction(v) for v in x]
    y = [Fraction(v) for v in y]
    if linalg.rank([x, y]) != 2:
        return False
    a = dual_of(L, x)
    b = dual_of(L, y)
    ell = len(fam.generators)
    n = L.dim
    rows = []
    for p, d in zip(fam.generators, fam.degrees):
        rows.append([_binary_form(p.diff(k), a, b, d - 1) for k in range(n)])
    minors = []
    for cols in itertools.combinations(range(n), ell):
        det = _form_det([[rows[i][c] for c in cols] for i in range(ell)])
        if any(det):
            minors.append(det)
    if not minors:
        return False
    # root at [0:1] (the point y): every minor's top coefficient vanishes
    if all(m[-1] == 0 for m in minors):
        return False
    gcd_poly = minors[0]
    for m in minors[1:]:
        gcd_poly = _poly_gcd_univariate(gcd_poly, m)
        if len(gcd_poly) == 1:
            return True
    return len(gcd_poly) == 1


@dataclass
class SmoothnessReport:
    sample_count: int
    disagreements: list[dict] = field(default_factory=list)
    results: list[dict] = field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return not self.disagreements

    def to_json_dict(self) -> dict:
        return {
            "sample_count": self.sample_count,
            "all_agree": self.all_agree,
            "results": self.results,
        }


def smoothness_crosscheck(L: LieAlgebraData, fam: InvariantFamily, samples) -> SmoothnessReport:
    """On bicone points, the pencil certificate must match the full Jacobian.

    For each sample pair (x, y) in the bicone, compares pencil_regularity
    with "the differentials of all bicone generators at (x, y) are linearly
    independent"; any disagreement is listed (the theory says there are
    none).
    """
    ideal = bicone_generators(L, fam)
    full_count = ideal.generator_count
    gens = ideal.polynomials()
    results = []
    disagreements = []
    for x, y in samples:
        if not bicone_membership(L, fam, x, y):
            raise ValueError("sample pair is not in the bicone")
        point = dual_of(L, [Fraction(v) for v in x]) + dual_of(L, [Fraction(v) for v in y])
        omega = pencil_regularity(L, fam, x, y)
        rank = jacobian_rank(gens, point)
        smooth = rank == full_count
        entry = {
            "x": [str(Fraction(v)) for v in x],
            "y": [str(Fraction(v)) for v in y],
            "pencil_regular": omega,
            "jacobian_rank": rank,
            "jacobian_full": smooth,
            "agree": omega == smooth,
        }
        results.append(entry)
        if omega != smooth:
            disagreements.append(entry)
    return SmoothnessReport(
        sample_count=len(results), disagreements=disagreements, results=results
    )
