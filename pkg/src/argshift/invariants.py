"""Free homogeneous generators of the invariant ring for the classical types.

For gl_n the generators are the symbolic power traces tr(X), .., tr(X^n) of
the generic matrix X attached to a dual point; for sl_n the trace is dropped;
for odd so and for sp only the even power traces survive.  The generic matrix
is built through the inverse of the invariant form, which is exactly what
makes the resulting polynomials Poisson-central in our coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import liealg, poisson
from .exactpoly import Poly
from .liealg import LieAlgebraData


@dataclass
class InvariantFamily:
    algebra: LieAlgebraData
    generators: list[Poly]
    degrees: list[int]

    def to_json_dict(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "generators": [str(p) for p in self.generators],
        }


def generic_dual_matrix(L: LieAlgebraData) -> list[list[Poly]]:
    """Matrix (in the defining representation) of a generic dual point.

    Entries are linear polynomials in the dual coordinates: the point with
    coordinates x corresponds to the element form^{-1}.x, and the matrix is
    the sum of defining matrices weighted by those linear forms.
    """
    if L.defining is None:
        raise liealg.LieAlgebraError(
            "algebra lacks defining matrices; rebuild it with build_classical"
        )
    n = L.dim
    forminv = L.form_inverse()
    lin = [Poly.linear_form(forminv[i]) for i in range(n)]
    m = len(L.defining[0])
    X = [[Poly.zero(n) for _ in range(m)] for _ in range(m)]
    for i in range(n):
        mat = L.defining[i]
        li = lin[i]
        for a in range(m):
            for b in range(m):
                if mat[a][b]:
                    X[a][b] = X[a][b] + mat[a][b] * li
    return X


def _power_traces(X: list[list[Poly]], powers: list[int]) -> list[Poly]:
    m = len(X)
    arity = X[0][0].arity
    traces = {}
    cur = X
    for k in range(1, max(powers) + 1):
        if k > 1:
            nxt = [[Poly.zero(arity) for _ in range(m)] for _ in range(m)]
            for a in range(m):
                for b in range(m):
                    acc = Poly.zero(arity)
                    for c in range(m):
                        if cur[a][c] and X[c][b]:
                            acc = acc + cur[a][c] * X[c][b]
                    nxt[a][b] = acc
            cur = nxt
        if k in powers:
            tr = Poly.zero(arity)
            for a in range(m):
                tr = tr + cur[a][a]
            traces[k] = tr
    return [traces[k] for k in powers]


def invariant_generators(L: LieAlgebraData) -> InvariantFamily:
    """Power-trace generators, ordered by increasing degree.

    gl_n: tr(X^i) for i = 1..n; sl_n: i = 2..n; so_{2m+1} and sp_{2m}:
    tr(X^{2i}) for i = 1..m.  Even so is not supported (its generator set
    needs the Pfaffian).
    """
    kind = L.meta.get("type")
    size = L.meta.get("size")
    if kind == "gl":
        powers = list(range(1, size + 1))
    elif kind == "sl":
        powers = list(range(2, size + 1))
    elif kind == "so":
        if size % 2 == 0:
            raise liealg.LieAlgebraError("even so is not supported (needs the Pfaffian)")
        powers = [2 * i for i in range(1, size // 2 + 1)]
    elif kind == "sp":
        powers = [2 * i for i in range(1, size // 2 + 1)]
    else:
        raise liealg.LieAlgebraError(f"no invariant generators for type {kind!r}")
    X = generic_dual_matrix(L)
    gens = _power_traces(X, powers)
    for p, d in zip(gens, powers):
        if p.is_zero() or not p.is_homogeneous() or p.total_degree() != d:
            raise liealg.LieAlgebraError(f"power trace of degree {d} is malformed (bug)")
    if len(gens) != L.meta.get("rank"):
        raise liealg.LieAlgebraError("generator count does not match the rank (bug)")
    return InvariantFamily(algebra=L, generators=gens, degrees=powers)


def verify_invariance(L: LieAlgebraData, p: Poly) -> bool:
    """True iff {p, x_k} = 0 exactly for every coordinate function x_k."""
    for k in range(L.dim):
        xk = Poly.variable(L.dim, k)
        if not poisson.poisson_bracket(L, p, xk).is_zero():
            return False
    return True


def gradient_rank_at(generators: list[Poly], z) -> int:
    """Exact rank of the gradient matrix of the generators at a dual point."""
    from . import linalg

    rows = [[g.evaluate(z) for g in p.gradient()] for p in generators]
    return linalg.rank(rows)


def kostant_regularity_certificate(L: LieAlgebraData, fam: InvariantFamily, z) -> bool:
    """Differential criterion for regularity of the dual point z.

    The point is regular exactly when the gradients of the invariant
    generators at z are linearly independent; this must agree pointwise with
    is_regular_point, which is how the tests pin it down.
    """
    return gradient_rank_at(fam.generators, z) == len(fam.generators)


def power_sums_to_elementary(power_sums: list[Poly]) -> list[Poly]:
    """Newton's identities: e_1..e_m from p_1..p_m (cross-check utility).

    e_k = (1/k) * sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
    """
    if not power_sums:
        return []
    arity = power_sums[0].arity
    es: list[Poly] = [Poly.constant(arity, 1)]  # e_0 = 1
    for k in range(1, len(power_sums) + 1):
        acc = Poly.zero(arity)
        for i in range(1, k + 1):
            term = es[k - i] * power_sums[i - 1]
            acc = acc + (term if i % 2 == 1 else -term)
        es.append(acc * Fraction(1, k))
    return es[1:]
