"""Shift families on centralizers of nilpotent elements.

Pipeline: complete a Jordan-form nilpotent e of gl_n to an sl2-triple
(blockwise), restrict each invariant generator to the slice e + g^f, take the
initial homogeneous component, carry it over to the dual of the centralizer
g^e through the pairing Gram matrix, and run the shift machinery over g^e.
The degree bookkeeping (sum of initial degrees against b(g^e)) is the
stated precondition for the regular-sequence experiment, and the e = 0 case
reproduces the ambient-algebra verdict bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .exactpoly import Poly
from .groebner import DimensionReport, MonomialOrder, regular_sequence_verdict
from .invariants import InvariantFamily, invariant_generators, verify_invariance
from .liealg import (
    LieAlgebraData,
    SL2Triple,
    SliceChart,
    centralizer,
    draw_regular_dual_point,
    dual_of,
    index_of,
    kostant_slice,
    verify_sl2,
)
from .shift import mf_generators


@dataclass
class SliceRestriction:
    source_index: int
    restricted: Poly  # in slice coordinates t_0..t_{m-1}
    initial: Poly  # lowest homogeneous component, nonzero
    initial_degree: int


@dataclass
class StarReport:
    partition: tuple[int, ...]
    initial_degrees: list[int]
    degree_sum: int
    b_centralizer: int
    verdict: bool
    centralizer_dim: int
    centralizer_index: int
    generator_family: str = "power-traces"
    singular_codim: int | None = None  # only filled by the optional check

    def to_json_dict(self) -> dict:
        return {
            "partition": list(self.partition),
            "initial_degrees": list(self.initial_degrees),
            "degree_sum": self.degree_sum,
            "b_centralizer": self.b_centralizer,
            "centralizer_dim": self.centralizer_dim,
            "centralizer_index": self.centralizer_index,
            "verdict": self.verdict,
            "generator_family": self.generator_family,
            "singular_codim": self.singular_codim,
        }


# ---------------------------------------------------------------------------
# Jordan data
# ---------------------------------------------------------------------------


def nilpotent_from_partition(L: LieAlgebraData, partition) -> list[Fraction]:
    """Block Jordan nilpotent for gl_n: one J_lambda block per part."""
    if L.meta.get("type") != "gl":
        raise ValueError("Jordan partitions are supported for gl only")
    n = L.meta["size"]
    partition = tuple(int(p) for p in partition)
    if sum(partition) != n or any(p < 1 for p in partition):
        raise ValueError(f"{partition} is not a partition of {n}")
    if list(partition) != sorted(partition, reverse=True):
        raise ValueError("partition parts must be non-increasing")
    labels = {lab: i for i, lab in enumerate(L.basis_labels)}
    e = [Fraction(0)] * L.dim
    offset = 0
    for part in partition:
        for i in range(1, part):
            e[labels[f"E{offset + i}{offset + i + 1}"]] = Fraction(1)
        offset += part
    return e


def jordan_partition(L: LieAlgebraData, e) -> tuple[int, ...]:
    """Jordan type of a nilpotent element from the ranks of its powers."""
    if L.defining is None:
        raise ValueError("algebra lacks defining matrices")
    m = len(L.defining[0])
    mat = [[Fraction(0)] * m for _ in range(m)]
    for coef, bm in zip(e, L.defining):
        if coef:
            for a in range(m):
                for b in range(m):
                    mat[a][b] += coef * bm[a][b]
    kernels = [0]
    power = [[Fraction(int(a == b)) for b in range(m)] for a in range(m)]
    for _ in range(m):
        power = [
            [sum((power[a][c] * mat[c][b] for c in range(m)), Fraction(0)) for b in range(m)]
            for a in range(m)
        ]
        kernels.append(m - linalg.rank(power))
    if kernels[-1] != m:
        raise ValueError("element is not nilpotent")
    # kernel jumps form the conjugate partition; transpose it
    conjugate = [kernels[k] - kernels[k - 1] for k in range(1, m + 1) if kernels[k] > kernels[k - 1]]
    parts = []
    for k in range(1, m + 1):
        size = sum(1 for c in conjugate if c >= k)
        if size:
            parts.append(size)
    return tuple(sorted(parts, reverse=True))


def sl2_from_partition(L: LieAlgebraData, partition) -> SL2Triple:
    """Blockwise triple through the Jordan nilpotent of the partition.

    Per block of size p: e = sum E_{i,i+1}, h = diag(p-1, p-3, ...),
    f = sum i(p-i) E_{i+1,i}; blocks are assembled along the diagonal.
    """
    partition = tuple(int(p) for p in partition)
    labels = {lab: i for i, lab in enumerate(L.basis_labels)}
    e = [Fraction(0)] * L.dim
    h = [Fraction(0)] * L.dim
    f = [Fraction(0)] * L.dim
    offset = 0
    for part in partition:
        for i in range(1, part):
            e[labels[f"E{offset + i}{offset + i + 1}"]] = Fraction(1)
            f[labels[f"E{offset + i + 1}{offset + i}"]] = Fraction(i * (part - i))
        for i in range(1, part + 1):
            h[labels[f"E{offset + i}{offset + i}"]] = Fraction(part + 1 - 2 * i)
        offset += part
    triple = SL2Triple(e=e, h=h, f=f)
    if any(h) or any(e):
        verify_sl2(L, triple)
    return triple


# ---------------------------------------------------------------------------
# slice restrictions and transport
# ---------------------------------------------------------------------------


def restrict_to_slice(p: Poly, chart: SliceChart, L: LieAlgebraData) -> SliceRestriction:
    return _restrict(p, chart, L, source_index=-1)


def _restrict(p: Poly, chart: SliceChart, L: LieAlgebraData, source_index: int) -> SliceRestriction:
    """Substitute x := dual(e + sum t_k v_k) and split off the initial part.

    The initial component is taken with respect to the standard total degree
    in the slice coordinates.
    """
    m = len(chart.directions)
    base = dual_of(L, chart.base_point)
    dual_dirs = [dual_of(L, v) for v in chart.directions]
    images = []
    for jj in range(L.dim):
        terms = {}
        const = base[jj]
        if const:
            terms[(0,) * m] = const
        for k in range(m):
            c = dual_dirs[k][jj]
            if c:
                exp = [0] * m
                exp[k] = 1
                terms[tuple(exp)] = c
        images.append(Poly(m, terms))
    restricted = p.substitute(images)
    if restricted.is_zero():
        raise ValueError("restriction of a nonzero invariant to the slice vanished (bug)")
    comps = restricted.homogeneous_components()
    degree = min(comps)
    return SliceRestriction(
        source_index=source_index,
        restricted=restricted,
        initial=comps[degree],
        initial_degree=degree,
    )


def transport_to_centralizer(
    sr: SliceRestriction, chart: SliceChart, Lc: LieAlgebraData
) -> Poly:
    """Re-express the initial component as a polynomial on the centralizer dual.

    The slice coordinate vector t and the dual coordinates u on g^e are
    related by u = Gram . t, so the transport substitutes t = Gram^{-1} u.
    The result must be invariant over g^e; callers verify that.
    """
    m = len(chart.directions)
    if Lc.dim != m:
        raise ValueError("centralizer dimension does not match the slice chart")
    gram_inv = linalg.invert(chart.pairing_gram)
    images = [Poly.linear_form(gram_inv[bb]) for bb in range(m)]
    return sr.initial.substitute(images)


# ---------------------------------------------------------------------------
# condition (*) and the regular-sequence experiment
# ---------------------------------------------------------------------------


@dataclass
class SlicePipeline:
    """Everything condition (*) computes, kept for reuse by the experiment."""

    partition: tuple[int, ...]
    triple: SL2Triple
    chart: SliceChart
    centralizer: LieAlgebraData
    embedding: list
    restrictions: list[SliceRestriction]
    star: StarReport


def _slice_pipeline(L: LieAlgebraData, e) -> SlicePipeline:
    e = [Fraction(v) for v in e]
    fam = invariant_generators(L)
    xi = dual_of(L, e)
    values = [p.evaluate(xi) for p in fam.generators]
    if any(values):
        raise ValueError("element is not nilpotent (an invariant does not vanish)")
    partition = jordan_partition(L, e)
    triple = sl2_from_partition(L, partition)
    if triple.e != e:
        raise ValueError(
            f"element is nilpotent of type {partition} but is not in Jordan form; "
            "pass the block nilpotent from nilpotent_from_partition"
        )
    chart = kostant_slice(L, triple) if any(e) else _full_chart(L)
    Lc, embedding = centralizer(L, e)
    ind_c = index_of(Lc).index
    b_c, rem = divmod(Lc.dim + ind_c, 2)
    if rem:
        raise AssertionError("dim + index of the centralizer is odd (bug)")
    # the degree condition quantifies over a choice of free generators; the
    # power traces can miss the bound where the char-poly coefficients reach
    # it (first seen at partition (2,1,1) of gl_4), so try both
    from .invariants import power_sums_to_elementary

    family_name = "power-traces"
    restrictions = [
        _restrict(p, chart, L, source_index=i) for i, p in enumerate(fam.generators)
    ]
    if sum(sr.initial_degree for sr in restrictions) != b_c:
        alt = power_sums_to_elementary(fam.generators)
        alt_restrictions = [_restrict(p, chart, L, source_index=i) for i, p in enumerate(alt)]
        if sum(sr.initial_degree for sr in alt_restrictions) == b_c:
            family_name = "char-coefficients"
            restrictions = alt_restrictions
    degrees = [sr.initial_degree for sr in restrictions]
    star = StarReport(
        partition=partition,
        initial_degrees=degrees,
        degree_sum=sum(degrees),
        b_centralizer=b_c,
        verdict=sum(degrees) == b_c,
        centralizer_dim=Lc.dim,
        centralizer_index=ind_c,
        generator_family=family_name,
    )
    return SlicePipeline(
        partition=partition,
        triple=triple,
        chart=chart,
        centralizer=Lc,
        embedding=embedding,
        restrictions=restrictions,
        star=star,
    )


def _full_chart(L: LieAlgebraData) -> SliceChart:
    """Chart for e = 0: the slice is all of g and the Gram matrix is the form."""
    basis = [
        [Fraction(int(i == j)) for i in range(L.dim)] for j in range(L.dim)
    ]
    return SliceChart(
        base_point=[Fraction(0)] * L.dim,
        directions=basis,
        ge_basis=basis,
        pairing_gram=[row[:] for row in L.form],
    )


def condition_star(L: LieAlgebraData, e, check_singular_codim: bool = False) -> StarReport:
    """Degree bookkeeping on the slice: sum deg initial components vs b(g^e).

    The optional singular-codimension estimate of the centralizer dual is
    off by default because the minor ideal explodes beyond small ranks.
    """
    pipe = _slice_pipeline(L, e)
    if check_singular_codim:
        from .liealg import singular_codimension

        pipe.star.singular_codim = singular_codimension(pipe.centralizer)
    return pipe.star


@dataclass
class ConjectureRow:
    partition: tuple[int, ...]
    star: StarReport
    xi: list[Fraction]
    xi_attempts: int
    seed: int
    report: DimensionReport

    def to_json_dict(self) -> dict:
        return {
            "partition": list(self.partition),
            "star": self.star.to_json_dict(),
            "xi": [f"{c.numerator}/{c.denominator}" for c in self.xi],
            "xi_attempts": self.xi_attempts,
            "seed": self.seed,
            "report": self.report.to_json_dict(),
        }


def conjecture_check(
    L: LieAlgebraData,
    e,
    seed: int,
    order: MonomialOrder | None = None,
    timeout_secs: float | None = None,
    cache_dir: str | None = None,
) -> ConjectureRow:
    """Regular-sequence experiment for the shift family over a centralizer.

    Requires condition (*) to hold (it is the hypothesis of the statement
    under test).  Draws a seeded random regular point of the centralizer
    dual, builds the shift family from the transported initial components,
    and runs the dimension verdict with n = dim g^e and k = b(g^e).
    """
    pipe = _slice_pipeline(L, e)
    if not pipe.star.verdict:
        raise ValueError("condition (*) fails; the experiment hypothesis is not met")
    Lc = pipe.centralizer
    transported = [
        (sr, transport_to_centralizer(sr, pipe.chart, Lc)) for sr in pipe.restrictions
    ]
    for _, q in transported:
        if not verify_invariance(Lc, q):
            raise AssertionError("transported initial component is not invariant (bug)")
    transported.sort(key=lambda t: (t[0].initial_degree, t[0].source_index))
    fam_c = InvariantFamily(
        algebra=Lc,
        generators=[q for _, q in transported],
        degrees=[sr.initial_degree for sr, _ in transported],
    )
    xi, attempts = draw_regular_dual_point(Lc, seed)
    mf = mf_generators(Lc, fam_c, xi)
    report = regular_sequence_verdict(
        mf.polynomials(),
        Lc.dim,
        order=order,
        timeout_secs=timeout_secs,
        cache_dir=cache_dir,
        zero_labels=mf.zero_entries,
    )
    return ConjectureRow(
        partition=pipe.partition,
        star=pipe.star,
        xi=xi,
        xi_attempts=attempts,
        seed=seed,
        report=report,
    )


def all_partitions(n: int):
    """Partitions of n in descending lexicographic order."""

    def gen(remaining, bound):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return list(gen(n, n))
