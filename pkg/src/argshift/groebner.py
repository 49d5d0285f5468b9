"""Exact Groebner engine over Q and the regular-sequence verdict.

Buchberger's algorithm with the normal (degree) pair-selection strategy and
the coprimality and chain criteria.  Coefficients are cleared to primitive
integer vectors before pairing, and all reductions are integer pseudo-
reductions, so no rational arithmetic happens in the hot loop; the reduced
basis is converted to monic rational polynomials at the end.  Output is
deterministic for a fixed input sequence and order, which is what makes the
disk cache and the golden reports sound.

The Krull dimension of the quotient is read off the leading-term ideal: it is
the largest number of variables that avoid the support of every leading
monomial (computed as a minimum hitting set over the supports).
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from heapq import heapify, heappop, heappush
from math import gcd

from . import linalg
from .exactpoly import (
    Monomial,
    Poly,
    format_poly,
    mono_div,
    mono_divides,
    mono_lcm,
    parse_poly,
)


class GBTimeout(Exception):
    """Raised when a basis computation exceeds its time budget."""


@dataclass(frozen=True)
class MonomialOrder:
    """Total multiplicative monomial order: degrevlex (default) or lex.

    The optional permutation lists variable indices from most to least
    significant; None means x0 > x1 > ...
    """

    kind: str = "degrevlex"
    permutation: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex"):
            raise ValueError(f"unsupported order {self.kind!r}")

    def _arranged(self, mono: Monomial) -> Monomial:
        if self.permutation is None:
            return mono
        return tuple(mono[p] for p in self.permutation)

    def key(self, mono: Monomial):
        m = self._arranged(mono)
        if self.kind == "degrevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        return m

    def negkey(self, mono: Monomial):
        m = self._arranged(mono)
        if self.kind == "degrevlex":
            return (-sum(m), tuple(reversed(m)))
        return tuple(-e for e in m)

    def to_json(self) -> dict:
        return {"kind": self.kind, "permutation": list(self.permutation) if self.permutation else None}


@dataclass
class GroebnerBasis:
    order: MonomialOrder
    arity: int
    basis: list[Poly]  # reduced: monic, pairwise non-divisible leads, sorted by lead
    input_hash: str

    def leading_monomials(self) -> list[Monomial]:
        return [max(p.terms, key=self.order.key) for p in self.basis]


# ---------------------------------------------------------------------------
# integer polynomial core
# ---------------------------------------------------------------------------


IntPoly = dict  # Monomial -> int, content 1, positive leading coefficient


def _to_int_poly(p: Poly) -> IntPoly:
    if not p.terms:
        return {}
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    out = {m: int(c * den) for m, c in p.terms.items()}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {m: v // g for m, v in out.items()}
    return out


def _content_normalize(d: IntPoly) -> None:
    g = 0
    for v in d.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for m in d:
            d[m] //= g


def _sign_normalize(d: IntPoly, order: MonomialOrder) -> None:
    if not d:
        return
    lm = max(d, key=order.key)
    if d[lm] < 0:
        for m in d:
            d[m] = -d[m]


class _Budget:
    """Cooperative deadline checks for the inner loops."""

    __slots__ = ("deadline", "counter")

    def __init__(self, timeout_secs):
        self.deadline = None if timeout_secs is None else time.monotonic() + timeout_secs
        self.counter = 0

    def tick(self, stride: int = 256) -> None:
        if self.deadline is None:
            return
        self.counter += 1
        if self.counter % stride == 0 and time.monotonic() > self.deadline:
            raise GBTimeout("basis computation exceeded the time budget")


def _reduce_full(f: IntPoly, reducers, order: MonomialOrder, budget: _Budget) -> IntPoly:
    """Full normal form of f against reducers (list of (lm, lc, terms)).

    Integer pseudo-reduction: the intermediate polynomial is rescaled by
    reducer leading coefficients as needed, and content-normalized at the
    end, so the result is primitive (a rational multiple of the true normal
    form, which is all the callers need).
    """
    if not f:
        return {}
    # reducers are key-ascending; under degrevlex that is degree-ascending,
    # so the divisor scan can stop once leads outgrow the target
    degree_sorted = order.kind == "degrevlex"
    work = dict(f)
    out: IntPoly = {}
    heap = [(order.negkey(m), m) for m in work]
    heapify(heap)
    steps = 0
    while heap:
        _, m = heappop(heap)
        c = work.get(m)
        if not c:
            continue
        mdeg = sum(m)
        hit = None
        for lm, lc, terms in reducers:
            if degree_sorted and sum(lm) > mdeg:
                break
            if mono_divides(lm, m):
                hit = (lm, lc, terms)
                break
        if hit is None:
            out[m] = c
            del work[m]
            continue
        lm, lc, terms = hit
        q = mono_div(m, lm)
        g = gcd(c, lc)
        a, b = lc // g, c // g
        if a < 0:
            a, b = -a, -b
        if a != 1:
            for k in work:
                work[k] *= a
            for k in out:
                out[k] *= a
        del work[m]
        for gm, gc in terms:
            if gm == lm:
                continue
            k = tuple(x + y for x, y in zip(gm, q))
            nv = work.get(k, 0) - b * gc
            if nv:
                if k not in work:
                    heappush(heap, (order.negkey(k), k))
                work[k] = nv
            else:
                work.pop(k, None)
        budget.tick()
        steps += 1
        if steps % 64 == 0:
            merged_gcd = 0
            for v in work.values():
                merged_gcd = gcd(merged_gcd, v)
                if merged_gcd == 1:
                    break
            if merged_gcd != 1:
                for v in out.values():
                    merged_gcd = gcd(merged_gcd, v)
                    if merged_gcd == 1:
                        break
            if merged_gcd > 1:
                for k in work:
                    work[k] //= merged_gcd
                for k in out:
                    out[k] //= merged_gcd
    _content_normalize(out)
    return out


def _reducer_view(polys: list[IntPoly], order: MonomialOrder, skip: int | None = None):
    """Reducers sorted by leading monomial (ascending): smaller leads first."""
    view = []
    for idx, d in enumerate(polys):
        if idx == skip or not d:
            continue
        lm = max(d, key=order.key)
        view.append((order.key(lm), lm, d[lm], tuple(d.items())))
    view.sort(key=lambda t: t[0])
    return [(lm, lc, terms) for _, lm, lc, terms in view]


def _spoly(f: IntPoly, g: IntPoly, order: MonomialOrder) -> IntPoly:
    lf = max(f, key=order.key)
    lg = max(g, key=order.key)
    lcm = mono_lcm(lf, lg)
    cf, cg = f[lf], g[lg]
    d = gcd(cf, cg)
    mf, mg = mono_div(lcm, lf), mono_div(lcm, lg)
    af, ag = cg // d, cf // d
    out: IntPoly = {}
    for m, c in f.items():
        k = tuple(x + y for x, y in zip(m, mf))
        out[k] = out.get(k, 0) + af * c
    for m, c in g.items():
        k = tuple(x + y for x, y in zip(m, mg))
        v = out.get(k, 0) - ag * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    _content_normalize(out)
    return out


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------


def input_digest(gens: list[Poly], order: MonomialOrder, arity: int) -> str:
    payload = json.dumps(
        {"order": order.to_json(), "arity": arity, "generators": [format_poly(p) for p in gens]},
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()


def _cache_path(cache_dir: str, digest: str) -> str:
    return os.path.join(cache_dir, f"gb-{digest}.json")


def _cache_load(cache_dir, digest, gens, order, arity) -> list[Poly] | None:
    path = _cache_path(cache_dir, digest)
    if not os.path.exists(path):
        return None
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("generators") != [format_poly(p) for p in gens]:
        return None
    return [parse_poly(t, arity) for t in data["basis"]]


def _cache_store(cache_dir, digest, gens, order, arity, basis) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, digest)
    tmp = path + ".tmp"
    payload = {
        "order": order.to_json(),
        "arity": arity,
        "generators": [format_poly(p) for p in gens],
        "basis": [format_poly(p) for p in basis],
    }
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, indent=1)
    os.replace(tmp, path)


def buchberger(
    gens: list[Poly],
    order: MonomialOrder | None = None,
    timeout_secs: float | None = None,
    cache_dir: str | None = None,
    arity: int | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens.

    Deterministic for a fixed input sequence and order.  Zero generators are
    ignored; an empty input yields the empty basis (pass arity in that
    case).  Raises GBTimeout when the time budget runs out.
    """
    order = order or MonomialOrder()
    nonzero = [p for p in gens if not p.is_zero()]
    if gens:
        arity = gens[0].arity
    elif arity is None:
        raise ValueError("an empty generator list needs an explicit arity")
    for p in gens:
        if p.arity != arity:
            raise ValueError("generators live in different rings")
    digest = input_digest(gens, order, arity)
    if cache_dir is not None:
        cached = _cache_load(cache_dir, digest, gens, order, arity)
        if cached is not None:
            return GroebnerBasis(order=order, arity=arity, basis=cached, input_hash=digest)
    budget = _Budget(timeout_secs)

    G: list[IntPoly] = []
    for p in nonzero:
        d = _to_int_poly(p)
        r = _reduce_full(d, _reducer_view(G, order), order, budget)
        if r:
            _sign_normalize(r, order)
            G.append(r)
    # inter-reduce the seed basis to a fixpoint; linear generators then
    # eliminate their variables before any pair is formed
    changed = True
    while changed and len(G) > 1:
        changed = False
        for idx in range(len(G)):
            others = _reducer_view(G, order, skip=idx)
            r = _reduce_full(G[idx], others, order, budget)
            if r != G[idx]:
                changed = True
                if r:
                    _sign_normalize(r, order)
                    G[idx] = r
                else:
                    G.pop(idx)
                    break

    pairs: set[tuple[int, int]] = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    lms = [max(d, key=order.key) for d in G]

    def pair_rank(p):
        i, j = p
        return (sum(mono_lcm(lms[i], lms[j])), i, j)

    while pairs:
        budget.tick(stride=1)
        i, j = min(pairs, key=pair_rank)
        pairs.discard((i, j))
        lcm_ij = mono_lcm(lms[i], lms[j])
        # first criterion: coprime leading monomials
        if all(a + b == c for a, b, c in zip(lms[i], lms[j], lcm_ij)):
            continue
        # chain criterion: some k with lt_k | lcm and both side pairs done
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if mono_divides(lms[k], lcm_ij):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pairs and pjk not in pairs:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(G[i], G[j], order)
        r = _reduce_full(s, _reducer_view(G, order), order, budget)
        if r:
            _sign_normalize(r, order)
            t = len(G)
            G.append(r)
            lms.append(max(r, key=order.key))
            for a in range(t):
                pairs.add((a, t))

    basis = _reduce_and_normalize(G, order, budget)
    if cache_dir is not None:
        _cache_store(cache_dir, digest, gens, order, arity, basis)
    return GroebnerBasis(order=order, arity=arity, basis=basis, input_hash=digest)


def _reduce_and_normalize(G: list[IntPoly], order: MonomialOrder, budget: _Budget) -> list[Poly]:
    """Minimalize, inter-reduce and make monic; sorted by leading monomial."""
    live = [(max(d, key=order.key), d) for d in G if d]
    live.sort(key=lambda t: order.key(t[0]))
    minimal: list[IntPoly] = []
    min_lms: list[Monomial] = []
    for lm, d in live:
        if any(mono_divides(m, lm) for m in min_lms):
            continue
        minimal.append(d)
        min_lms.append(lm)
    reduced: list[IntPoly] = []
    for idx, d in enumerate(minimal):
        others = _reducer_view([x for k, x in enumerate(minimal) if k != idx], order)
        r = _reduce_full(d, others, order, budget)
        _sign_normalize(r, order)
        reduced.append(r)
    out: list[Poly] = []
    arity = len(min_lms[0]) if min_lms else 0
    for d in reduced:
        lm = max(d, key=order.key)
        lc = d[lm]
        out.append(Poly(arity, {m: Fraction(c, lc) for m, c in d.items()}))
    out.sort(key=lambda p: order.key(max(p.terms, key=order.key)))
    return out


def normal_form(f: Poly, basis: list[Poly], order: MonomialOrder | None = None) -> Poly:
    """Multivariate division remainder of f by the basis (exact, rational).

    No term of the result is divisible by any basis leading term.  Against a
    reduced Groebner basis this is the unique normal form, so membership in
    the ideal is the test `normal_form(f, gb.basis, gb.order).is_zero()`.
    """
    order = order or MonomialOrder()
    reducers = []
    for b in basis:
        if b.is_zero():
            continue
        lm = max(b.terms, key=order.key)
        reducers.append((lm, b.terms[lm], list(b.terms.items())))
    reducers.sort(key=lambda t: order.key(t[0]))
    work = dict(f.terms)
    out: dict[Monomial, Fraction] = {}
    heap = [(order.negkey(m), m) for m in work]
    heapify(heap)
    while heap:
        _, m = heappop(heap)
        c = work.get(m)
        if not c:
            continue
        hit = None
        for lm, lc, terms in reducers:
            if mono_divides(lm, m):
                hit = (lm, lc, terms)
                break
        if hit is None:
            out[m] = c
            del work[m]
            continue
        lm, lc, terms = hit
        q = mono_div(m, lm)
        factor = c / lc
        del work[m]
        for gm, gc in terms:
            if gm == lm:
                continue
            k = tuple(x + y for x, y in zip(gm, q))
            nv = work.get(k, Fraction(0)) - factor * gc
            if nv:
                if k not in work:
                    heappush(heap, (order.negkey(k), k))
                work[k] = nv
            else:
                work.pop(k, None)
    return Poly(f.arity, out)


# ---------------------------------------------------------------------------
# dimension
# ---------------------------------------------------------------------------


def _min_hitting_set_size(supports: list[frozenset[int]]) -> int:
    """Smallest set of variables meeting every support (exact branch&bound)."""
    keep: list[frozenset[int]] = []
    for s in sorted(supports, key=len):
        if not any(t <= s for t in keep):
            keep.append(s)
    best = len(frozenset().union(*keep)) if keep else 0

    def rec(chosen: set[int], size: int):
        nonlocal best
        if size >= best:
            return
        pending = None
        for s in keep:
            if not (s & chosen):
                pending = s
                break
        if pending is None:
            best = size
            return
        for v in sorted(pending):
            chosen.add(v)
            rec(chosen, size + 1)
            chosen.discard(v)

    rec(set(), 0)
    return best


def ideal_dimension(gb: GroebnerBasis) -> int:
    """Krull dimension of the quotient by the ideal (via leading terms).

    Equals the size of the largest variable subset S such that no leading
    monomial has support inside S; the unit ideal returns the sentinel -1.
    """
    if not gb.basis:
        return gb.arity
    supports = []
    for lm in gb.leading_monomials():
        supp = frozenset(i for i, e in enumerate(lm) if e)
        if not supp:
            return -1
        supports.append(supp)
    return gb.arity - _min_hitting_set_size(supports)


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------


@dataclass
class DimensionReport:
    arity: int
    generator_count: int
    ideal_dimension: int | None
    expected_dimension: int
    verdict: bool | None
    status: str = "ok"  # ok | degenerate | inconclusive
    zero_generators: list = field(default_factory=list)
    order: MonomialOrder = field(default_factory=MonomialOrder)
    input_hash: str | None = None
    extra: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        out = {
            "arity": self.arity,
            "generator_count": self.generator_count,
            "ideal_dimension": self.ideal_dimension,
            "expected_dimension": self.expected_dimension,
            "verdict": self.verdict,
            "status": self.status,
            "zero_generators": [list(z) for z in self.zero_generators],
            "order": self.order.to_json(),
            "input_hash": self.input_hash,
        }
        out.update(self.extra)
        return out


def regular_sequence_verdict(
    gens: list[Poly],
    n: int,
    order: MonomialOrder | None = None,
    timeout_secs: float | None = None,
    cache_dir: str | None = None,
    zero_labels: list | None = None,
) -> DimensionReport:
    """Verdict: do the homogeneous gens cut a scheme of dimension n - k?

    In a polynomial ring (Cohen-Macaulay, gens homogeneous) this equality is
    equivalent to the gens forming a regular sequence.  Zero generators force
    verdict False immediately (the labeled family is degenerate); a timeout
    yields the distinct "inconclusive" status with verdict None.
    """
    order = order or MonomialOrder()
    k = len(gens)
    if k > n:
        raise ValueError(f"more generators ({k}) than variables ({n})")
    for p in gens:
        if not p.is_homogeneous():
            raise ValueError("regular-sequence verdict requires homogeneous generators")
        if not p.is_zero() and p.arity != n:
            raise ValueError("generator arity does not match n")
    zeros = [i for i, p in enumerate(gens) if p.is_zero()]
    if zeros:
        labels = zero_labels if zero_labels is not None else zeros
        return DimensionReport(
            arity=n,
            generator_count=k,
            ideal_dimension=None,
            expected_dimension=n - k,
            verdict=False,
            status="degenerate",
            zero_generators=list(labels),
            order=order,
        )
    try:
        gb = buchberger(gens, order=order, timeout_secs=timeout_secs, cache_dir=cache_dir, arity=n)
        dim = ideal_dimension(gb)
    except GBTimeout:
        return DimensionReport(
            arity=n,
            generator_count=k,
            ideal_dimension=None,
            expected_dimension=n - k,
            verdict=None,
            status="inconclusive",
            order=order,
        )
    if dim != -1 and dim < n - k:
        raise AssertionError(
            f"computed dimension {dim} below the Krull bound {n - k}: engine bug"
        )
    return DimensionReport(
        arity=n,
        generator_count=k,
        ideal_dimension=dim,
        expected_dimension=n - k,
        verdict=(dim == n - k),
        status="ok",
        order=order,
        input_hash=gb.input_hash,
    )


def jacobian_rank(gens: list[Poly], point) -> int:
    """Exact rank of the matrix (d g_i / d x_j) evaluated at the point."""
    point = [Fraction(v) for v in point]
    rows = []
    for g in gens:
        if point and g.arity != len(point):
            raise ValueError("point length does not match generator arity")
        rows.append([g.diff(k).evaluate(point) for k in range(g.arity)])
    return linalg.rank(rows)
