"""Classical reductive Lie algebras and their centralizers as exact data.

An algebra is stored by structure constants over Q together with the trace
form of its defining representation.  Brackets, adjoint maps, centralizers,
the index (via fraction-free rank of the structure matrix over the function
field), principal sl2-triples and Kostant slices are all computed exactly.

Coordinate convention: S(g) uses coordinates x_0..x_{n-1} dual to the chosen
basis, so a point of the dual space is a plain coordinate vector and the
linear form (u | .) attached to an element u has coordinate vector form.u
(see dual_of).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .exactpoly import Poly

Vector = list[Fraction]

# dim threshold below which the index is certified by symbolic rank
EXACT_INDEX_MAX_DIM = 12


class LieAlgebraError(ValueError):
    pass


@dataclass
class LieAlgebraData:
    """Structure-constant presentation of a Lie algebra with invariant form.

    structure maps (i, j) with i < j to the sparse bracket {k: c} meaning
    [b_i, b_j] = sum c * b_k; antisymmetry is implicit.  The form may be
    degenerate only for type "centralizer".
    """

    dim: int
    basis_labels: list[str]
    structure: dict[tuple[int, int], dict[int, Fraction]]
    form: list[list[Fraction]]
    meta: dict = field(default_factory=dict)
    defining: list[list[list[Fraction]]] | None = None

    _index_cache: "IndexReport | None" = field(default=None, repr=False, compare=False)
    _form_inv: list[list[Fraction]] | None = field(default=None, repr=False, compare=False)
    _caches: dict = field(default_factory=dict, repr=False, compare=False)

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        if i == j:
            return {}
        if i < j:
            return self.structure.get((i, j), {})
        return {k: -c for k, c in self.structure.get((j, i), {}).items()}

    def form_inverse(self) -> list[list[Fraction]]:
        if self._form_inv is None:
            self._form_inv = linalg.invert(self.form)
        return self._form_inv


@dataclass
class SL2Triple:
    e: Vector
    h: Vector
    f: Vector


@dataclass
class SliceChart:
    """Affine chart of the slice e + g^f, with the g^e/g^f pairing data."""

    base_point: Vector
    directions: list[Vector]  # basis of g^f
    ge_basis: list[Vector]  # basis of g^e, rows of the pairing Gram matrix
    pairing_gram: list[list[Fraction]]  # gram[a][b] = (ge_basis[a] | directions[b])


@dataclass
class IndexReport:
    dim: int
    generic_rank: int
    index: int
    certificate_points: list[Vector]
    mode: str  # "exact" (function-field rank) or "sampled"


def zero_vector(n: int) -> Vector:
    return [Fraction(0)] * n


def bracket(L: LieAlgebraData, x: Vector, y: Vector) -> Vector:
    """[x, y] from the structure constants."""
    if len(x) != L.dim or len(y) != L.dim:
        raise LieAlgebraError("vector length mismatch")
    out = zero_vector(L.dim)
    for (i, j), comps in L.structure.items():
        coef = x[i] * y[j] - x[j] * y[i]
        if coef:
            for k, c in comps.items():
                out[k] += coef * c
    return out


def adjoint_matrix(L: LieAlgebraData, x: Vector) -> list[list[Fraction]]:
    """Matrix of ad x; column j holds [x, b_j]."""
    if len(x) != L.dim:
        raise LieAlgebraError("vector length mismatch")
    n = L.dim
    mat = [zero_vector(n) for _ in range(n)]
    for (i, j), comps in L.structure.items():
        if x[i]:
            for k, c in comps.items():
                mat[k][j] += x[i] * c
        if x[j]:
            for k, c in comps.items():
                mat[k][i] -= x[j] * c
    return mat


def dual_of(L: LieAlgebraData, v: Vector) -> Vector:
    """Coordinates of the linear form (v | .) on the dual space: form . v."""
    return linalg.mat_vec(L.form, v)


def element_of(L: LieAlgebraData, xi: Vector) -> Vector:
    """Inverse of dual_of: the element whose pairing form equals xi."""
    return linalg.mat_vec(L.form_inverse(), xi)


# ---------------------------------------------------------------------------
# construction of the classical algebras
# ---------------------------------------------------------------------------


def _mat_zero(m: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * m for _ in range(m)]


def _E(m: int, a: int, b: int) -> list[list[Fraction]]:
    """Elementary matrix (1-based indices)."""
    out = _mat_zero(m)
    out[a - 1][b - 1] = Fraction(1)
    return out


def _mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_scale(a, c):
    c = Fraction(c)
    return [[x * c for x in row] for row in a]


def _mat_mul(a, b):
    m = len(a)
    p = len(b[0])
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(p)]
        for i in range(m)
    ]


def _mat_commutator(a, b):
    ab = _mat_mul(a, b)
    ba = _mat_mul(b, a)
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(ab, ba)]


def _mat_trace_pairing(a, b) -> Fraction:
    m = len(a)
    return sum((a[i][j] * b[j][i] for i in range(m) for j in range(m)), Fraction(0))


def _flatten(mat) -> Vector:
    return [x for row in mat for x in row]


def _from_matrices(
    mats: list[list[list[Fraction]]], labels: list[str], meta: dict
) -> LieAlgebraData:
    """Structure constants and trace form from a list of basis matrices."""
    n = len(mats)
    flat_cols = [_flatten(m) for m in mats]
    # rows of the flattened system: one per matrix entry
    rows = [[flat_cols[j][r] for j in range(n)] for r in range(len(flat_cols[0]))]
    targets = []
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            pairs.append((i, j))
            targets.append(_flatten(_mat_commutator(mats[i], mats[j])))
    sols = linalg.solve_many(rows, targets) if targets else []
    if targets and sols is None:
        raise LieAlgebraError("basis does not close under the bracket")
    structure: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), sol in zip(pairs, sols):
        comps = {k: c for k, c in enumerate(sol) if c != 0}
        if comps:
            structure[(i, j)] = comps
    form = [[_mat_trace_pairing(mats[i], mats[j]) for j in range(n)] for i in range(n)]
    return LieAlgebraData(
        dim=n,
        basis_labels=labels,
        structure=structure,
        form=form,
        meta=meta,
        defining=mats,
    )


def _gl_basis(n: int):
    mats, labels = [], []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            mats.append(_E(n, a, b))
            labels.append(f"E{a}{b}")
    return mats, labels


def _sl_basis(n: int):
    mats, labels = [], []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            mats.append(_E(n, a, b))
            labels.append(f"E{a}{b}")
    for i in range(1, n):
        h = _mat_add(_E(n, i, i), _mat_scale(_E(n, i + 1, i + 1), -1))
        mats.append(h)
        labels.append(f"H{i}")
    for b in range(1, n + 1):
        for a in range(b + 1, n + 1):
            mats.append(_E(n, a, b))
            labels.append(f"E{a}{b}")
    return mats, labels


def _gram_so(n: int):
    g = _mat_zero(n)
    for i in range(n):
        g[i][n - 1 - i] = Fraction(1)
    return g


def _gram_sp(n: int):
    g = _mat_zero(n)
    m = n // 2
    for i in range(n):
        g[i][n - 1 - i] = Fraction(1) if i < m else Fraction(-1)
    return g


def _matrix_condition_basis(n: int, gram) -> list[list[list[Fraction]]]:
    """Basis of {x : x^T G + G x = 0} by exact elimination, pivot-ordered."""
    rows = []
    for a in range(n):
        for b in range(n):
            # coefficient of x[p][q] in (x^T G + G x)[a][b] is
            # G[p][b]*[q == a] + G[a][p]*[q == b]
            row = [Fraction(0)] * (n * n)
            for p in range(n):
                row[p * n + a] += gram[p][b]
                row[p * n + b] += gram[a][p]
            rows.append(row)
    kernel = linalg.nullspace(rows, n * n)
    return [[[v[i * n + j] for j in range(n)] for i in range(n)] for v in kernel]


def build_classical(kind: str, size: int) -> LieAlgebraData:
    """Construct gl_n, sl_n, so_n or sp_n (split form, trace form).

    All structure invariants (antisymmetry, Jacobi, form symmetry/invariance
    and nondegeneracy) are verified exactly; a failure aborts construction.
    """
    if kind == "gl":
        if size < 1:
            raise LieAlgebraError("gl size must be >= 1")
        mats, labels = _gl_basis(size)
        meta = {"type": "gl", "size": size, "rank": size}
    elif kind == "sl":
        if size < 2:
            raise LieAlgebraError("sl size must be >= 2")
        mats, labels = _sl_basis(size)
        meta = {"type": "sl", "size": size, "rank": size - 1}
    elif kind == "so":
        if size < 3:
            raise LieAlgebraError("so size must be >= 3")
        mats = _matrix_condition_basis(size, _gram_so(size))
        labels = [f"b{i}" for i in range(len(mats))]
        meta = {"type": "so", "size": size, "rank": size // 2}
    elif kind == "sp":
        if size < 2 or size % 2:
            raise LieAlgebraError("sp size must be even and >= 2")
        mats = _matrix_condition_basis(size, _gram_sp(size))
        labels = [f"b{i}" for i in range(len(mats))]
        meta = {"type": "sp", "size": size, "rank": size // 2}
    else:
        raise LieAlgebraError(f"unsupported type {kind!r}")
    L = _from_matrices(mats, labels, meta)
    validate(L, require_nondegenerate=True)
    return L


def validate(L: LieAlgebraData, require_nondegenerate: bool = False) -> None:
    """Exact checks: Jacobi, form symmetry and invariance, nondegeneracy."""
    n = L.dim
    brk = {}
    for i in range(n):
        for j in range(i + 1, n):
            v = zero_vector(n)
            for k, c in L.bracket_basis(i, j).items():
                v[k] = c
            brk[(i, j)] = v

    def bv(i, j):
        if i == j:
            return zero_vector(n)
        if i < j:
            return brk[(i, j)]
        return [-x for x in brk[(j, i)]]

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                acc = zero_vector(n)
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = bv(a, b)
                    term = bracket(L, inner, _basis_vector(n, c))
                    acc = [p + q for p, q in zip(acc, term)]
                if any(acc):
                    raise LieAlgebraError(f"Jacobi identity fails on basis triple {(i, j, k)}")
    for i in range(n):
        for j in range(n):
            if L.form[i][j] != L.form[j][i]:
                raise LieAlgebraError("form is not symmetric")
    # ([x,y]|z) + (y|[x,z]) = 0 on basis triples
    for i in range(n):
        for j in range(n):
            vij = bv(i, j)
            for k in range(n):
                vik = bv(i, k)
                s = sum((vij[a] * L.form[a][k] for a in range(n)), Fraction(0))
                s += sum((L.form[j][a] * vik[a] for a in range(n)), Fraction(0))
                if s != 0:
                    raise LieAlgebraError("form is not invariant")
    if require_nondegenerate and linalg.rank(L.form) != n:
        raise LieAlgebraError("form is degenerate")


def _basis_vector(n: int, i: int) -> Vector:
    v = zero_vector(n)
    v[i] = Fraction(1)
    return v


# ---------------------------------------------------------------------------
# centralizers
# ---------------------------------------------------------------------------


def centralizer(L: LieAlgebraData, e: Vector) -> tuple[LieAlgebraData, list[Vector]]:
    """The subalgebra ker(ad e) with induced structure constants.

    Returns (algebra, embedding) where embedding is the list of basis vectors
    of the centralizer inside L (reduced row-echelon kernel basis, ordered by
    pivot).  For e = 0 this is L itself with the identity embedding.
    """
    if len(e) != L.dim:
        raise LieAlgebraError("vector length mismatch")
    if not any(e):
        return L, [_basis_vector(L.dim, i) for i in range(L.dim)]
    ad_e = adjoint_matrix(L, e)
    kernel = linalg.nullspace(ad_e)
    d = len(kernel)
    # express pairwise brackets in the kernel basis
    rows = [[kernel[j][r] for j in range(d)] for r in range(L.dim)]
    pairs, targets = [], []
    for a in range(d):
        for b in range(a + 1, d):
            pairs.append((a, b))
            targets.append(bracket(L, kernel[a], kernel[b]))
    sols = linalg.solve_many(rows, targets) if targets else []
    if targets and sols is None:
        raise LieAlgebraError("centralizer is not closed under bracket (bug)")
    structure: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (a, b), sol in zip(pairs, sols):
        comps = {k: c for k, c in enumerate(sol) if c != 0}
        if comps:
            structure[(a, b)] = comps
    form = [
        [
            sum(
                (kernel[a][i] * L.form[i][j] * kernel[b][j] for i in range(L.dim) for j in range(L.dim)),
                Fraction(0),
            )
            for b in range(d)
        ]
        for a in range(d)
    ]
    meta = {
        "type": "centralizer",
        "parent_type": L.meta.get("type"),
        "parent_size": L.meta.get("size"),
        "rank": None,
    }
    Lc = LieAlgebraData(
        dim=d,
        basis_labels=[f"z{i}" for i in range(d)],
        structure=structure,
        form=form,
        meta=meta,
    )
    return Lc, kernel


# ---------------------------------------------------------------------------
# index and regularity
# ---------------------------------------------------------------------------


def structure_matrix_poly(L: LieAlgebraData) -> list[list[Poly]]:
    """B(x) with B_ij = sum_k c_ij^k x_k, entries linear polynomials."""
    n = L.dim
    mat = [[Poly.zero(n) for _ in range(n)] for _ in range(n)]
    for (i, j), comps in L.structure.items():
        p = Poly.linear_form([comps.get(k, 0) for k in range(n)])
        mat[i][j] = p
        mat[j][i] = -p
    return mat


def structure_matrix_at(L: LieAlgebraData, xi: Vector) -> list[list[Fraction]]:
    n = L.dim
    mat = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), comps in L.structure.items():
        v = sum((c * xi[k] for k, c in comps.items()), Fraction(0))
        mat[i][j] = v
        mat[j][i] = -v
    return mat


def _seeded_points(n: int, seed: int, count: int) -> list[Vector]:
    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        pts.append([Fraction(rng.randint(-10, 10), rng.randint(1, 10)) for _ in range(n)])
    return pts


def index_of(L: LieAlgebraData, exact: bool | None = None, seed: int = 20250810) -> IndexReport:
    """Index = dim - generic rank of the structure matrix.

    Exact mode computes the rank of B over Q(x_0,..,x_{n-1}) by fraction-free
    elimination; above EXACT_INDEX_MAX_DIM it falls back to the max rank over
    5 seeded rational sample points and reports mode="sampled".
    """
    if L._index_cache is not None:
        return L._index_cache
    n = L.dim
    use_exact = exact if exact is not None else (n <= EXACT_INDEX_MAX_DIM)
    certificates: list[Vector] = []
    if use_exact:
        generic_rank = linalg.poly_matrix_rank(structure_matrix_poly(L))
        mode = "exact"
    else:
        generic_rank = 0
        for pt in _seeded_points(n, seed, 5):
            generic_rank = max(generic_rank, linalg.rank(structure_matrix_at(L, pt)))
            certificates.append(pt)
        mode = "sampled"
    if mode == "exact":
        for pt in _seeded_points(n, seed, 50):
            if linalg.rank(structure_matrix_at(L, pt)) == generic_rank:
                certificates.append(pt)
                break
    report = IndexReport(
        dim=n,
        generic_rank=generic_rank,
        index=n - generic_rank,
        certificate_points=certificates,
        mode=mode,
    )
    L._index_cache = report
    return report


def is_regular_point(L: LieAlgebraData, xi: Vector) -> bool:
    """True iff the stabilizer of the dual point xi has minimal dimension."""
    if len(xi) != L.dim:
        raise LieAlgebraError("vector length mismatch")
    report = index_of(L)
    return linalg.rank(structure_matrix_at(L, xi)) == L.dim - report.index


def singular_codimension(
    L: LieAlgebraData, max_minors: int = 400, cache_dir: str | None = None
) -> int | None:
    """Codimension of the singular locus, via the maximal minors of B(x).

    Small-case estimate only: the locus where the structure matrix drops
    below its generic rank r is cut out by the r x r minors, and its
    codimension is read off a Groebner basis of the minor ideal.  The minor
    count explodes combinatorially, so anything beyond max_minors is
    refused.  Returns None when the singular locus is empty (abelian case).
    """
    import itertools

    from .groebner import buchberger, ideal_dimension

    n = L.dim
    r = index_of(L).generic_rank
    if r == 0:
        return None
    count = 1
    for i in range(r):
        count = count * (n - i) // (i + 1)
    if count * count > max_minors:
        raise ValueError(
            f"{count * count} minors exceed the small-case budget of {max_minors}"
        )
    B = structure_matrix_poly(L)
    minors = []
    for rows in itertools.combinations(range(n), r):
        for cols in itertools.combinations(range(n), r):
            det = _poly_det([[B[i][j] for j in cols] for i in rows])
            if not det.is_zero():
                minors.append(det)
    if not minors:
        raise AssertionError("all maximal minors vanish at generic rank (bug)")
    dim = ideal_dimension(buchberger(minors, cache_dir=cache_dir))
    if dim == -1:
        return None
    return n - dim


def _poly_det(mat: list[list[Poly]]) -> Poly:
    """Determinant by cofactor expansion (tiny matrices only)."""
    size = len(mat)
    if size == 1:
        return mat[0][0]
    arity = mat[0][0].arity
    total = Poly.zero(arity)
    for j in range(size):
        if mat[0][j].is_zero():
            continue
        sub = [[row[k] for k in range(size) if k != j] for row in mat[1:]]
        term = mat[0][j] * _poly_det(sub)
        total = total + (term if j % 2 == 0 else -term)
    return total


def draw_regular_dual_point(
    L: LieAlgebraData, seed: int, max_attempts: int = 200
) -> tuple[Vector, int]:
    """Seeded random regular point of the dual space.

    Entries are uniform in {-10..10}/{1..10}; regularity is re-checked
    exactly.  Returns (point, attempts).  Used by the CLI and the centralizer
    experiments so that both share one reproducible drawing procedure.
    """
    rng = random.Random(seed)
    for attempt in range(1, max_attempts + 1):
        xi = [Fraction(rng.randint(-10, 10), rng.randint(1, 10)) for _ in range(L.dim)]
        if is_regular_point(L, xi):
            return xi, attempt
    raise LieAlgebraError(f"no regular point found in {max_attempts} attempts (index bug?)")


# ---------------------------------------------------------------------------
# sl2-triples and Kostant slices
# ---------------------------------------------------------------------------


def _principal_gl_sl(L: LieAlgebraData) -> SL2Triple:
    n = L.meta["size"]
    kind = L.meta["type"]
    labels = {lab: i for i, lab in enumerate(L.basis_labels)}
    e = zero_vector(L.dim)
    f = zero_vector(L.dim)
    h = zero_vector(L.dim)
    for i in range(1, n):
        e[labels[f"E{i}{i + 1}"]] = Fraction(1)
        f[labels[f"E{i + 1}{i}"]] = Fraction(i * (n - i))
    diag = [Fraction(n - 1 - 2 * (i - 1)) for i in range(1, n + 1)]
    if kind == "gl":
        for i in range(1, n + 1):
            h[labels[f"E{i}{i}"]] = diag[i - 1]
    else:
        partial = Fraction(0)
        for i in range(1, n):
            partial += diag[i - 1]
            h[labels[f"H{i}"]] = partial
    return SL2Triple(e=e, h=h, f=f)


def coords_of_matrix(L: LieAlgebraData, mat) -> Vector:
    """Coordinates of a defining-representation matrix in the chosen basis."""
    if L.defining is None:
        raise LieAlgebraError("algebra lacks defining matrices")
    flat_cols = [_flatten(m) for m in L.defining]
    rows = [[flat_cols[j][r] for j in range(L.dim)] for r in range(len(flat_cols[0]))]
    mat = [[Fraction(x) for x in row] for row in mat]
    sol = linalg.solve(rows, _flatten(mat))
    if sol is None:
        raise LieAlgebraError("matrix does not lie in the algebra")
    return sol


def matrix_of_coords(L: LieAlgebraData, v: Vector):
    """Defining-representation matrix of an element given by coordinates."""
    if L.defining is None:
        raise LieAlgebraError("algebra lacks defining matrices")
    m = len(L.defining[0])
    out = _mat_zero(m)
    for coef, bm in zip(v, L.defining):
        if coef:
            for a in range(m):
                for b in range(m):
                    out[a][b] += Fraction(coef) * bm[a][b]
    return out


def _principal_so_sp(L: LieAlgebraData) -> SL2Triple:
    kind = L.meta["type"]
    n = L.meta["size"]
    m = n // 2
    if kind == "so" and n % 2 == 0:
        raise LieAlgebraError("principal triple for even so is not supported")
    e_mat = _mat_zero(n)
    top = m if kind == "so" else m - 1
    for i in range(1, top + 1):
        e_mat[i - 1][i] += Fraction(1)
        e_mat[n - i - 1][n - i] -= Fraction(1)
    if kind == "sp":
        e_mat[m - 1][m] += Fraction(1)
    e = coords_of_matrix(L, e_mat)
    # h = [e, z] with [[e, z], e] = 2e, i.e. -ad(e)^2 z = 2e
    ad_e = adjoint_matrix(L, e)
    ad_e2 = [
        [sum((ad_e[i][k] * ad_e[k][j] for k in range(L.dim)), Fraction(0)) for j in range(L.dim)]
        for i in range(L.dim)
    ]
    z = linalg.solve([[-x for x in row] for row in ad_e2], [2 * x for x in e])
    if z is None:
        raise LieAlgebraError("cannot complete nilpotent to a triple (h step)")
    h = bracket(L, e, z)
    # f solves [e, f] = h and [h, f] = -2f simultaneously
    ad_h = adjoint_matrix(L, h)
    stacked = [row[:] for row in ad_e]
    for i in range(L.dim):
        row = ad_h[i][:]
        row[i] += Fraction(2)
        stacked.append(row)
    rhs = h + zero_vector(L.dim)
    f = linalg.solve(stacked, rhs)
    if f is None:
        raise LieAlgebraError("cannot complete nilpotent to a triple (f step)")
    return SL2Triple(e=e, h=h, f=f)


def verify_sl2(L: LieAlgebraData, t: SL2Triple) -> None:
    if bracket(L, t.h, t.e) != [2 * x for x in t.e]:
        raise LieAlgebraError("[h,e] != 2e")
    if bracket(L, t.h, t.f) != [-2 * x for x in t.f]:
        raise LieAlgebraError("[h,f] != -2f")
    if bracket(L, t.e, t.f) != t.h:
        raise LieAlgebraError("[e,f] != h")


def principal_sl2(L: LieAlgebraData) -> SL2Triple:
    """Principal sl2-triple (e regular nilpotent), verified exactly."""
    kind = L.meta.get("type")
    if kind in ("gl", "sl"):
        t = _principal_gl_sl(L)
    elif kind in ("so", "sp"):
        t = _principal_so_sp(L)
    else:
        raise LieAlgebraError(f"no principal triple for type {kind!r}")
    verify_sl2(L, t)
    if not is_regular_point(L, dual_of(L, t.e)):
        raise LieAlgebraError("principal nilpotent is not regular (bug)")
    return t


def kostant_slice(L: LieAlgebraData, t: SL2Triple) -> SliceChart:
    """Chart of e + g^f attached to the triple t.

    The pairing Gram matrix between g^e and g^f must be invertible; this is
    the nondegeneracy that makes the slice transversal.
    """
    verify_sl2(L, t)
    directions = linalg.nullspace(adjoint_matrix(L, t.f))
    ge_basis = linalg.nullspace(adjoint_matrix(L, t.e))
    if len(directions) != len(ge_basis):
        raise LieAlgebraError("dim g^f != dim g^e (bug)")
    n = L.dim
    gram = [
        [
            sum(
                (w[i] * L.form[i][j] * v[j] for i in range(n) for j in range(n)),
                Fraction(0),
            )
            for v in directions
        ]
        for w in ge_basis
    ]
    if linalg.rank(gram) != len(directions):
        raise LieAlgebraError("degenerate g^e x g^f pairing: form is not invariant")
    return SliceChart(base_point=t.e, directions=directions, ge_basis=ge_basis, pairing_gram=gram)


# ---------------------------------------------------------------------------
# JSON round trip
# ---------------------------------------------------------------------------


def algebra_to_json_dict(L: LieAlgebraData) -> dict:
    triplets = []
    for (i, j) in sorted(L.structure):
        for k in sorted(L.structure[(i, j)]):
            c = L.structure[(i, j)][k]
            triplets.append([i, j, k, c.numerator, c.denominator])
    return {
        "dim": L.dim,
        "labels": list(L.basis_labels),
        "structure": triplets,
        "form": [[f"{x.numerator}/{x.denominator}" for x in row] for row in L.form],
        "meta": dict(L.meta),
    }


def algebra_from_json_dict(data: dict) -> LieAlgebraData:
    structure: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i, j, k, num, den in data["structure"]:
        structure.setdefault((i, j), {})[k] = Fraction(num, den)
    form = [[Fraction(x) for x in row] for row in data["form"]]
    return LieAlgebraData(
        dim=data["dim"],
        basis_labels=list(data["labels"]),
        structure=structure,
        form=form,
        meta=dict(data.get("meta", {})),
    )


def algebra_to_json(L: LieAlgebraData) -> str:
    return json.dumps(algebra_to_json_dict(L), sort_keys=True)


def algebra_from_json(text: str) -> LieAlgebraData:
    return algebra_from_json_dict(json.loads(text))
