from fractions import Fraction

import pytest

from argshift.centralizer_lab import (
    all_partitions,
    condition_star,
    conjecture_check,
    jordan_partition,
    nilpotent_from_partition,
    restrict_to_slice,
    sl2_from_partition,
    transport_to_centralizer,
)
from argshift.groebner import regular_sequence_verdict
from argshift.invariants import invariant_generators, verify_invariance
from argshift.liealg import (
    build_classical,
    centralizer,
    draw_regular_dual_point,
    kostant_slice,
)
from argshift.shift import mf_generators

PARTITIONS3 = [(1, 1, 1), (2, 1), (3,)]


def test_nilpotent_from_partition(algebras):
    L = algebras[("gl", 3)]
    lab = {x: i for i, x in enumerate(L.basis_labels)}
    assert not any(nilpotent_from_partition(L, (1, 1, 1)))
    e21 = nilpotent_from_partition(L, (2, 1))
    assert e21[lab["E12"]] == 1 and sum(map(abs, e21)) == 1
    e3 = nilpotent_from_partition(L, (3,))
    assert e3[lab["E12"]] == 1 and e3[lab["E23"]] == 1 and sum(map(abs, e3)) == 2


def test_nilpotent_from_partition_validates(algebras):
    L = algebras[("gl", 3)]
    with pytest.raises(ValueError):
        nilpotent_from_partition(L, (2, 2))
    with pytest.raises(ValueError):
        nilpotent_from_partition(L, (1, 2))


def test_jordan_partition_round_trip(algebras):
    L = algebras[("gl", 3)]
    for part in PARTITIONS3:
        e = nilpotent_from_partition(L, part)
        assert jordan_partition(L, e) == part
    L4 = build_classical("gl", 4)
    for part in all_partitions(4):
        e = nilpotent_from_partition(L4, part)
        assert jordan_partition(L4, e) == part


def test_jordan_partition_rejects_non_nilpotent(algebras):
    L = algebras[("gl", 3)]
    identity = [Fraction(0)] * 9
    for a in (1, 2, 3):
        identity[L.basis_labels.index(f"E{a}{a}")] = Fraction(1)
    with pytest.raises(ValueError):
        jordan_partition(L, identity)


def test_blockwise_triples(algebras):
    L = algebras[("gl", 3)]
    for part in PARTITIONS3:
        t = sl2_from_partition(L, part)  # verifies the relations internally
        assert t.e == nilpotent_from_partition(L, part)


def test_condition_star_requires_jordan_form(algebras):
    L = algebras[("gl", 3)]
    e13 = [Fraction(0)] * 9
    e13[L.basis_labels.index("E13")] = Fraction(1)  # type (2,1), wrong position
    with pytest.raises(ValueError):
        condition_star(L, e13)


def test_condition_star_rejects_non_nilpotent(algebras):
    L = algebras[("gl", 3)]
    d = [Fraction(0)] * 9
    d[L.basis_labels.index("E11")] = Fraction(1)
    with pytest.raises(ValueError):
        condition_star(L, d)


def test_restriction_for_zero_element_is_identity(algebras, families):
    from argshift.centralizer_lab import _full_chart

    L = algebras[("gl", 3)]
    chart = _full_chart(L)
    for p in families[("gl", 3)].generators:
        sr = restrict_to_slice(p, chart, L)
        # with e = 0 the substitution is x = form . t, a linear change only
        assert sr.initial_degree == p.total_degree()
        assert sr.restricted == sr.initial


def test_sl2_casimir_restriction_is_linear(algebras, families, triples):
    L = algebras[("sl", 2)]
    chart = kostant_slice(L, triples[("sl", 2)])
    sr = restrict_to_slice(families[("sl", 2)].generators[0], chart, L)
    assert sr.initial_degree == 1
    assert sr.restricted == sr.initial  # tr((e + t f)^2) = 2t(e|f): purely linear


def test_condition_star_gl3(algebras):
    L = algebras[("gl", 3)]
    expected = {
        (1, 1, 1): ([1, 2, 3], 6),
        (2, 1): ([1, 1, 2], 4),
        (3,): ([1, 1, 1], 3),
    }
    for part, (degs, b) in expected.items():
        star = condition_star(L, nilpotent_from_partition(L, part))
        assert star.partition == part
        assert star.initial_degrees == degs
        assert star.degree_sum == b == star.b_centralizer
        assert star.verdict


def test_transport_is_invariant(algebras):
    from argshift.centralizer_lab import _slice_pipeline

    L = algebras[("gl", 3)]
    pipe = _slice_pipeline(L, nilpotent_from_partition(L, (2, 1)))
    for sr in pipe.restrictions:
        q = transport_to_centralizer(sr, pipe.chart, pipe.centralizer)
        assert verify_invariance(pipe.centralizer, q)
        assert q.total_degree() == sr.initial_degree


def test_transport_identity_for_zero(algebras, families):
    from argshift.centralizer_lab import _full_chart, _restrict

    L = algebras[("gl", 3)]
    chart = _full_chart(L)
    Lc, _ = centralizer(L, [Fraction(0)] * 9)
    for p in families[("gl", 3)].generators:
        sr = _restrict(p, chart, L, source_index=0)
        assert transport_to_centralizer(sr, chart, Lc) == p


def test_conjecture_rows_gl3(algebras, gb_cache):
    L = algebras[("gl", 3)]
    expected_dims = {(1, 1, 1): 3, (2, 1): 1, (3,): 0}
    for part in PARTITIONS3:
        row = conjecture_check(L, nilpotent_from_partition(L, part), seed=42, cache_dir=gb_cache)
        assert row.partition == part
        assert row.star.verdict
        assert row.report.verdict is True
        assert row.report.ideal_dimension == expected_dims[part]
        assert row.report.generator_count == row.star.b_centralizer


def test_conjecture_zero_partition_reproduces_ambient_run(algebras, gb_cache):
    L = algebras[("gl", 3)]
    row = conjecture_check(L, nilpotent_from_partition(L, (1, 1, 1)), seed=42, cache_dir=gb_cache)
    fam = invariant_generators(L)
    xi, _ = draw_regular_dual_point(L, 42)
    mf = mf_generators(L, fam, xi)
    rep = regular_sequence_verdict(mf.polynomials(), 9, cache_dir=gb_cache)
    assert row.xi == xi
    assert row.report.to_json_dict() == rep.to_json_dict()


def test_conjecture_requires_star(algebras, monkeypatch):
    # force a failing hypothesis by corrupting the star verdict
    import argshift.centralizer_lab as cl

    L = algebras[("gl", 3)]
    e = nilpotent_from_partition(L, (2, 1))
    real = cl._slice_pipeline

    def broken(Lx, ex):
        pipe = real(Lx, ex)
        pipe.star.verdict = False
        return pipe

    monkeypatch.setattr(cl, "_slice_pipeline", broken)
    with pytest.raises(ValueError):
        conjecture_check(L, e, seed=1)


def test_all_partitions():
    assert all_partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert all_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_gl3_star_uses_power_traces(algebras):
    L = algebras[("gl", 3)]
    for part in PARTITIONS3:
        star = condition_star(L, nilpotent_from_partition(L, part))
        assert star.generator_family == "power-traces"


def test_gl4_2_1_1_needs_char_coefficients():
    # the power traces reach degree sum 6 < b = 7 here; the condition is
    # existential over generator choices and the char-poly coefficients meet it
    L = build_classical("gl", 4)
    star = condition_star(L, nilpotent_from_partition(L, (2, 1, 1)))
    assert star.verdict
    assert star.generator_family == "char-coefficients"
    assert star.degree_sum == star.b_centralizer == 7


def test_optional_singular_codim_on_star(algebras):
    L = algebras[("gl", 3)]
    star = condition_star(L, nilpotent_from_partition(L, (2, 1)), check_singular_codim=True)
    assert star.singular_codim == 3
    star3 = condition_star(L, nilpotent_from_partition(L, (3,)), check_singular_codim=True)
    assert star3.singular_codim is None  # abelian centralizer: no singular points
    default = condition_star(L, nilpotent_from_partition(L, (2, 1)))
    assert default.singular_codim is None


def test_centralizer_dims_match_slice(algebras):
    L = algebras[("gl", 3)]
    for part in PARTITIONS3:
        e = nilpotent_from_partition(L, part)
        t = sl2_from_partition(L, part)
        Lc, _ = centralizer(L, e)
        if any(e):
            chart = kostant_slice(L, t)
            assert len(chart.directions) == Lc.dim
