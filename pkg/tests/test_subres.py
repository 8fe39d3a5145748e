import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P, PY
from oracles import fraction_det, leibniz_det, resultant_oracle, textbook_subresultant
from gensubres.poly import Poly, content_primitive, full_reduce, poly_divides, proportional
from gensubres.prs import Algorithm, classic_gcd, run_traced
from gensubres.randpoly import random_poly, random_primitive_full
from gensubres.ring import ZY, ZZ, NotFull, YPoly
from gensubres.subres import (
    DetMatrix,
    bareiss_det,
    build_mk,
    build_sk,
    det_poly,
    extreme_coefficients,
    free_column_det,
    gcd_degree_detect,
    gcd_degree_profile,
    match_split,
    sylvester_matrix,
    verify_prs_det_correspondence,
)


def M(rows, ring=ZZ):
    return DetMatrix(tuple(tuple(ring.coerce(x) for x in r) for r in rows), ring)


@pytest.mark.parametrize("rows, det", [
    ([[1, 2], [3, 4]], -2),
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1),
    ([[5]], 5),
    ([[0, 1], [1, 0]], -1),
    ([[0, 2, 1], [0, 3, 4], [0, 1, 1]], 0),
    ([[0, 0, 2], [0, 3, 0], [4, 0, 0]], -24),
])
def test_bareiss_examples(rows, det):
    assert leibniz_det(rows) == det
    assert bareiss_det(M(rows)) == det


def test_bareiss_empty_and_non_square():
    assert bareiss_det(DetMatrix((), ZZ)) == 1
    with pytest.raises(ValueError):
        bareiss_det(M([[1, 2]]))


def test_bareiss_matches_cofactor_expansion_exhaustively():
    rng = random.Random(11)
    for n in range(1, 6):
        for _ in range(60):
            rows = [[rng.choice([0, 0, rng.randint(-9, 9)]) for _ in range(n)]
                    for _ in range(n)]
            assert bareiss_det(M(rows)) == leibniz_det(rows)


def test_bareiss_over_zy_matches_cofactor_expansion():
    rng = random.Random(12)
    for n in range(1, 5):
        for _ in range(10):
            rows = [[YPoly([rng.randint(-3, 3) for _ in range(rng.randint(0, 3))])
                     for _ in range(n)] for _ in range(n)]
            assert bareiss_det(M(rows, ZY)) == leibniz_det(rows, YPoly([1]))


def test_sylvester_examples():
    m = sylvester_matrix(P("x+1"), P("x-1"))
    assert m.tolist() == [[1, 1], [1, -1]]
    assert bareiss_det(m) == -2
    assert abs(bareiss_det(sylvester_matrix(P("x^2-1"), P("x-2")))) == 3
    f = P("x^2+3*x-1")
    assert bareiss_det(sylvester_matrix(f, f)) == 0
    with pytest.raises(ValueError):
        sylvester_matrix(P("3"), P("4"))


def test_build_mk_examples():
    assert build_mk(P("x^2+3*x+2"), P("x+1"), 0).tolist() == [[1, 3, 2], [1, 1, 0], [0, 1, 1]]
    assert build_mk(P("x^2+1"), P("x+1"), 0).tolist() == [[1, 0, 1], [1, 1, 0], [0, 1, 1]]
    m = build_mk(P("x^6+x+1"), P("x^4+2"), 2)
    assert m.ncols - m.nrows + 1 == 2
    assert m.nrows == 2 * 2 + 2 + 2 and m.ncols == 6 + 2 + 1


def test_build_mk_errors():
    with pytest.raises(ValueError):
        build_mk(P("x^2+1"), P("x+1"), 1)
    with pytest.raises(NotFull):
        build_mk(P("x^2+x"), P("x+1"), 0)


def test_build_sk_shapes():
    f, g = P("x^2+3*x+1"), P("2*x-1")
    assert build_sk(f, g, 0).rows == sylvester_matrix(f, g).rows
    assert (build_sk(f, g, 0).nrows, build_sk(f, g, 0).ncols) == (3, 3)
    f, g = P("x^5+x+1"), P("x^3-x+2")
    for k in range(3):
        m = build_sk(f, g, k)
        assert m.ncols - m.nrows + 1 == k + 1
        assert m.rows == build_mk(f, g, g.degree - 1 - k).rows


def test_det_poly_examples():
    m0 = build_mk(P("x^2+3*x+2"), P("x+1"), 0)
    assert fraction_det(m0.tolist()) == 0
    assert det_poly(m0, 2).poly == Poly()
    m0 = build_mk(P("x^2+1"), P("x+1"), 0)
    sp = det_poly(m0, 2)
    assert sp.poly in (P("2"), P("-2"))
    assert P("x^2+1").evaluate(-1) == 2


def test_det_poly_split_range():
    m = build_sk(P("x^3+1"), P("x^2+x+1"), 1)
    with pytest.raises(ValueError):
        det_poly(m, m.nrows)


def test_classical_split_matches_textbook_small():
    f, g = P("2*x^4-x^3+5*x+3"), P("x^3+4*x^2-2")
    for k in range(g.degree):
        m = build_sk(f, g, k)
        got = det_poly(m, m.nrows - 1)
        assert list(got.poly.coeffs) == textbook_subresultant(list(f.coeffs), list(g.coeffs), k)
        assert got.flc == got.poly[k]


def test_gcd_degree_detect_examples():
    assert gcd_degree_detect(P("x^2+3*x+2"), P("x^2+4*x+3")) == 1
    assert gcd_degree_detect(P("x^2+1"), P("x+1")) == 0
    f = P("x^3+2*x^2-x+5")
    assert gcd_degree_detect(f, f) == 3
    assert gcd_degree_detect(P("x^3+1"), P("4")) == 0


def test_gcd_degree_detect_needs_full():
    with pytest.raises(NotFull):
        gcd_degree_detect(P("x^2+x"), P("x+1"))


def test_gcd_degree_profile_both_variants():
    f = P("x^2+3*x+2") * P("x^2-x+3")
    g = P("x^2+3*x+2") * P("x+5")
    profile = gcd_degree_profile(f, g)
    assert [bool(fl) or bool(ft) for _, fl, ft in profile] == [False, False, True]
    assert gcd_degree_detect(f, g) == gcd_degree_detect(f, g, strict=True) == 2


def test_verify_examples():
    assert verify_prs_det_correspondence(P("x^2+1"), P("x+1"))
    assert verify_prs_det_correspondence(P("x+2") * P("x^2+3*x+7"), P("x+2") * P("2*x-3"))
    f = P("x^2+x+1")
    assert verify_prs_det_correspondence(f * P("x+3"), f)


def test_verify_gcd_degree_one_matches_gcd():
    w = P("x+2")
    f, g = w * P("x^2+3*x+7"), w * P("2*x^2-3*x+1")
    _, u0 = content_primitive(f)
    _, v0 = content_primitive(g)
    _, trace = run_traced(u0, v0)
    last_step = [s for s in trace.steps if not s.terminal][-1]
    m = build_mk(u0, v0, v0.degree - last_step.deg_v)
    a = match_split(m, trace.remainders[-1])
    assert a is not None
    stripped = full_reduce(det_poly(m, a).poly)[0]
    assert proportional(stripped, w)


def test_match_split_rejects_wrong_target():
    m = build_mk(P("x^2+1"), P("x+1"), 0)
    assert match_split(m, P("x+1")) is None


def _random_full_pair(rng, max_deg, bits=3):
    f = random_poly(rng, rng.randint(2, max_deg), bits=bits)
    g = random_poly(rng, rng.randint(1, f.degree), bits=bits)
    return f, g


def test_band_structure_membership_and_vanishing():
    rng = random.Random(13)
    for _ in range(25):
        w = random_poly(rng, rng.randint(0, 2), bits=2)
        f0, g0 = _random_full_pair(rng, 4)
        f, g = w * f0, w * g0
        if f.degree < g.degree:
            f, g = g, f
        d = classic_gcd(f, g).degree
        for k in range(g.degree):
            m = build_sk(f, g, k)
            for a in range(m.nrows):
                sp = det_poly(m, a)
                right = m.nrows - 1 - a
                p = sp.poly
                if k < d:
                    assert not p
                    continue
                if not p:
                    continue
                assert p.trail_degree >= right
                assert p.degree <= right + k
                assert poly_divides(classic_gcd(f, g), full_reduce(p)[0])


def test_remainders_equal_split_determinants_up_to_sign():
    rng = random.Random(14)
    for _ in range(25):
        f, g = _random_full_pair(rng, 6)
        _, u0 = content_primitive(f)
        _, v0 = content_primitive(g)
        if u0.degree < v0.degree:
            u0, v0 = v0, u0
        _, trace = run_traced(u0, v0)
        live = [s for s in trace.steps if not s.terminal]
        for step, r in zip(live, trace.remainders):
            m = build_mk(u0, v0, v0.degree - step.deg_v)
            hits = []
            for a in range(m.nrows):
                p = det_poly(m, a).poly
                if p:
                    hits.append(full_reduce(p)[0] in (r, -r))
            assert any(hits)


def test_h_is_an_extreme_split_determinant():
    # after the first step, |h| shows up as flc or ftc of M_k with k = deg g - 1 - deg u
    rng = random.Random(15)
    checked = 0
    for _ in range(30):
        f, g = _random_full_pair(rng, 6)
        _, u0 = content_primitive(f)
        _, v0 = content_primitive(g)
        if u0.degree < v0.degree:
            u0, v0 = v0, u0
        _, trace = run_traced(u0, v0)
        for step in trace.steps:
            if step.terminal or step.deg_v >= v0.degree:
                continue
            m = build_mk(u0, v0, v0.degree - 1 - step.deg_v)
            values = set()
            for a in range(m.nrows):
                values.update(abs(x) for x in extreme_coefficients(m, a))
            assert abs(step.h) in values
            checked += 1
    assert checked > 10


def test_correspondence_over_zy():
    f = PY("(y+1)*x^3+(2)*x^2-x+(y)")
    g = PY("x^2+(y)*x-1")
    assert verify_prs_det_correspondence(f, g)


coeffs = st.lists(st.integers(-6, 6), min_size=2, max_size=6).filter(
    lambda c: c[0] != 0 and c[-1] != 0)


@settings(max_examples=40, deadline=None)
@given(coeffs, coeffs)
def test_classical_anchor_property(a, b):
    f, g = Poly(a), Poly(b)
    if f.degree < g.degree:
        f, g = g, f
    for k in range(g.degree):
        m = build_sk(f, g, k)
        sp = det_poly(m, m.nrows - 1)
        assert list(sp.poly.coeffs) == textbook_subresultant(list(f.coeffs), list(g.coeffs), k)


@settings(max_examples=40, deadline=None)
@given(coeffs, coeffs)
def test_detector_matches_gcd_degree(a, b):
    f, g = Poly(a), Poly(b)
    assert gcd_degree_detect(f, g) == classic_gcd(f, g).degree
    if resultant_oracle(a, b) != 0:
        assert gcd_degree_detect(f, g) == 0


def test_every_split_nonzero_at_gcd_degree():
    rng = random.Random(16)
    for i in range(80):
        d = i % 4
        w = random_poly(rng, d, bits=3)
        f0, g0 = _random_full_pair(rng, 3, bits=4)
        f, g = w * f0, w * g0
        if f.degree < g.degree:
            f, g = g, f
        if classic_gcd(f, g).degree != d or d >= g.degree:
            continue
        m = build_sk(f, g, d)
        for a in range(m.nrows):
            flc, ftc = extreme_coefficients(m, a)
            assert flc and ftc
