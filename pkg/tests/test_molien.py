import pytest

from g9cov import reference
from g9cov.molien import (CutoffError, molien_series,
                          molien_series_elementwise, numerator_of)


def test_trivial_rep_series(engine):
    res = engine.molien(1)
    assert res.head(4) == [(0, 1), (8, 1), (16, 1), (24, 2)]
    assert res.numerator == ((0, 1),)


def test_natural_rep_series(engine):
    assert engine.molien(9).head(5) == [(1, 1), (9, 1), (17, 2), (25, 3), (33, 3)]


def test_sym2_series(engine):
    res = engine.molien(21)
    assert res.head(4) == [(2, 1), (10, 2), (18, 3), (26, 4)]
    assert res.numerator == ((2, 1), (10, 1), (18, 1))


def test_numerator_from_series_head():
    # independent numerator oracle on the frozen degree-41 head of rho_31:
    # n_d = c_d - c_(d-8) - c_(d-24) + c_(d-32)
    head = dict(reference.SERIES_HEADS[31])
    n = {d: head.get(d, 0) - head.get(d - 8, 0) - head.get(d - 24, 0)
         + head.get(d - 32, 0) for d in head}
    assert {d: c for d, c in n.items() if c} == {9: 2, 17: 1, 25: 1}


def test_numerators_all(engine, reps):
    for r in reps:
        res = engine.molien(r.rid)
        assert res.series[0] == (1 if r.rid == 1 else 0)
        assert sum(c for _, c in res.numerator) == r.dim
        assert all(c > 0 for _, c in res.numerator)


def test_series_heads_match_reference(engine):
    for rid, head in reference.SERIES_HEADS.items():
        assert engine.molien(rid).head(len(head)) == head, rid


def test_numerator_matches_generator_degrees(engine):
    for rid, degs in reference.GENERATOR_DEGREES.items():
        got = []
        for d, c in engine.molien(rid).numerator:
            got.extend([d] * c)
        assert tuple(got) == tuple(sorted(degs))


def test_class_sum_equals_element_sum(sess):
    for rid in (9, 29):
        rep = sess.reps[rid - 1]
        naive = molien_series_elementwise(rep, sess.table, 40, sess.mats[rid])
        assert naive == list(sess.engine.molien(rid).series[:41])


def test_cutoff_guard(sess):
    with pytest.raises(CutoffError):
        molien_series(sess.reps[0], sess.table, 40, sess.mats[1])
    # a lone coefficient above cutoff - 32 cannot be separated from the tail
    with pytest.raises(CutoffError):
        numerator_of([0] * 40 + [1] + [0] * 20, 60)
