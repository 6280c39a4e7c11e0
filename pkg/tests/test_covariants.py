import pytest

from g9cov import reference
from g9cov.covariants import covariance_check
from g9cov.cyclo import CycNum
from g9cov.poly import BiPoly, fundamental_invariants

GAMMA, THETA, DELTA, PHI = fundamental_invariants()


def test_solve_degree_examples(engine):
    sl = engine.slice(3, 6)
    assert sl.dim == 1
    assert sl.basis[0].components[0] in (GAMMA, GAMMA.normalized(), -GAMMA)

    sl = engine.slice(9, 1)
    assert sl.dim == 1
    assert sl.basis[0].to_text() == ["x", "y"]

    assert engine.slice(9, 5).dim == 0


def test_monomial_covariant_of_sym3(engine):
    sl = engine.slice(29, 3)
    assert sl.dim == 1
    assert sl.basis[0].to_text() == ["x^3", "x^2*y", "x*y^2", "y^3"]


def test_reduced_solver_equals_plain_system(engine):
    # the pruned solver must reproduce the plain T+D nullspace basis exactly
    samples = [(3, 6), (9, 1), (9, 5), (9, 9), (9, 2), (21, 2), (21, 10),
               (19, 4), (29, 3), (1, 8), (17, 8), (31, 9), (25, 6), (12, 11)]
    for rid, d in samples:
        fast = engine.slice(rid, d)
        dense = engine.slice_dense(rid, d)
        assert fast.basis == dense.basis, (rid, d)


def test_full_group_covariance_on_minimal_slices(sess):
    # generator constraints suffice; certify against all 192 elements anyway
    for r in sess.reps:
        res = sess.engine.molien(r.rid)
        d = next(d for d, c in enumerate(res.series) if c)
        vec = sess.engine.slice(r.rid, d).basis[0]
        mats = sess.mats[r.rid]
        for e in sess.table.elements:
            assert covariance_check(vec, mats[e.index], e.mat), (r.rid, e.index)


def test_extraction_degrees_examples(engine):
    assert engine.generators(21).degrees == (2, 10, 18)
    assert engine.generators(13).degrees == (5, 13)
    assert engine.generators(31).degrees == (9, 9, 17, 25)


def test_extraction_degrees_all(engine):
    for rid, want in reference.GENERATOR_DEGREES.items():
        assert engine.generators(rid).degrees == tuple(sorted(want)), rid


def test_generators_are_covariants(sess):
    # spot check: every generator satisfies the defining identity on both
    # group generators (sufficiency is covered by the full-group test above)
    for rid in (9, 19, 21, 29, 32):
        mats = sess.mats[rid]
        t_idx = sess.table.lookup(sess.table.gens["T"])
        d_idx = sess.table.lookup(sess.table.gens["D"])
        for _, g in sess.engine.generators(rid).gens:
            for idx in (t_idx, d_idx):
                assert covariance_check(g, mats[idx], sess.table.elements[idx].mat)


def test_generator_normalization(engine):
    # leading coefficient 1 in component-major graded-lex coordinate order
    for rid in range(1, 33):
        for d, g in engine.generators(rid).gens:
            coords = [(j, a) for j in range(len(g)) for a in range(d, -1, -1)]
            vec = g.coeff_vector(coords)
            lead = next(v for v in vec if not v.is_zero())
            assert lead == CycNum(1)


def test_free_module_spans(engine):
    for rid in (1, 3, 9, 13, 19, 21, 25, 29, 31):
        report = engine.verify_free(rid)
        assert report["degrees_checked"] == 65


def test_det_relation_examples(engine):
    e, k, c = engine.det_relation(9)
    assert (e, k) == (1, 1) and not c.is_zero()
    assert sum(engine.generators(9).degrees) == 18

    e, k, c = engine.det_relation(25)
    assert (e, k) == (2, 3)

    e, k, c = engine.det_relation(29)
    assert (e, k) == (2, 6)
    assert sum(engine.generators(29).degrees) == 60


def test_det_relation_rejects_rank_one(engine):
    from g9cov.covariants import FactorizationError
    with pytest.raises(FactorizationError):
        engine.det_relation(3)


def test_cross_check_guards_against_wrong_molien(sess):
    # a solver/Molien disagreement must be fatal, not silent
    from dataclasses import replace
    from g9cov.covariants import CovariantEngine, CrossCheckError
    eng = CovariantEngine(sess.table, sess.reps)
    good = sess.engine.molien(3)
    series = list(good.series)
    series[6] += 1
    eng._molien[3] = replace(good, series=tuple(series))
    with pytest.raises(CrossCheckError):
        eng.slice(3, 6)


def test_det_relations_all(engine):
    for rid, (e_want, k_want) in reference.DET_EXPONENTS.items():
        e, k, c = engine.det_relation(rid)
        assert (e, k) == (e_want, k_want), rid
        assert not c.is_zero()
        degs = engine.generators(rid).degrees
        assert sum(degs) == 12 * e + 6 * k, rid


def test_tau_structure_examples(engine):
    recs = engine.tau_structure(21)
    assert [r.degree for r in recs] == [2, 10, 18]
    assert all(r.found for r in recs)
    w = recs[0].witness
    f, g, h = w.components
    assert h == f.tau() and g.tau() == g

    recs = engine.tau_structure(23)
    assert all(r.found for r in recs)
    f, g, h = recs[0].witness.components
    assert h == -f.tau() and g.tau() == -g

    assert engine.tau_structure(5) == []  # rank 1: out of pattern scope


def test_tau_structure_quadruples(engine):
    for rid in (29, 30):
        for rec in engine.tau_structure(rid):
            assert rec.found
            f, g, gt, ft = rec.witness.components
            assert gt == g.tau() and ft == f.tau()
    for rid in (31, 32):
        for rec in engine.tau_structure(rid):
            assert rec.found
            f, g, gt, ft = rec.witness.components
            assert gt == -g.tau() and ft == -f.tau()


def test_rank_one_closed_forms(engine):
    consts = engine.verify_linear_generators()
    assert set(consts) == set(range(1, 9))
    assert all(not c.is_zero() for c in consts.values())
    # rho_5 generator is delta itself, degree 12; rho_8 degree 30; rho_1 constant
    assert engine.generators(5).gens[0][1].components[0] == DELTA
    assert engine.generators(8).degrees == (30,)
    one = engine.generators(1).gens[0][1]
    assert one.degree == 0 and one.components[0] == BiPoly.constant(1)


def test_degree_zero_slices(engine):
    # only the trivial representation has constants
    for rid in range(1, 33):
        assert engine.slice(rid, 0).dim == (1 if rid == 1 else 0)
