"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Every check is an equality of exact values (rationals or Q(zeta_8)
numbers); there are no floating-point tolerances anywhere.  Each test
prints one PASS line on success so a -s run reads as a checklist.

Criterion 2 appears twice.  The strict row-by-row comparison against the
frozen reference character table FAILS, and is expected to: the reference
table's rows 29..31 are internally inconsistent with the reference
generator-degree tables (which fix the numbering used by this package),
see README "Known reference-table discrepancy".  The companion test pins
the exact relabeling under which all 32 rows match, so the discrepancy is
documented by a passing test rather than silently absorbed.
"""

from fractions import Fraction

from g9cov import reference
from g9cov.covariants import covariance_check
from g9cov.group import class_orders, class_sizes
from g9cov.poly import fundamental_invariants
from g9cov.reps import inner_product, verify_homomorphism

GAMMA, THETA, DELTA, PHI = fundamental_invariants()

RANK1_EXPONENTS = [0, 12, 6, 18, 12, 24, 18, 30]


def _ok(msg):
    print(f"PASS {msg}")


def test_criterion_01_group_reconstruction(sess):
    assert len(sess.table) == 192
    assert len(sess.table.classes) == 32
    assert class_sizes(sess.table) == reference.CLASS_SIZES
    assert class_orders(sess.table) == reference.CLASS_ORDERS
    _ok("criterion 1: closure has 192 elements, 32 classes, ord and |C| rows match")


def test_criterion_02_character_table_strict(sess):
    """Entry-for-entry equality with the reference table, by row index.

    EXPECTED TO FAIL on rows 29..31: the reference table prints those three
    rows in a different twist order than the numbering its own degree
    tables use.  The package follows the degree tables (criteria 5, 7, 9,
    11 all pass under this numbering); the relabeling that reconciles the
    character rows is pinned by the companion test below and documented in
    the README and in the verify CLI output.
    """
    ref = reference.character_table()
    mismatched = [i + 1 for i in range(32) if sess.chars[i] != ref[i]]
    assert mismatched == [], (
        f"rows {mismatched} differ from the reference table by row index; "
        "they match under the documented relabeling {29: 30, 30: 31, 31: 29} "
        "(reference row 29 holds chi_30, row 30 holds chi_31, row 31 holds "
        "chi_29). This is an internal inconsistency of the reference tables, "
        "not of the computed representations; see README.")
    _ok("criterion 2: character table matches entry-for-entry")


def test_criterion_02_character_table_documented_relabeling(sess):
    ref = reference.character_table()
    for i in range(32):
        if (i + 1) not in (29, 30, 31):
            assert sess.chars[i] == ref[i], f"row {i + 1}"
    relabel = {29: 30, 30: 31, 31: 29}
    assert {k: v for k, v in reference.CHARACTER_ROW_SOURCE.items() if k != v} == relabel
    for row, src in relabel.items():
        assert ref[row - 1] == sess.chars[src - 1]
        assert ref[row - 1] != sess.chars[row - 1]
    _ok("criterion 2 (documented): 29 rows match by index, 3 via the pinned relabeling")


def test_criterion_03_census_and_orthogonality(sess):
    dims = sorted(r.dim for r in sess.reps)
    assert dims == sorted([1] * 8 + [2] * 12 + [3] * 8 + [4] * 4)
    assert sum(d * d for d in dims) == 192
    for i in range(32):
        for j in range(32):
            want = Fraction(1 if i == j else 0)
            assert inner_product(sess.chars[i], sess.chars[j], sess.table) == want
    _ok("criterion 3: dimension census and all 1024 orthogonality pairs")


def test_criterion_04_homomorphism_certification(sess):
    total = 0
    for r in sess.reps:
        total += verify_homomorphism(r, sess.table, sess.mats[r.rid])
    assert total == 32 * 192 * 192
    _ok("criterion 4: 36864 ordered pairs certified for each of 32 representations")


def test_criterion_05_molien_series(sess):
    for rid in range(1, 9):
        res = sess.engine.molien(rid)
        assert res.numerator == ((RANK1_EXPONENTS[rid - 1], 1),)
    for rid, head in reference.SERIES_HEADS.items():
        res = sess.engine.molien(rid)
        assert res.head(len(head)) == head, rid
        assert all(c > 0 for _, c in res.numerator)
        assert sum(c for _, c in res.numerator) == sess.rep(rid).dim
    _ok("criterion 5: series heads and numerators match for all 32 representations")


def test_criterion_06_solver_molien_cross_validation(sess):
    points = 0
    for rid in range(1, 33):
        res = sess.engine.molien(rid)
        for d in range(0, 41):
            assert sess.engine.slice(rid, d).dim == res.coefficient(d), (rid, d)
            points += 1
    assert points == 32 * 41
    _ok("criterion 6: solver dimension equals Molien coefficient at 1312 points")


def test_criterion_07_generator_degrees(sess):
    for rid, want in reference.GENERATOR_DEGREES.items():
        got = sess.engine.generators(rid).degrees
        assert got == tuple(sorted(want)), (rid, got)
    _ok("criterion 7: generator degree multisets match the reference tables")


def test_criterion_08_freeness(sess):
    for rid in range(1, 33):
        report = sess.engine.verify_free(rid, 64)
        assert report["degrees_checked"] == 65
    _ok("criterion 8: free-module Hilbert series equals Molien to degree 64")


def test_criterion_09_determinant_relations(sess):
    for rid, (e_want, k_want) in reference.DET_EXPONENTS.items():
        e, k, c = sess.engine.det_relation(rid)
        assert (e, k) == (e_want, k_want), rid
        assert not c.is_zero()
        degs = sess.engine.generators(rid).degrees
        assert sum(degs) == 12 * e + 6 * k, rid
        if 9 <= rid <= 20:
            assert e == 1 and sum(degs) == 12 + 6 * k
        if rid >= 29:
            assert (e, k) == (2, 6) and sum(degs) == 60
    _ok("criterion 9: determinant exponents and degree identities "
        "(constants are reported, not matched: normalization-dependent)")


def test_criterion_10_invariant_identities(sess):
    assert (PHI - (DELTA * DELTA + (GAMMA ** 4).scale(66))).is_zero()
    assert GAMMA.tau() == -GAMMA
    assert THETA.tau() == THETA
    for e in sess.table.elements:
        assert THETA.substitute(e.mat) == THETA
        assert PHI.substitute(e.mat) == PHI
        chi3 = sess.mats[3][e.index].at(0, 0)
        chi5 = sess.mats[5][e.index].at(0, 0)
        assert GAMMA.substitute(e.mat) == GAMMA.scale(chi3)
        assert DELTA.substitute(e.mat) == DELTA.scale(chi5)
    _ok("criterion 10: phi identity, full-group invariance, covariance of the forms")


def test_criterion_11_tau_structure(sess):
    outcomes = {}
    for rid in range(21, 33):
        records = sess.engine.tau_structure(rid)
        assert len(records) == sess.rep(rid).dim
        outcomes[rid] = [(r.degree, r.found) for r in records]
        for r in records:
            assert r.found, f"no swap-symmetric representative: rho_{rid} degree {r.degree}"
            w = r.witness.components
            s = reference.TAU_SIGNS[rid]
            if len(w) == 3:
                assert w[2] == w[0].tau().scale(s)
                assert w[1].tau() == w[1].scale(s)
            else:
                assert w[2] == w[1].tau().scale(s)
                assert w[3] == w[0].tau().scale(s)
    assert all(found for recs in outcomes.values() for _, found in recs)
    _ok("criterion 11: swap-symmetry patterns found for every generator, "
        "with the stated sign grouping")


def test_full_group_covariance_certification(sess):
    # supporting property: a sampled slice per representation satisfies the
    # covariant identity against every one of the 192 elements
    for r in sess.reps:
        res = sess.engine.molien(r.rid)
        d = next(d for d, c in enumerate(res.series) if c)
        vec = sess.engine.slice(r.rid, d).basis[0]
        mats = sess.mats[r.rid]
        for e in sess.table.elements:
            assert covariance_check(vec, mats[e.index], e.mat)
    _ok("supporting: full-group covariance of a sampled slice per representation")
