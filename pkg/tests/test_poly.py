import random

import pytest

from g9cov.cyclo import CycNum, I_UNIT
from g9cov.group import standard_generators
from g9cov.linalg import Mat
from g9cov.poly import (BiPoly, NotDivisibleError, VecPoly,
                        fundamental_invariants)

GAMMA, THETA, DELTA, PHI = fundamental_invariants()


def rnd_poly(rng, max_exp=4, terms=4):
    return BiPoly({(rng.randint(0, max_exp), rng.randint(0, max_exp)):
                   rng.randint(-5, 5) for _ in range(terms)})


def test_invariant_literals():
    assert [p.degree() for p in (GAMMA, THETA, DELTA, PHI)] == [6, 8, 12, 24]
    assert THETA.coeff(4, 4) == CycNum(14)
    assert DELTA.coeff(8, 4) == CycNum(-33)
    assert PHI.coeff(12, 12) == CycNum(2576)
    assert GAMMA.to_text() == "-x^5*y + x*y^5"


def test_phi_identity():
    assert (PHI - (DELTA * DELTA + (GAMMA ** 4).scale(66))).is_zero()


def test_substitute_examples():
    t, d = standard_generators()
    assert THETA.substitute(t) == THETA
    assert GAMMA.substitute(d) == GAMMA.scale(I_UNIT)
    assert THETA.substitute(Mat.identity(2)) == THETA


def test_substitute_numeric_oracle():
    # float evaluation of f(gv) must agree with substitute(f, g) evaluated at v
    rng = random.Random(41)
    t, d = standard_generators()
    td = t.matmul(d)

    def fval(p, x, y):
        return sum(c.approx() * x ** a * y ** b for (a, b), c in p.terms.items())

    for g in (t, d, td):
        ga = [[g.at(i, j).approx() for j in range(2)] for i in range(2)]
        for _ in range(20):
            f = rnd_poly(rng)
            x = rng.uniform(-1, 1)
            y = rng.uniform(-1, 1)
            gx = ga[0][0] * x + ga[0][1] * y
            gy = ga[1][0] * x + ga[1][1] * y
            assert abs(fval(f.substitute(g), x, y) - fval(f, gx, gy)) < 1e-9


def test_substitution_is_ring_homomorphism():
    rng = random.Random(43)
    t, d = standard_generators()
    for _ in range(30):
        f, g = rnd_poly(rng), rnd_poly(rng)
        for a in (t, d):
            assert (f + g).substitute(a) == f.substitute(a) + g.substitute(a)
            assert (f * g).substitute(a) == f.substitute(a) * g.substitute(a)


def test_substitution_composition():
    # with the action f |-> f(g x), composing substitutions follows the
    # matrix product: f((g h) x) expands as substitute(substitute(f, g), h)
    rng = random.Random(47)
    t, d = standard_generators()
    gens = [t, d, t.matmul(d)]
    for _ in range(20):
        f = rnd_poly(rng)
        for a in gens:
            for b in gens:
                assert f.substitute(a.matmul(b)) == f.substitute(a).substitute(b)


def test_tau():
    assert GAMMA.tau() == -GAMMA
    assert THETA.tau() == THETA
    rng = random.Random(53)
    for _ in range(30):
        f, g = rnd_poly(rng), rnd_poly(rng)
        assert f.tau().tau() == f
        assert (f * g).tau() == f.tau() * g.tau()


def test_divide_exact():
    assert (GAMMA * DELTA).divide_exact(GAMMA) == DELTA
    assert (PHI - DELTA * DELTA).divide_exact(GAMMA ** 4) == BiPoly.constant(66)
    with pytest.raises(NotDivisibleError):
        THETA.divide_exact(GAMMA)
    with pytest.raises(ZeroDivisionError):
        THETA.divide_exact(BiPoly())


def test_theta_phi_fixed_by_whole_group(table):
    for e in table.elements:
        assert THETA.substitute(e.mat) == THETA
        assert PHI.substitute(e.mat) == PHI


def test_vecpoly_basics():
    v = VecPoly([BiPoly.x(), BiPoly.y()])
    assert v.degree == 1 and len(v) == 2
    w = v.mul_poly(THETA)
    assert w.degree == 9
    t, _ = standard_generators()
    assert v.substitute(t) == v.mat_apply(t)  # the defining covariant identity
    with pytest.raises(ValueError):
        VecPoly([BiPoly.x(), THETA])
    coords = [(0, 1), (0, 0), (1, 1), (1, 0)]
    assert v.coeff_vector(coords) == [CycNum(1), CycNum(0), CycNum(0), CycNum(1)]
    assert VecPoly.from_coeffs(coords, v.coeff_vector(coords), 2, 1) == v


def test_poly_text_form():
    assert DELTA.to_text() == "x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12"
    p = BiPoly({(2, 3): CycNum(1, 0, 1, 0)})
    assert p.to_text() == "(z^2+1)*x^2*y^3"
