from fractions import Fraction
from math import comb

import pytest

from interpmac.errors import SpecializationCollision, UsageError
from interpmac.interpolation import (FamilyCache, FamilyKey, binom, binom_sym,
                                     closed_d, closed_e, closed_phi, e_top,
                                     g_oracle, g_recursive, gplus, gprime,
                                     mono_sym, okounkov, okounkov_value,
                                     r_sym, rprime, solve_square, _point)
from interpmac.operators import hecke, sigma_op
from interpmac.polyring import LaurentPoly
from interpmac.scalars import Scalar, qt_config, r_config
from interpmac.shapes import (enumerate_compositions, spectral_qt,
                              spectral_r, tau_point, weight)

QT = qt_config()
R = r_config()


@pytest.fixture(scope="module")
def cache():
    return FamilyCache()


def x(i, n=2, cfg=QT):
    return LaurentPoly.variable(n, i, cfg.one())


def const(c, n=2):
    return LaurentPoly.constant(n, c)


# -- frozen small polynomials (hand-solved from the vanishing conditions) --

def test_g_zero_index(cache):
    assert g_recursive((0, 0), QT, cache) == const(QT.one())
    assert g_oracle((0, 0, 0), r_config(), cache) == \
        LaurentPoly.constant(3, R.one())


def test_g01_qt(cache):
    expected = x(2) - const(QT.gen_power("t", -1))
    assert g_oracle((0, 1), QT, cache) == expected
    assert g_recursive((0, 1), QT, cache) == expected


def test_g10_qt(cache):
    q, t = QT.gen("q"), QT.gen("t")
    one = QT.one()
    cx2 = (t - one) / (q * t - one)
    c0 = -(q * t * t - one) / (t * (q * t - one))
    expected = x(1) + x(2).scale(cx2) + const(c0)
    assert g_oracle((1, 0), QT, cache) == expected


def test_g01_r(cache):
    expected = x(2, cfg=R) + const(R.gen("r"))
    assert g_oracle((0, 1), R, cache) == expected
    assert g_recursive((0, 1), R, cache) == expected


def test_g10_r(cache):
    r, one = R.gen("r"), R.one()
    expected = x(1, cfg=R) + x(2, cfg=R).scale(r / (one + r)) + \
        const(r * r / (one + r))
    assert g_recursive((1, 0), R, cache) == expected


def test_n1_falling_factorials(cache):
    # G_k(x) = (x-1)(x-q)...(x-q^{k-1}) in one variable
    q = QT.gen("q")
    xx = LaurentPoly.variable(1, 1, QT.one())
    prod = LaurentPoly.constant(1, QT.one())
    for k in range(5):
        assert g_recursive((k,), QT, cache) == prod
        assert g_oracle((k,), QT, cache) == prod
        prod = prod * (xx - LaurentPoly.constant(1, q ** k))


def test_e_top_examples(cache):
    assert e_top((0, 1), QT, cache) == x(2)
    q, t = QT.gen("q"), QT.gen("t")
    expected = x(1) + x(2).scale((t - 1) / (q * t - 1))
    assert e_top((1, 0), QT, cache) == expected
    assert e_top((0, 0), QT, cache) == const(QT.one())


def test_gprime_examples(cache):
    assert gprime((0, 1), QT, cache) == x(2) - const(QT.gen_power("t", -1))
    assert gprime((0, 1), R, cache) == x(2, cfg=R) + const(R.gen("r"))
    # one variable: vanishing at q^{-j} for j < k
    q = QT.gen("q")
    xx = LaurentPoly.variable(1, 1, QT.one())
    prod = LaurentPoly.constant(1, QT.one())
    for k in range(4):
        assert gprime((k,), QT, cache) == prod
        prod = prod * (xx - LaurentPoly.constant(1, q ** (-k)))


def test_gplus_examples(cache):
    assert gplus((0, 0), R, cache) == const(R.one())
    assert gplus((0, 1), R, cache) == x(2, cfg=R)
    # one variable: rising factorial x(x+1)...(x+k-1)
    xx = LaurentPoly.variable(1, 1, R.one())
    prod = LaurentPoly.constant(1, R.one())
    for k in range(4):
        assert gplus((k,), R, cache) == prod
        prod = prod * (xx + LaurentPoly.constant(1, R.scalar(k)))
    with pytest.raises(UsageError):
        gplus((1, 0), QT, cache)


def test_r_sym_examples(cache):
    assert r_sym((0, 0), QT, cache) == const(QT.one())
    expected = x(1) + x(2) - const(QT.one()) - const(QT.gen_power("t", -1))
    assert r_sym((1, 0), QT, cache) == expected
    # one variable the symmetric and nonsymmetric families agree
    for k in range(4):
        assert r_sym((k,), QT, cache) == g_recursive((k,), QT, cache)
    with pytest.raises(UsageError):
        r_sym((0, 1), QT, cache)


def test_rprime_examples(cache):
    assert rprime((1, 0), R, cache) == \
        x(1, cfg=R) + x(2, cfg=R) + const(R.gen("r"))
    for k in range(4):
        assert rprime((k,), R, cache) == gplus((k,), R, cache)


def test_defining_conditions_rechecked(cache):
    # normalization, degree bound, and vanishing for a nontrivial index
    alpha = (2, 1)
    g = g_recursive(alpha, QT, cache)
    assert g.total_degree() == 3
    assert g.coefficient(alpha, QT.zero()).is_one()
    for beta in enumerate_compositions(2, 3):
        if beta != alpha:
            assert g.evaluate(spectral_qt(beta, QT)).is_zero()


def test_recursion_matches_oracle(cache):
    for alpha in enumerate_compositions(2, 3):
        assert g_recursive(alpha, QT, cache) == g_oracle(alpha, QT, cache)
        assert g_recursive(alpha, R, cache) == g_oracle(alpha, R, cache)


def test_descent_choice_independence(cache):
    # any valid descent step yields the same polynomial
    for alpha, variant in [((2, 0, 1), QT), ((2, 0, 1), R), ((3, 1, 0), QT)]:
        g = g_recursive(alpha, variant, cache)
        n = len(alpha)
        for i in range(1, n):
            if alpha[i - 1] <= alpha[i]:
                continue
            swapped = list(alpha)
            swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
            sub = g_recursive(tuple(swapped), variant, cache)
            bar = spectral_qt(alpha, variant) if variant.variant == "qt" \
                else spectral_r(alpha, variant)
            if variant.variant == "qt":
                d = variant.one() - bar[i - 1] / bar[i]
                step = hecke(i, sub, variant) + \
                    sub.scale((variant.one() - variant.gen("t")) / d)
            else:
                d = bar[i - 1] - bar[i]
                step = sigma_op(i, sub, variant) + \
                    sub.scale(variant.gen("r") / d)
            assert step == g, (alpha, i)


def test_extra_vanishing(cache):
    from interpmac.shapes import contains
    for alpha in enumerate_compositions(2, 2):
        g = g_recursive(alpha, QT, cache)
        for beta in enumerate_compositions(2, 3):
            if beta != alpha and not contains(beta, alpha):
                assert g.evaluate(spectral_qt(beta, QT)).is_zero()


# -- closed-form scalars ---------------------------------------------------

def test_closed_scalars_zero_index():
    for cfg in (QT, R):
        assert closed_d((0, 0), cfg).is_one()
        assert closed_e((0, 0), cfg).is_one()
        assert closed_phi((0, 0), cfg, 5).is_one()


def test_closed_scalars_01_qt():
    q, t = QT.gen("q"), QT.gen("t")
    assert closed_d((0, 1), QT) == QT.one() - q * t * t
    assert closed_e((0, 1), QT) == t.invert() - q * t
    a = Scalar.generator("a", ("a",))
    assert closed_phi((0, 1), QT, a) == a - 1


def test_closed_scalars_01_r():
    r = R.gen("r")
    assert closed_d((0, 1), R) == 1 + 2 * r
    assert closed_e((0, 1), R) == 1 + 2 * r
    a = Scalar.generator("a", ("r", "a"))
    assert closed_phi((0, 1), R, a) == a


def test_eval_hand_instance(cache):
    # G_(0,1)(a tau) = (a-1)/t, symbolically in q, t, a
    a = Scalar.generator("a", ("q", "t", "a"))
    g = g_recursive((0, 1), QT, cache)
    value = g.evaluate(tau_point(2, QT).scale(a))
    assert value == (a - 1) * QT.gen_power("t", -1)


# -- binomial coefficients ---------------------------------------------------

def _gaussian_binomial(k, j):
    # independent oracle: Pascal recurrence [k,j]_q = [k-1,j-1] + q^j [k-1,j]
    q = Scalar.generator("q", ("q", "t"))
    table = {(0, 0): Scalar.one(("q", "t"))}
    for kk in range(1, k + 1):
        for jj in range(kk + 1):
            up_left = table.get((kk - 1, jj - 1), Scalar.zero(("q", "t")))
            up = table.get((kk - 1, jj), Scalar.zero(("q", "t")))
            table[(kk, jj)] = up_left + q ** jj * up
    return table[(k, j)]


def test_binomial_trivial_cases(cache):
    assert binom((2, 1), (2, 1), QT, cache).is_one()
    assert binom((2, 1), (0, 0), QT, cache).is_one()
    assert binom((2, 1), (2, 1), R, cache).is_one()


def test_gaussian_binomials_n1(cache):
    assert binom((2,), (1,), QT, cache) == QT.gen("q") + 1
    for k in range(5):
        for j in range(k + 1):
            assert binom((k,), (j,), QT, cache) == _gaussian_binomial(k, j), \
                (k, j)


def test_classical_binomials_n1(cache):
    assert binom((3,), (1,), R, cache) == R.scalar(3)
    for k in range(5):
        for j in range(k + 1):
            assert binom((k,), (j,), R, cache) == R.scalar(comb(k, j))


def test_inverted_binomial_specialized(cache):
    # at q0, t0 the inverted coefficient equals the plain one at 1/q0, 1/t0
    spec = qt_config(2, 3)
    rec = qt_config(Fraction(1, 2), Fraction(1, 3))
    for alpha in enumerate_compositions(2, 2):
        for beta in enumerate_compositions(2, weight(alpha)):
            lhs = binom(alpha, beta, spec, cache, inverted=True)
            rhs = binom(alpha, beta, rec, cache)
            assert lhs == rhs


def test_binom_sym_requires_partitions(cache):
    with pytest.raises(UsageError):
        binom_sym((1, 2), (0, 0), R, cache)
    assert binom_sym((2, 1), (1, 1), R, cache) == \
        r_sym((1, 1), R, cache).evaluate(spectral_r((2, 1), R)) / \
        r_sym((1, 1), R, cache).evaluate(spectral_r((1, 1), R))


# -- reciprocity --------------------------------------------------------------

def test_okounkov_n1_closed_form(cache):
    a = Scalar.generator("a", ("q", "t", "a"))
    o = okounkov((1,), QT, a, cache)
    zero = Scalar.zero(("q", "t", "a"))
    assert o.coefficient((1,), zero) == a / (a - 1)
    assert o.coefficient((0,), zero) == -1 / (a - 1)


def test_okounkov_zero_index(cache):
    a = Scalar.generator("a", ("r", "a"))
    o = okounkov((0, 0), R, a, cache)
    assert o == LaurentPoly.constant(2, Scalar.one(("r", "a")))


def test_okounkov_surplus_small(cache):
    a = Scalar.generator("a", ("r", "a"))
    alpha = (1, 0)
    o = okounkov(alpha, R, a, cache)
    for gamma in enumerate_compositions(2, 3):
        lhs = o.evaluate(_point("bar", gamma, R, cache))
        assert lhs == okounkov_value(alpha, gamma, R, a, cache)


# -- nonvanishing needed by the expansion checks ------------------------------

def test_denominators_nonvanishing(cache):
    origin2 = (QT.zero(), QT.zero())
    ones2 = (R.one(), R.one())
    for beta in enumerate_compositions(2, 3):
        assert not g_recursive(beta, QT, cache).evaluate(origin2).is_zero()
        assert not e_top(beta, QT, cache).evaluate(
            tau_point(2, QT)).is_zero()
        assert not e_top(beta, R, cache).evaluate(ones2).is_zero()


# -- exact solver ------------------------------------------------------------

def test_solve_square_small():
    one = Scalar.one()
    two = Scalar.from_fraction(2)
    five = Scalar.from_fraction(5)
    rows = [[one, two], [two, one]]
    (sol,) = solve_square(rows, [[five, Scalar.from_fraction(4)]])
    assert sol[0] == one and sol[1] == two


def test_solve_square_singular_raises():
    one = Scalar.one()
    rows = [[one, one], [one, one]]
    with pytest.raises(SpecializationCollision):
        solve_square(rows, [[one, one]], context="unit test")


def test_specialization_collision_in_families():
    bad = qt_config(2, Fraction(1, 2))
    cache = FamilyCache()
    with pytest.raises(SpecializationCollision):
        g_oracle((1, 0), bad, cache)
    with pytest.raises(SpecializationCollision):
        g_recursive((1, 0), bad, cache)


def test_mono_sym():
    m = mono_sym(3, (2, 1, 0), Scalar.one())
    assert len(m.terms) == 6
    assert m.swap_adjacent(1) == m and m.swap_adjacent(2) == m


# -- disk cache ----------------------------------------------------------------

def test_disk_cache_round_trip(tmp_path):
    store = FamilyCache(str(tmp_path))
    g = g_recursive((1, 1), QT, store)
    files = list(tmp_path.glob("*.json"))
    assert files
    fresh = FamilyCache(str(tmp_path))
    assert g_recursive((1, 1), QT, fresh) == g


def test_family_key_describe():
    fk = FamilyKey("G", "qt", (0, 1), "qt[sym]")
    assert fk.describe() == {"family": "G", "variant": "qt",
                             "index": [0, 1], "config": "qt[sym]"}
