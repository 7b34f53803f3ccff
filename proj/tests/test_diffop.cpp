#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pastrev/diffop.hpp"

#include <stdexcept>

using namespace pastrev;

namespace {

using Q = Rational;
using G = GaussianRational;
using QP = Poly<Q>;
using COp = DiffOp<ConstRing>;
using POp = DiffOp<PolyRing>;

QP qp(std::initializer_list<long> cs) {
    std::vector<Q> v;
    for (long c : cs) v.emplace_back(c);
    return QP(std::move(v));
}

COp cop(std::initializer_list<long> cs) {
    std::vector<G> v;
    for (long c : cs) v.emplace_back(c);
    return COp(std::move(v));
}

ExpPoly expx(long s) { return exp_of_linear(G(s)); }

}  // namespace

TEST_CASE("exp-polynomials differentiate inside the class") {
    // (x e^{2x})' = (1 + 2x) e^{2x}
    ExpPoly f = ExpPoly::exponential(GPoly::monomial(G(1), 1), GPoly::monomial(G(2), 1));
    ExpPoly df = f.derivative();
    ExpPoly expect = ExpPoly::exponential(GPoly{G(1), G(2)}, GPoly::monomial(G(2), 1));
    CHECK(df == expect);

    // e^{-x^2/2} twice: (x^2 - 1) e^{-x^2/2}
    ExpPoly g = ExpPoly::exponential(GPoly(G(1)), GPoly::monomial(G(Rational(-1, 2)), 2));
    ExpPoly ddg = g.derivative().derivative();
    CHECK(ddg == ExpPoly::exponential(GPoly{G(-1), G(0), G(1)},
                                      GPoly::monomial(G(Rational(-1, 2)), 2)));

    // terms with equal exponents merge; zero amplitudes vanish
    CHECK((f - f).is_zero());
    CHECK((expx(1) + expx(1)) == ExpPoly::exponential(GPoly(G(2)), GPoly::monomial(G(1), 1)));
}

TEST_CASE("composition uses the commutation rule D a = a D + a'") {
    POp d = POp::d();
    POp x(QP::variable());
    CHECK(op_mul(d, x) == POp(std::vector<QP>{qp({1}), qp({0, 1})}));  // x D + 1
    CHECK(op_mul(d, x) - op_mul(x, d) == POp(qp({1})));                // Weyl commutator

    // (D + x)(D + 1) = D^2 + (1+x) D + x
    POp l(std::vector<QP>{qp({0, 1}), qp({1})});
    POp r(std::vector<QP>{qp({1}), qp({1})});
    CHECK(op_mul(l, r) == POp(std::vector<QP>{qp({0, 1}), qp({1, 1}), qp({1})}));

    // over constants composition is plain polynomial multiplication
    CHECK(op_mul(cop({-2, 1}), cop({-3, 1})) == cop({6, -5, 1}));
    CHECK(op_mul(cop({-2, 1}), cop({-3, 1})) == op_mul(cop({-3, 1}), cop({-2, 1})));
}

TEST_CASE("addition and reversal") {
    CHECK(op_add(cop({1, 1}), cop({-1, 1})) == cop({0, 2}));
    CHECK(op_reverse(cop({3, 2})) == cop({2, 3}));
    POp remark(std::vector<QP>{qp({1, 0, -1}), QP(), qp({1})});  // D^2 + 1 - x^2
    POp flipped = op_reverse(remark);
    CHECK(flipped == POp(std::vector<QP>{qp({1}), QP(), qp({1, 0, -1})}));  // (1-x^2) D^2 + 1
    POp pal(std::vector<QP>{qp({0, 1}), qp({2}), qp({2}), qp({0, 1})});
    CHECK(op_reverse(op_reverse(pal)) == pal);
    CHECK_THROWS_AS(op_reverse(POp(std::vector<QP>{QP(), qp({1})})), std::domain_error);
}

TEST_CASE("pasting concatenates coefficient sequences") {
    // (D+2) paste (2D+1) = D^3 + 2D^2 + 2D + 1
    CHECK(op_paste(cop({2, 1}), cop({1, 2})) == cop({1, 2, 2, 1}));
    CHECK(op_paste(cop({1}), cop({1})) == cop({1, 1}));
    COp l = cop({1, 0, 2});
    COp r = cop({3, 1});
    COp s = cop({5});
    CHECK(op_paste(op_paste(l, r), s) == op_paste(l, op_paste(r, s)));
    CHECK_THROWS_AS(op_paste(COp(), cop({1})), std::domain_error);
}

TEST_CASE("classification") {
    CHECK(op_classify(cop({1, 1})) == Symmetry::palindromic);
    CHECK(op_classify(cop({-1, 1})) == Symmetry::antipalindromic);
    POp pal(std::vector<QP>{qp({0, 1}), qp({2}), qp({2}), qp({0, 1})});  // x D^3+2D^2+2D+x
    CHECK(op_classify(pal) == Symmetry::palindromic);
    CHECK(op_classify(cop({3, 1})) == Symmetry::neither);
}

TEST_CASE("applying operators to kernel witnesses") {
    // (D + 1) e^{-x} = 0
    CHECK(apply(cop({1, 1}), expx(-1)).is_zero());
    // (D - 2) (x e^{2x}) = e^{2x}
    ExpPoly xe2x = monomial_times_exp(1, G(2));
    CHECK(apply(cop({-2, 1}), xe2x) == expx(2));
    // (D^2 + 1 - x^2) e^{-x^2/2} = 0
    POp remark(std::vector<QP>{qp({1, 0, -1}), QP(), qp({1})});
    ExpPoly bump = ExpPoly::exponential(GPoly(G(1)), GPoly::monomial(G(Rational(-1, 2)), 2));
    CHECK(apply(remark, bump).is_zero());
}

TEST_CASE("right division by a monic linear operator") {
    // D^2 + (1+x) D + x = (D + x)(D + 1), remainder 0
    POp l(std::vector<QP>{qp({0, 1}), qp({1, 1}), qp({1})});
    auto dv = right_divide_monic_linear(l, QP(Q(1)));
    CHECK(dv.quotient == POp(std::vector<QP>{qp({0, 1}), qp({1})}));
    CHECK(dv.remainder.is_zero());
    CHECK(op_mul(dv.quotient, POp::d() + POp(QP(Q(1)))) + POp(dv.remainder) == l);

    // x D^3 + 2 D^2 + 2 D + x = (x D^2 + (2-x) D + x)(D + 1)
    POp pal(std::vector<QP>{qp({0, 1}), qp({2}), qp({2}), qp({0, 1})});
    auto dv2 = right_divide_monic_linear(pal, QP(Q(1)));
    CHECK(dv2.quotient == POp(std::vector<QP>{qp({0, 1}), qp({2, -1}), qp({0, 1})}));
    CHECK(dv2.remainder.is_zero());

    // D - 1 = 1 (D + 1) - 2, and (D-1) e^{-x} = -2 e^{-x}
    COp m = cop({-1, 1});
    auto dv3 = right_divide_monic_linear(m, G(1));
    CHECK(dv3.quotient == cop({1}));
    CHECK(dv3.remainder == G(-2));
    CHECK(apply(m, expx(-1)) == expx(-1).scaled(GPoly(G(-2))));

    CHECK_THROWS_AS(right_divide_monic_linear(cop({5}), G(1)), std::domain_error);
    CHECK_THROWS_AS(right_divide_monic_linear(l, qp({0, 1})), std::domain_error);
}

TEST_CASE("constant-coefficient transfer") {
    CHECK(char_poly(cop({6, -5, 1})).str() == "x^2-5x+6");
    CHECK(char_poly(op_reverse(cop({3, 2}))) == reverse(char_poly(cop({3, 2}))));
    COp a = cop({-2, 1}), b = cop({-3, 1});
    CHECK(char_poly(op_mul(a, b)) == char_poly(a) * char_poly(b));
}

TEST_CASE("kernel exponents of factored constant operators") {
    // (D - 2): exponent 2; the reversal annihilates e^{x/2}
    std::vector<std::pair<G, G>> f{{G(1), G(2)}};
    auto ks = kernel_exponents(f);
    REQUIRE(ks.size() == 1);
    CHECK(ks[0].first == G(2));
    CHECK(ks[0].second == 1);
    COp l = expand_op_factors(f);
    CHECK(apply(l, expx(2)).is_zero());
    CHECK(apply(op_reverse(l), exp_of_linear(G(Rational(1, 2)))).is_zero());

    // (D + 1)^2: exponent -1 with multiplicity 2; x e^{-x} is annihilated
    std::vector<std::pair<G, G>> g{{G(1), G(-1)}, {G(1), G(-1)}};
    auto ks2 = kernel_exponents(g);
    REQUIRE(ks2.size() == 1);
    CHECK(ks2[0].first == G(-1));
    CHECK(ks2[0].second == 2);
    CHECK(apply(expand_op_factors(g), monomial_times_exp(1, G(-1))).is_zero());

    // palindromic D^2 + (5/2) D + 1 factors with reciprocal exponents
    std::vector<std::pair<G, G>> h{{G(1), G(-2)}, {G(1), G(Rational(-1, 2))}};
    CHECK(expand_op_factors(h) == COp(std::vector<G>{G(1), G(Rational(5, 2)), G(1)}));
    auto ks3 = kernel_exponents(h);
    REQUIRE(ks3.size() == 2);
    CHECK(ks3[0].first * ks3[1].first == G(1));

    CHECK_THROWS_AS(kernel_exponents({{G(0), G(1)}}), std::domain_error);
}

TEST_CASE("order-one log-derivative product") {
    // x D + (x^2 + 1)
    POp l(std::vector<QP>{qp({1, 0, 1}), qp({0, 1})});
    LogDerivative ld = log_derivative_product(l);
    CHECK(ld.u1 == RationalFunc(qp({-1, 0, -1}), qp({0, 1})));
    CHECK(ld.u2 == RationalFunc(qp({0, -1}), qp({1, 0, 1})));
    CHECK(ld.product == RationalFunc(1));

    LogDerivative c = log_derivative_product(cop({3, 2}));
    CHECK(c.u1 == RationalFunc(Rational(-3, 2)));
    CHECK(c.u2 == RationalFunc(Rational(-2, 3)));
    CHECK(c.product == RationalFunc(1));

    LogDerivative unit = log_derivative_product(cop({1, 1}));
    CHECK(unit.u1 == RationalFunc(Rational(-1)));
    CHECK(unit.product == RationalFunc(1));

    CHECK_THROWS_AS(log_derivative_product(cop({1, 1, 1})), std::domain_error);
    CHECK_THROWS_AS(log_derivative_product(cop({0, 1})), std::domain_error);
    // imaginary constants have no rational-function form
    CHECK_THROWS_AS(log_derivative_product(COp(std::vector<G>{G(Rational(0), Rational(1)), G(1)})),
                    std::domain_error);
}

TEST_CASE("operator rendering") {
    POp pal(std::vector<QP>{qp({0, 1}), qp({2}), qp({2}), qp({0, 1})});
    CHECK(pal.str() == "x*D^3+2*D^2+2*D+x");
    POp remark(std::vector<QP>{qp({1, 0, -1}), QP(), qp({1})});
    CHECK(remark.str() == "D^2-x^2+1");
    CHECK(op_reverse(remark).str() == "(-x^2+1)*D^2+1");
    CHECK(cop({3, 2}).str() == "2*D+3");
    CHECK(COp().str() == "0");
}
