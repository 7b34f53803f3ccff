#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pastrev/factored.hpp"
#include "pastrev/poly.hpp"

#include <stdexcept>

using namespace pastrev;

namespace {

using Q = Rational;
using QP = Poly<Q>;
using G = GaussianRational;
using GP = Poly<G>;

QP qp(std::initializer_list<long> cs) {
    std::vector<Q> v;
    for (long c : cs) v.emplace_back(c);
    return QP(std::move(v));
}

// Brute-force pasting oracle, independent of the shift-based implementation.
QP paste_oracle(const QP& p, const QP& q) {
    QP shift = pow(QP::variable(), q.cipher());
    return shift * p + q;
}

}  // namespace

TEST_CASE("cipher counts coefficients") {
    CHECK(qp({1, 2, 3}).cipher() == 3);  // 3x^2+2x+1
    CHECK(qp({7}).cipher() == 1);
    CHECK(qp({1, 0, 0, 0, 0, 1}).cipher() == 6);  // x^5+1
    CHECK_THROWS_AS(QP().cipher(), std::domain_error);
}

TEST_CASE("reverse flips the coefficient sequence") {
    CHECK(reverse(qp({1, 2, 3})) == qp({3, 2, 1}));
    CHECK(reverse(qp({3, 2})) == qp({2, 3}));
    // x * P(1/x) for P = 2x+3 is 3x+2
    QP p = qp({3, 2});
    QP rev = reverse(p);
    for (long t = 1; t <= 5; ++t)
        CHECK(rev.eval(Q(t)) == Q(t) * p.eval(Q(1) / Q(t)));
    CHECK(reverse(reverse(qp({7, 4, -1, 5}))) == qp({7, 4, -1, 5}));
}

TEST_CASE("reverse refuses polynomials divisible by x") {
    CHECK_THROWS_AS(reverse(qp({0, 1, 1})), std::domain_error);
    CHECK_THROWS_AS(reverse(QP()), std::domain_error);
    CHECK_THROWS_AS(classify(qp({0, 1})), std::domain_error);
}

TEST_CASE("raw flip normalizes what reverse refuses") {
    CHECK(raw_coefficient_flip(qp({0, 1, 1})) == qp({1, 1}));   // x^2+x -> x+1
    CHECK(raw_coefficient_flip(qp({1, 2, 3})) == qp({3, 2, 1}));
    CHECK(raw_coefficient_flip(qp({0, 0, 0, 1})) == qp({1}));   // x^3 -> 1
    CHECK_THROWS_AS(raw_coefficient_flip(QP()), std::domain_error);
}

TEST_CASE("paste is shift-then-add") {
    // (x+2) paste (2x+1): x^2 (x+2) + 2x+1
    QP p = qp({2, 1}), q = qp({1, 2});
    CHECK(paste(p, q) == qp({1, 2, 2, 1}));
    CHECK(paste(p, q) == paste_oracle(p, q));
    CHECK(paste(qp({1}), qp({1})) == qp({1, 1}));  // 1 paste 1 = x+1
    CHECK_THROWS_AS(paste(QP(), qp({1})), std::domain_error);
    CHECK_THROWS_AS(paste(qp({1}), QP()), std::domain_error);
}

TEST_CASE("paste associativity on concrete triples") {
    QP p = qp({1, 1}), q = qp({2}), r = qp({0, 3});
    QP lhs = paste(paste(p, q), r);
    QP rhs = paste(p, paste(q, r));
    CHECK(lhs == rhs);
    CHECK(lhs == paste_oracle(paste_oracle(p, q), r));
}

TEST_CASE("paste_fold folds left") {
    std::vector<QP> ones{qp({1}), qp({1}), qp({1})};
    CHECK(paste_fold(ones) == qp({1, 1, 1}));  // x^2+x+1
    std::vector<QP> xs{QP::variable(), qp({1})};
    CHECK(paste_fold(xs) == qp({1, 0, 1}));  // x^2+1, by x^cipher(1) * x + 1
    CHECK_THROWS_AS(paste_fold(std::vector<QP>{}), std::domain_error);
}

TEST_CASE("classification by exact flip comparison") {
    CHECK(classify(qp({1, 1})) == Symmetry::palindromic);
    CHECK(classify(qp({-1, 1})) == Symmetry::antipalindromic);
    CHECK(classify(qp({2, -5, 2})) == Symmetry::palindromic);
    CHECK(classify(qp({1, 2})) == Symmetry::neither);
}

TEST_CASE("expand multiplies out linear factors") {
    FactoredLinear<Q> f{Q(1), {{Q(1), Q(2)}, {Q(2), Q(1)}}};
    CHECK(expand(f) == qp({2, -5, 2}));  // (x-2)(2x-1)
    CHECK(expand(FactoredLinear<Q>{Q(1), {}}) == qp({1}));
    CHECK(expand(FactoredLinear<Q>{Q(-3), {{Q(1), Q(0)}}}) == qp({0, -3}));  // -3x
}

TEST_CASE("factored reversal swaps factor entries and tracks the sign") {
    FactoredLinear<Q> f{Q(1), {{Q(1), Q(2)}, {Q(2), Q(1)}}};
    FactoredLinear<Q> r = reverse_factored(f);
    CHECK(r.unit == Q(1));  // (-1)^2
    CHECK(expand(r) == qp({2, -5, 2}));  // self-reverse polynomial
    CHECK(expand(r) == reverse(expand(f)));

    FactoredLinear<Q> g{Q(1), {{Q(1), Q(-1)}}};  // x+1
    FactoredLinear<Q> gr = reverse_factored(g);
    CHECK(gr.unit == Q(-1));
    CHECK(expand(gr) == qp({1, 1}));
    CHECK(expand(gr) == reverse(expand(g)));

    // reverse(2x-3) = x(2/x - 3) = -3x+2: the flipped factor carries the sign
    FactoredLinear<Q> h{Q(1), {{Q(2), Q(3)}}};
    CHECK(expand(reverse_factored(h)) == qp({2, -3}));
    CHECK(expand(reverse_factored(h)) == reverse(expand(h)));

    FactoredLinear<Q> bad{Q(1), {{Q(1), Q(0)}}};  // root at zero
    CHECK_THROWS_AS(reverse_factored(bad), std::domain_error);
}

TEST_CASE("root pairing matches reciprocal roots") {
    // 2x^2-5x+2 has roots 2 and 1/2
    FactoredLinear<Q> f{Q(1), {{Q(1), Q(2)}, {Q(2), Q(1)}}};
    RootPairing<Q> rp = root_pairing(f);
    REQUIRE(rp.pairs.size() == 1);
    CHECK(rp.pairs[0].first * rp.pairs[0].second == Q(1));
    CHECK_FALSE(rp.unpaired.has_value());

    // x+1: even cipher, palindromic, forced root -1
    FactoredLinear<Q> pal{Q(1), {{Q(1), Q(-1)}}};
    RootPairing<Q> rp2 = root_pairing(pal);
    CHECK(rp2.pairs.empty());
    REQUIRE(rp2.unpaired.has_value());
    CHECK(*rp2.unpaired == Q(-1));

    // x-1: even cipher, antipalindromic, forced root +1
    FactoredLinear<Q> anti{Q(1), {{Q(1), Q(1)}}};
    RootPairing<Q> rp3 = root_pairing(anti);
    REQUIRE(rp3.unpaired.has_value());
    CHECK(*rp3.unpaired == Q(1));
}

TEST_CASE("root pairing rejects inputs outside its domain") {
    FactoredLinear<Q> neither{Q(1), {{Q(1), Q(2)}}};  // x-2 is neither
    CHECK_THROWS_AS(root_pairing(neither), std::domain_error);
    FactoredLinear<Q> infinite{Q(1), {{Q(0), Q(2)}, {Q(1), Q(-1)}}};
    CHECK_THROWS_AS(root_pairing(infinite), std::domain_error);
}

TEST_CASE("divides_at evaluates at the root") {
    // (x+2) paste reverse(x+2) = x^3+2x^2+2x+1, divisible by x+1
    QP p = qp({2, 1});
    QP s = paste(p, reverse(p));
    CHECK(s == qp({1, 2, 2, 1}));
    CHECK(s.eval(Q(-1)) == Q(0));
    CHECK(divides_at(s, Q(-1)));
    CHECK_FALSE(divides_at(qp({1, 1}), Q(1)));  // (x+1)(1) = 2
    CHECK(divides_at(qp({-1, 0, 1}), Q(1)));    // x^2-1 at 1
}

TEST_CASE("reciprocal conjugates then flips") {
    GP p{G(2), G(Rational(1), Rational(1))};  // (1+i)x + 2
    GP star = reciprocal_conj(p);
    CHECK(star == GP{G(Rational(1), Rational(-1)), G(2)});  // 2x + (1-i)

    GP real{G(1), G(2), G(3)};  // 3x^2+2x+1
    CHECK(reciprocal_conj(real) == reverse(real));

    GP q{G(5), G(Rational(2), Rational(1))};  // (2+i)x+5
    CHECK(reciprocal_conj(reciprocal_conj(q)) == q);
}

TEST_CASE("arithmetic normalizes leading zeros") {
    CHECK(qp({1, 1}) * qp({-1, 1}) == qp({-1, 0, 1}));
    CHECK(qp({1, 1}) + qp({-1, 1}) == qp({0, 2}));
    CHECK(qp({2, -5, 2}) * qp({1, 1}) == qp({2, -3, -3, 2}));
    CHECK((qp({1, 2}) - qp({1, 2})).is_zero());
    CHECK((qp({1, 1}) + qp({1, -1})).cipher() == 1);  // leading cancellation trims
}

TEST_CASE("polynomial euclidean division") {
    QP a = qp({-1, 0, 1});  // x^2-1
    QP b = qp({1, 1});      // x+1
    auto [q, r] = divmod(a, b);
    CHECK(q == qp({-1, 1}));
    CHECK(r.is_zero());
    CHECK(q * b + r == a);
    CHECK_THROWS_AS(divmod(a, QP()), std::domain_error);
    CHECK(gcd_poly(a, b) == b);  // both monic
}

TEST_CASE("canonical rendering") {
    CHECK(qp({1, 2, 3}).str() == "3x^2+2x+1");
    CHECK(qp({-3, 0, 1}).str() == "x^2-3");
    CHECK(qp({2, -1}).str() == "-x+2");
    CHECK(QP().str() == "0");
    CHECK(qp({0, 1}).str() == "x");
    GP gx{G(5), G(Rational(2), Rational(1))};
    CHECK(gx.str() == "(2+i)x+5");
}
