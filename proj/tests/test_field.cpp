#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pastrev/gaussian.hpp"
#include "pastrev/rational.hpp"
#include "pastrev/rational_func.hpp"

#include <stdexcept>

using namespace pastrev;

TEST_CASE("rational arithmetic stays canonical") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK((Rational(3, -6)).den() == 2);  // denominator normalized positive
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == 1);
    CHECK(Rational(7, 3) * Rational(3, 7) == Rational(1));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(5) / Rational(2) == Rational(5, 2));
}

TEST_CASE("rational division by zero is a domain error") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("rational text forms") {
    CHECK(Rational(5, 2).str() == "5/2");
    CHECK(Rational(-5, 2).str() == "-5/2");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("gaussian rational products and conjugation") {
    GaussianRational i(Rational(0), Rational(1));
    CHECK((GaussianRational(1) + i) * (GaussianRational(1) - i) == GaussianRational(2));
    CHECK(i * i == GaussianRational(-1));

    GaussianRational z(Rational(3), Rational(2));
    CHECK(conj(z) == GaussianRational(Rational(3), Rational(-2)));
    CHECK(conj(GaussianRational(5)) == GaussianRational(5));
    GaussianRational w(Rational(1), Rational(-7));
    CHECK(conj(conj(w)) == w);
}

TEST_CASE("gaussian division uses the conjugate") {
    GaussianRational z(Rational(1), Rational(1));
    CHECK(z / z == GaussianRational(1));
    CHECK(GaussianRational(2) / z == GaussianRational(Rational(1), Rational(-1)));
    CHECK_THROWS_AS(z / GaussianRational(0), std::domain_error);
}

TEST_CASE("gaussian text forms") {
    CHECK(GaussianRational(Rational(3), Rational(2)).str() == "3+2i");
    CHECK(GaussianRational(Rational(3), Rational(-2)).str() == "3-2i");
    CHECK(GaussianRational(Rational(0), Rational(2)).str() == "2i");
    CHECK(GaussianRational(Rational(0), Rational(1)).str() == "i");
    CHECK(GaussianRational(Rational(0), Rational(-1)).str() == "-i");
    CHECK(GaussianRational(Rational(5)).str() == "5");
    CHECK(GaussianRational(Rational(1, 2), Rational(1, 2)).str() == "1/2+1/2i");
}

TEST_CASE("rational function reduction and cancellation") {
    Poly<Rational> x = Poly<Rational>::variable();
    Poly<Rational> one(Rational(1));
    // (x/(x+1)) * ((x+1)/x) = 1
    RationalFunc a(x, x + one);
    RationalFunc b(x + one, x);
    CHECK(a * b == RationalFunc(1));
    CHECK((a * b).str() == "1");

    // reduction documents itself: (x^2-1)/(x+1) = x-1
    RationalFunc c(x * x - one, x + one);
    CHECK(c == RationalFunc(x - one));
}

TEST_CASE("rational function denominators are monic") {
    Poly<Rational> x = Poly<Rational>::variable();
    RationalFunc f(Poly<Rational>(Rational(3)), x * Rational(2));
    CHECK(f.den().leading() == Rational(1));
    CHECK(f == RationalFunc(Poly<Rational>(Rational(3, 2)), x));
    CHECK_THROWS_AS(RationalFunc(x, Poly<Rational>()), std::domain_error);
}
