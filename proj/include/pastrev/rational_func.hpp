#pragma once

#include "pastrev/poly.hpp"
#include "pastrev/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace pastrev {

// Reduced fraction of polynomials over the rationals: gcd(num, den) = 1 and
// the denominator is monic, so equality is structural.
class RationalFunc {
public:
    RationalFunc() = default;
    RationalFunc(long c) : num_(Poly<Rational>(Rational(c))), den_(Poly<Rational>(Rational(1))) {}
    RationalFunc(Rational c) : num_(Poly<Rational>(std::move(c))), den_(Poly<Rational>(Rational(1))) {}
    RationalFunc(Poly<Rational> num) : num_(std::move(num)), den_(Poly<Rational>(Rational(1))) {}
    RationalFunc(Poly<Rational> num, Poly<Rational> den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    const Poly<Rational>& num() const { return num_; }
    const Poly<Rational>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    RationalFunc operator-() const { return RationalFunc(-num_, den_, nocheck{}); }
    RationalFunc operator+(const RationalFunc& o) const {
        return RationalFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunc operator-(const RationalFunc& o) const { return *this + (-o); }
    RationalFunc operator*(const RationalFunc& o) const {
        return RationalFunc(num_ * o.num_, den_ * o.den_);
    }
    RationalFunc operator/(const RationalFunc& o) const {
        if (o.is_zero()) throw std::domain_error("rational function division by zero");
        return RationalFunc(num_ * o.den_, den_ * o.num_);
    }
    RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
    RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
    RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }
    RationalFunc& operator/=(const RationalFunc& o) { return *this = *this / o; }

    RationalFunc inverse() const {
        if (is_zero()) throw std::domain_error("inverse of the zero rational function");
        return RationalFunc(den_, num_);
    }

    bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunc& o) const { return !(*this == o); }

    std::string str(char var = 'x') const {
        if (den_ == Poly<Rational>(Rational(1))) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    struct nocheck {};
    RationalFunc(Poly<Rational> num, Poly<Rational> den, nocheck)
        : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<Rational>(Rational(1));
            return;
        }
        Poly<Rational> g = gcd_poly(num_, den_);
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
        Rational lead = den_.leading();
        num_ = num_ * lead.inverse();
        den_ = den_ * lead.inverse();
    }

    Poly<Rational> num_;                         // zero polynomial for the zero function
    Poly<Rational> den_{Poly<Rational>(Rational(1))};  // monic
};

}  // namespace pastrev
