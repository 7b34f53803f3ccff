#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace pastrev {

// Exact rational scalar backed by GMP. Canonical form: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1, so equality is structural.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) { assign(mpz_class(n), mpz_class(d)); }
    Rational(mpz_class n) : v_(std::move(n)) {}
    Rational(const mpz_class& n, const mpz_class& d) { assign(n, d); }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return sgn(v_) < 0; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    // Total order, used for deterministic canonical sorting.
    int cmp(const Rational& o) const { return ::cmp(v_, o.v_); }

    std::string str() const {
        if (den() == 1) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

private:
    void assign(const mpz_class& n, const mpz_class& d) {
        if (sgn(d) == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    mpq_class v_;
};

inline Rational conj(const Rational& a) { return a; }

inline Rational pow(const Rational& a, unsigned long e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), a.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), a.den().get_mpz_t(), e);
    return Rational(n, d);
}

}  // namespace pastrev
