#pragma once

#include "pastrev/rational.hpp"

#include <stdexcept>
#include <string>

namespace pastrev {

// Gaussian rational a + bi with exact components. Equality is componentwise.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        if (o.is_zero()) throw std::domain_error("gaussian rational division by zero");
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        return {(re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    GaussianRational inverse() const { return GaussianRational(1) / *this; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    // Lexicographic (re, im) total order for deterministic sorting.
    int cmp(const GaussianRational& o) const {
        int c = re_.cmp(o.re_);
        return c != 0 ? c : im_.cmp(o.im_);
    }

    // Text forms: "a", "bi", "a+bi", "a-bi"; unit imaginary parts elide the 1.
    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string im = imag_str();
        if (re_.is_zero()) return im;
        return re_.str() + (im[0] == '-' ? im : "+" + im);
    }

private:
    std::string imag_str() const {
        if (im_.is_one()) return "i";
        if ((-im_).is_one()) return "-i";
        return im_.str() + "i";
    }

    Rational re_;
    Rational im_;
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re(), -z.im()}; }

inline GaussianRational pow(const GaussianRational& a, unsigned long e) {
    GaussianRational r(1), b = a;
    while (e != 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace pastrev
