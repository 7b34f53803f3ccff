#pragma once

#include "pastrev/gaussian.hpp"
#include "pastrev/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pastrev {

enum class Symmetry { palindromic, antipalindromic, neither };

inline const char* to_string(Symmetry s) {
    switch (s) {
        case Symmetry::palindromic: return "palindromic";
        case Symmetry::antipalindromic: return "antipalindromic";
        default: return "neither";
    }
}

// Dense univariate polynomial over an exact field K. Coefficients are stored
// constant-term first (coeffs()[k] is the coefficient of x^k), which makes
// coefficient reversal a sequence flip and pasting a shift-then-add.
// The zero polynomial is the empty sequence; otherwise the last entry is nonzero.
template <typename K>
class Poly {
public:
    Poly() = default;
    Poly(K constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    Poly(long constant) : Poly(K(constant)) {}
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { normalize(); }

    static Poly monomial(K coeff, std::size_t k) {
        if (coeff.is_zero()) return {};
        std::vector<K> c(k + 1, K(0));
        c[k] = std::move(coeff);
        return Poly(std::move(c));
    }
    static Poly variable() { return monomial(K(1), 1); }

    const std::vector<K>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    // Number of coefficients; undefined (throws) for the zero polynomial.
    std::size_t cipher() const {
        if (is_zero()) throw std::domain_error("cipher undefined for the zero polynomial");
        return c_.size();
    }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    K coeff(std::size_t k) const { return k < c_.size() ? c_[k] : K(0); }
    const K& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    K constant_term() const { return coeff(0); }

    Poly operator-() const {
        Poly r = *this;
        for (K& a : r.c_) a = -a;
        return r;
    }
    Poly operator+(const Poly& o) const {
        std::vector<K> c(std::max(c_.size(), o.c_.size()), K(0));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
        return Poly(std::move(c));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<K> c(c_.size() + o.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(c));
    }
    Poly operator*(const K& s) const {
        if (s.is_zero()) return {};
        Poly r = *this;
        for (K& a : r.c_) a *= s;
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    K eval(const K& t) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> c(c_.size() - 1, K(0));
        for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * K(static_cast<long>(k));
        return Poly(std::move(c));
    }

    // Multiplication by x^m.
    Poly shift_up(std::size_t m) const {
        if (is_zero() || m == 0) return *this;
        std::vector<K> c(c_.size() + m, K(0));
        std::copy(c_.begin(), c_.end(), c.begin() + static_cast<long>(m));
        return Poly(std::move(c));
    }

    // Canonical text form: descending powers, unit coefficients elided,
    // complex coefficients parenthesized.
    std::string str(char var = 'x') const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            std::string t = term_str(c_[k], k, var);
            if (out.empty()) {
                out = t;
            } else if (t[0] == '-') {
                out += t;
            } else {
                out += "+" + t;
            }
        }
        return out;
    }

private:
    static std::string term_str(const K& c, std::size_t k, char var) {
        std::string cs = c.str();
        bool needs_parens = cs.find('+') != std::string::npos ||
                            cs.find('-', 1) != std::string::npos || cs.find('i') != std::string::npos;
        if (k == 0) return needs_parens && cs.find('i') != std::string::npos ? "(" + cs + ")" : cs;
        std::string xs = k == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(k);
        if (c.is_one()) return xs;
        if ((-c).is_one()) return "-" + xs;
        if (needs_parens) return "(" + cs + ")" + xs;
        return cs + xs;
    }

    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

template <typename K>
Poly<K> operator*(const K& s, const Poly<K>& p) { return p * s; }

template <typename K>
std::size_t cipher(const Poly<K>& p) { return p.cipher(); }

// Coefficient reversal. Only defined when x does not divide P, i.e. the
// constant term is nonzero; then the flip needs no renormalization and
// reversing twice is the identity.
template <typename K>
Poly<K> reverse(const Poly<K>& p) {
    if (p.is_zero() || p.constant_term().is_zero())
        throw std::domain_error("reverse requires a nonzero constant term (x divides the polynomial)");
    std::vector<K> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly<K>(std::move(c));
}

// Unchecked coefficient flip: reverses the sequence and strips the zeros that
// become leading. Loses information when x divides P, which is exactly the
// behaviour the checked reverse refuses.
template <typename K>
Poly<K> raw_coefficient_flip(const Poly<K>& p) {
    if (p.is_zero()) throw std::domain_error("coefficient flip of the zero polynomial");
    std::vector<K> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly<K>(std::move(c));
}

// Pasting: x^cipher(Q) * P + Q, concatenating coefficient sequences.
template <typename K>
Poly<K> paste(const Poly<K>& p, const Poly<K>& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("paste requires nonzero polynomials");
    return p.shift_up(q.cipher()) + q;
}

template <typename K>
Poly<K> paste_fold(std::span<const Poly<K>> ps) {
    if (ps.empty()) throw std::domain_error("paste_fold of an empty sequence");
    Poly<K> acc = ps[0];
    for (std::size_t i = 1; i < ps.size(); ++i) acc = paste(acc, ps[i]);
    return acc;
}

template <typename K>
Poly<K> paste_fold(const std::vector<Poly<K>>& ps) {
    return paste_fold(std::span<const Poly<K>>(ps));
}

template <typename K>
Symmetry classify(const Poly<K>& p) {
    Poly<K> r = reverse(p);  // enforces the nonzero-constant-term domain
    if (r == p) return Symmetry::palindromic;
    if (r == -p) return Symmetry::antipalindromic;
    return Symmetry::neither;
}

// True iff (x - c) divides P, decided exactly by evaluation.
template <typename K>
bool divides_at(const Poly<K>& p, const K& c) {
    return p.eval(c).is_zero();
}

// Conjugate-coefficient reversal P*; coincides with reverse for real coefficients.
template <typename K>
Poly<K> reciprocal_conj(const Poly<K>& p) {
    if (p.is_zero() || p.constant_term().is_zero())
        throw std::domain_error("reciprocal requires a nonzero constant term");
    std::vector<K> c;
    c.reserve(p.coeffs().size());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) c.push_back(conj(*it));
    return Poly<K>(std::move(c));
}

// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <typename K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly<K> q, r = a;
    const long db = b.degree();
    const K& lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        K f = r.leading() / lb;
        std::size_t sh = static_cast<std::size_t>(r.degree() - db);
        q += Poly<K>::monomial(f, sh);
        r -= b.shift_up(sh) * f;
    }
    return {std::move(q), std::move(r)};
}

template <typename K>
Poly<K> monic(const Poly<K>& p) {
    if (p.is_zero()) return p;
    return p * p.leading().inverse();
}

template <typename K>
Poly<K> gcd_poly(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(a);
}

template <typename K>
Poly<K> pow(const Poly<K>& p, unsigned long e) {
    Poly<K> r(K(1)), b = p;
    while (e != 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Poly<GaussianRational> to_gaussian(const Poly<Rational>& p) {
    std::vector<GaussianRational> c;
    c.reserve(p.coeffs().size());
    for (const Rational& a : p.coeffs()) c.emplace_back(a);
    return Poly<GaussianRational>(std::move(c));
}

inline Poly<Rational> to_rational(const Poly<GaussianRational>& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const GaussianRational& a : p.coeffs()) {
        if (!a.is_real()) throw std::domain_error("polynomial has a coefficient with nonzero imaginary part");
        c.push_back(a.re());
    }
    return Poly<Rational>(std::move(c));
}

}  // namespace pastrev
