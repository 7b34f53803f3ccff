#pragma once

#include "pastrev/gaussian.hpp"
#include "pastrev/poly.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace pastrev {

using GPoly = Poly<GaussianRational>;

// Total order on polynomials (degree, then coefficients from the top) used to
// keep exponent lists canonically sorted.
inline int compare_poly(const GPoly& a, const GPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (long k = a.degree(); k >= 0; --k) {
        int c = a.coeff(static_cast<std::size_t>(k)).cmp(b.coeff(static_cast<std::size_t>(k)));
        if (c != 0) return c;
    }
    return 0;
}

// Finite sum of terms q(x) * e^{s(x)} with polynomial q, s over the Gaussian
// rationals. Closed under d/dx: (q e^s)' = (q' + q s') e^s. Distinct formal
// exponents are linearly independent over polynomials, so the canonical form
// (zero amplitudes dropped, exponents deduplicated and sorted) is zero exactly
// when the function is zero.
class ExpPoly {
public:
    struct Term {
        GPoly amp;  // q
        GPoly exp;  // s
    };

    ExpPoly() = default;

    static ExpPoly polynomial(GPoly q) { return ExpPoly({{std::move(q), GPoly{}}}); }
    static ExpPoly exponential(GPoly q, GPoly s) { return ExpPoly({{std::move(q), std::move(s)}}); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ExpPoly operator-() const {
        ExpPoly r = *this;
        for (Term& t : r.terms_) t.amp = -t.amp;
        return r;
    }
    ExpPoly operator+(const ExpPoly& o) const {
        std::vector<Term> all = terms_;
        all.insert(all.end(), o.terms_.begin(), o.terms_.end());
        return ExpPoly(std::move(all));
    }
    ExpPoly operator-(const ExpPoly& o) const { return *this + (-o); }

    ExpPoly scaled(const GPoly& q) const {
        ExpPoly r = *this;
        for (Term& t : r.terms_) t.amp *= q;
        r.canonicalize();
        return r;
    }

    ExpPoly derivative() const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const Term& t : terms_) out.push_back({t.amp.derivative() + t.amp * t.exp.derivative(), t.exp});
        return ExpPoly(std::move(out));
    }

    bool operator==(const ExpPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].amp != o.terms_[i].amp || terms_[i].exp != o.terms_[i].exp) return false;
        return true;
    }
    bool operator!=(const ExpPoly& o) const { return !(*this == o); }

    std::string str(char var = 'x') const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const Term& t : terms_) {
            std::string ts = term_str(t, var);
            if (out.empty()) out = ts;
            else if (ts[0] == '-') out += ts;
            else out += "+" + ts;
        }
        return out;
    }

private:
    explicit ExpPoly(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }

    static std::string term_str(const Term& t, char var) {
        if (t.exp.is_zero()) return t.amp.str(var);
        std::string e = "exp(" + t.exp.str(var) + ")";
        if (t.amp == GPoly(GaussianRational(1))) return e;
        if (t.amp == GPoly(GaussianRational(-1))) return "-" + e;
        std::string a = t.amp.str(var);
        bool single = t.amp.degree() <= 0 ? a.find('+') == std::string::npos &&
                                            a.find('-', 1) == std::string::npos
                                          : false;
        if (t.amp.degree() > 0) {
            std::size_t nonzero = 0;
            for (const auto& c : t.amp.coeffs()) nonzero += c.is_zero() ? 0 : 1;
            single = nonzero == 1 && a.find('(') == std::string::npos;
        }
        return (single ? a : "(" + a + ")") + "*" + e;
    }

    void canonicalize() {
        std::stable_sort(terms_.begin(), terms_.end(),
                         [](const Term& a, const Term& b) { return compare_poly(a.exp, b.exp) < 0; });
        std::vector<Term> merged;
        for (Term& t : terms_) {
            if (!merged.empty() && compare_poly(merged.back().exp, t.exp) == 0)
                merged.back().amp += t.amp;
            else
                merged.push_back(std::move(t));
        }
        terms_.clear();
        for (Term& t : merged)
            if (!t.amp.is_zero()) terms_.push_back(std::move(t));
    }

    std::vector<Term> terms_;
};

}  // namespace pastrev
