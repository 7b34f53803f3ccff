#pragma once

#include "pastrev/exppoly.hpp"
#include "pastrev/gaussian.hpp"
#include "pastrev/poly.hpp"
#include "pastrev/rational_func.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pastrev {

// Coefficient ring of constants: Gaussian rationals with the zero derivation.
struct ConstRing {
    using Elem = GaussianRational;
    static constexpr const char* name = "constants";
    static Elem derive(const Elem&) { return {}; }
    static bool is_constant(const Elem&) { return true; }
    static GPoly to_amplitude(const Elem& a) { return GPoly(a); }
    static std::string str(const Elem& a, char) { return a.str(); }
    static RationalFunc to_rational_func(const Elem& a) {
        if (!a.is_real())
            throw std::domain_error("coefficient with nonzero imaginary part has no rational-function form");
        return RationalFunc(a.re());
    }
};

// Coefficient ring of rational polynomials with derivation d/dx.
struct PolyRing {
    using Elem = Poly<Rational>;
    static constexpr const char* name = "polynomials";
    static Elem derive(const Elem& a) { return a.derivative(); }
    static bool is_constant(const Elem& a) { return a.degree() <= 0; }
    static GPoly to_amplitude(const Elem& a) { return to_gaussian(a); }
    static std::string str(const Elem& a, char var) { return a.str(var); }
    static RationalFunc to_rational_func(const Elem& a) { return RationalFunc(a); }
};

// Linear differential operator sum a_k D^k over a differential ring R.
// Same storage discipline as Poly: coeffs()[k] is the coefficient of D^k,
// empty sequence is the zero operator, leading coefficient nonzero otherwise.
// Composition is non-commutative through D a = a D + a'.
template <typename R>
class DiffOp {
public:
    using Ring = R;
    using Elem = typename R::Elem;

    DiffOp() = default;
    DiffOp(Elem constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit DiffOp(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static DiffOp monomial(Elem coeff, std::size_t k) {
        if (coeff.is_zero()) return {};
        std::vector<Elem> c(k + 1, Elem());
        c[k] = std::move(coeff);
        return DiffOp(std::move(c));
    }
    static DiffOp d() { return monomial(Elem(1), 1); }

    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    std::size_t cipher() const {
        if (is_zero()) throw std::domain_error("cipher undefined for the zero operator");
        return c_.size();
    }
    long order() const { return static_cast<long>(c_.size()) - 1; }

    Elem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Elem(); }
    const Elem& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of the zero operator");
        return c_.back();
    }

    DiffOp operator-() const {
        DiffOp r = *this;
        for (Elem& a : r.c_) a = -a;
        return r;
    }
    DiffOp operator+(const DiffOp& o) const {
        std::vector<Elem> c(std::max(c_.size(), o.c_.size()), Elem());
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
        return DiffOp(std::move(c));
    }
    DiffOp operator-(const DiffOp& o) const { return *this + (-o); }
    DiffOp& operator+=(const DiffOp& o) { return *this = *this + o; }
    DiffOp& operator-=(const DiffOp& o) { return *this = *this - o; }

    // Left multiplication by a ring element (the ring is commutative, only
    // composition with D is not).
    DiffOp scaled(const Elem& s) const {
        if (s.is_zero()) return {};
        DiffOp r = *this;
        for (Elem& a : r.c_) a = a * s;
        return r;
    }

    // D^m applied on the right only shifts powers: (a D^k) D^m = a D^{k+m}.
    DiffOp shift_up(std::size_t m) const {
        if (is_zero() || m == 0) return *this;
        std::vector<Elem> c(c_.size() + m, Elem());
        std::copy(c_.begin(), c_.end(), c.begin() + static_cast<long>(m));
        return DiffOp(std::move(c));
    }

    bool operator==(const DiffOp& o) const { return c_ == o.c_; }
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    std::string str(char var = 'x') const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            std::string t = term_str(c_[k], k, var);
            if (out.empty()) out = t;
            else if (t[0] == '-') out += t;
            else out += "+" + t;
        }
        return out;
    }

private:
    static bool single_token(const std::string& s) {
        if (s.find('+') != std::string::npos || s.find('-', 1) != std::string::npos) return false;
        return s.find('(') == std::string::npos;
    }

    static std::string term_str(const Elem& c, std::size_t k, char var) {
        std::string cs = R::str(c, var);
        if (k == 0) return cs;
        std::string ds = k == 1 ? "D" : "D^" + std::to_string(k);
        if (c == Elem(1)) return ds;
        if (c == Elem(-1)) return "-" + ds;
        return (single_token(cs) ? cs : "(" + cs + ")") + "*" + ds;
    }

    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Elem> c_;
};

template <typename R>
DiffOp<R> op_add(const DiffOp<R>& l, const DiffOp<R>& r) { return l + r; }

// Composition expanded to normal form through D a = a D + a'.
template <typename R>
DiffOp<R> op_mul(const DiffOp<R>& l, const DiffOp<R>& r) {
    if (l.is_zero() || r.is_zero()) return {};
    // D ∘ (sum s_j D^j) = sum (s_j D^{j+1} + s_j' D^j)
    auto d_compose = [](const DiffOp<R>& s) {
        std::vector<typename R::Elem> c(s.coeffs().size() + 1, typename R::Elem());
        for (std::size_t j = 0; j < s.coeffs().size(); ++j) {
            c[j + 1] = c[j + 1] + s.coeffs()[j];
            c[j] = c[j] + R::derive(s.coeffs()[j]);
        }
        return DiffOp<R>(std::move(c));
    };
    DiffOp<R> acc;
    DiffOp<R> cur = r;  // D^k ∘ r
    for (std::size_t k = 0; k < l.coeffs().size(); ++k) {
        if (!l.coeffs()[k].is_zero()) acc += cur.scaled(l.coeffs()[k]);
        if (k + 1 < l.coeffs().size()) cur = d_compose(cur);
    }
    return acc;
}

template <typename R>
DiffOp<R> op_reverse(const DiffOp<R>& l) {
    if (l.is_zero() || l.coeff(0).is_zero())
        throw std::domain_error("operator reversal requires a nonzero order-zero coefficient");
    std::vector<typename R::Elem> c(l.coeffs().rbegin(), l.coeffs().rend());
    return DiffOp<R>(std::move(c));
}

// Pasting: L D^{cipher(R)} + R, concatenating coefficient sequences.
template <typename R>
DiffOp<R> op_paste(const DiffOp<R>& l, const DiffOp<R>& r) {
    if (l.is_zero() || r.is_zero()) throw std::domain_error("paste requires nonzero operators");
    return l.shift_up(r.cipher()) + r;
}

template <typename R>
Symmetry op_classify(const DiffOp<R>& l) {
    DiffOp<R> rev = op_reverse(l);
    if (rev == l) return Symmetry::palindromic;
    if (rev == -l) return Symmetry::antipalindromic;
    return Symmetry::neither;
}

// Exact image of an exp-polynomial: sum a_k f^(k).
template <typename R>
ExpPoly apply(const DiffOp<R>& l, const ExpPoly& f) {
    ExpPoly res;
    ExpPoly der = f;
    for (std::size_t k = 0; k < l.coeffs().size(); ++k) {
        if (k > 0) der = der.derivative();
        if (!l.coeffs()[k].is_zero()) res = res + der.scaled(R::to_amplitude(l.coeffs()[k]));
    }
    return res;
}

template <typename R>
struct RightDivision {
    DiffOp<R> quotient;
    typename R::Elem remainder;  // order-zero remainder
};

// Right division by the monic linear operator D + c for a constant c:
// L = S (D + c) + r. Since c is constant, S (D + c) = S D + S c and the
// quotient falls out of a descending back-substitution with no inversion.
template <typename R>
RightDivision<R> right_divide_monic_linear(const DiffOp<R>& l, const typename R::Elem& c) {
    if (l.is_zero() || l.order() < 1) throw std::domain_error("right division requires order >= 1");
    if (!R::is_constant(c)) throw std::domain_error("divisor shift must be a constant");
    const std::size_t m = static_cast<std::size_t>(l.order());
    std::vector<typename R::Elem> s(m, typename R::Elem());
    s[m - 1] = l.coeff(m);
    for (std::size_t k = m - 1; k >= 1; --k) s[k - 1] = l.coeff(k) - s[k] * c;
    typename R::Elem r = l.coeff(0) - s[0] * c;
    return {DiffOp<R>(std::move(s)), std::move(r)};
}

// Constant-coefficient operators transfer to ordinary polynomials with the
// same coefficients; the transfer intertwines reversal, pasting and products.
inline Poly<GaussianRational> char_poly(const DiffOp<ConstRing>& l) {
    return Poly<GaussianRational>(l.coeffs());
}

// Product of factors (beta_i D - alpha_i) over the constants.
inline DiffOp<ConstRing> expand_op_factors(const std::vector<std::pair<GaussianRational, GaussianRational>>& factors) {
    DiffOp<ConstRing> acc{GaussianRational(1)};
    for (const auto& [beta, alpha] : factors) {
        if (beta.is_zero() && alpha.is_zero()) throw std::domain_error("zero operator factor");
        acc = op_mul(acc, DiffOp<ConstRing>(std::vector<GaussianRational>{-alpha, beta}));
    }
    return acc;
}

// Exponent multiset of a factored constant operator: each factor
// (beta D - alpha) with beta != 0 contributes lambda = alpha / beta, and
// x^j e^{lambda x} lies in the kernel for j below the multiplicity.
inline std::vector<std::pair<GaussianRational, int>> kernel_exponents(
    const std::vector<std::pair<GaussianRational, GaussianRational>>& factors) {
    std::vector<GaussianRational> ls;
    ls.reserve(factors.size());
    for (const auto& [beta, alpha] : factors) {
        if (beta.is_zero()) throw std::domain_error("kernel exponents require all beta nonzero");
        ls.push_back(alpha / beta);
    }
    std::sort(ls.begin(), ls.end(), [](const GaussianRational& a, const GaussianRational& b) {
        return a.cmp(b) < 0;
    });
    std::vector<std::pair<GaussianRational, int>> out;
    for (const GaussianRational& l : ls) {
        if (!out.empty() && out.back().first == l) ++out.back().second;
        else out.emplace_back(l, 1);
    }
    return out;
}

struct LogDerivative {
    RationalFunc u1;       // d/dx log y for y in the kernel of L
    RationalFunc u2;       // same for the reversed operator
    RationalFunc product;  // exactly 1
};

// Order-one operators a_1 D + a_0: the kernel element is e^{-int a_0/a_1},
// so the log-derivatives of L and its reversal multiply to 1.
template <typename R>
LogDerivative log_derivative_product(const DiffOp<R>& l) {
    if (l.is_zero() || l.cipher() != 2) throw std::domain_error("log-derivative product requires cipher 2");
    if (l.coeff(0).is_zero() || l.coeff(1).is_zero())
        throw std::domain_error("log-derivative product requires both coefficients nonzero");
    RationalFunc a0 = R::to_rational_func(l.coeff(0));
    RationalFunc a1 = R::to_rational_func(l.coeff(1));
    LogDerivative out;
    out.u1 = -a0 / a1;
    out.u2 = -a1 / a0;
    out.product = out.u1 * out.u2;
    return out;
}

// e^{s x} as an exp-polynomial, handy for kernel checks.
inline ExpPoly exp_of_linear(const GaussianRational& s) {
    return ExpPoly::exponential(GPoly(GaussianRational(1)), GPoly::monomial(s, 1));
}

inline ExpPoly monomial_times_exp(std::size_t j, const GaussianRational& s) {
    return ExpPoly::exponential(GPoly::monomial(GaussianRational(1), j), GPoly::monomial(s, 1));
}

}  // namespace pastrev
