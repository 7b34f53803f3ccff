#pragma once

#include "pastrev/poly.hpp"
#include "pastrev/rational.hpp"

#include <stdexcept>
#include <vector>

namespace pastrev {

// Chebyshev polynomial of the first kind, T_n((z + 1/z)/2) = (z^n + z^-n)/2,
// computed exactly by the three-term recurrence T_{n+1} = 2w T_n - T_{n-1}.
inline Poly<Rational> cheb_T(unsigned n) {
    Poly<Rational> prev{Rational(1)};
    if (n == 0) return prev;
    Poly<Rational> cur = Poly<Rational>::variable();
    Poly<Rational> twice_w = cur * Rational(2);
    for (unsigned k = 1; k < n; ++k) {
        Poly<Rational> next = twice_w * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Coefficients c_0..c_n of an expansion sum c_k T_k(w).
template <typename K>
struct ChebExpansion {
    std::vector<K> coeffs;
};

// Evaluates sum c_k T_k(w) through the value recurrence, avoiding any
// dependence on the polynomial table.
template <typename K>
K eval_cheb_sum(const std::vector<K>& coeffs, const K& w) {
    K acc(0), prev(1), cur = w;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k == 0) {
            acc += coeffs[k];
        } else if (k == 1) {
            acc += coeffs[k] * cur;
        } else {
            K next = K(2) * w * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
            acc += coeffs[k] * cur;
        }
    }
    return acc;
}

// Half-degree reduction of a palindromic polynomial of even degree 2n:
// P(z) / (2 z^n) = sum c_k T_k((z + 1/z)/2) with c_k = a_{n-k} for k >= 1
// and c_0 = a_n / 2. The halved first coefficient is forced by T_0 = 1;
// the unhalved variant fails the evaluation identity (see the ERR-SOKOEQ
// diagnostic in the verification suite).
template <typename K>
ChebExpansion<K> palindromic_to_cheb(const Poly<K>& p) {
    if (p.is_zero() || p.degree() % 2 != 0)
        throw std::domain_error("half-degree reduction requires even degree");
    const auto& a = p.coeffs();
    const std::size_t m = a.size() - 1;  // 2n
    for (std::size_t i = 0; i <= m / 2; ++i)
        if (a[i] != a[m - i]) throw std::domain_error("half-degree reduction requires a palindromic polynomial");
    ChebExpansion<K> c;
    c.coeffs.reserve(m / 2 + 1);
    c.coeffs.push_back(a[m / 2] / K(2));
    for (std::size_t k = 1; k <= m / 2; ++k) c.coeffs.push_back(a[m / 2 - k]);
    return c;
}

// Inverse of the reduction: mirrors the coefficients back into a palindromic
// polynomial of degree 2n (degree drops when the last expansion entry is zero).
template <typename K>
Poly<K> cheb_to_palindromic(const ChebExpansion<K>& c) {
    if (c.coeffs.empty()) return {};
    const std::size_t n = c.coeffs.size() - 1;
    std::vector<K> a(2 * n + 1, K(0));
    a[n] = c.coeffs[0] * K(2);
    for (std::size_t k = 1; k <= n; ++k) {
        a[n - k] = c.coeffs[k];
        a[n + k] = c.coeffs[k];
    }
    return Poly<K>(std::move(a));
}

}  // namespace pastrev
