#pragma once

#include "pastrev/errors.hpp"
#include "pastrev/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pastrev {

// One factor beta*x - alpha; beta may be zero (a constant factor) but not both.
template <typename K>
struct LinearFactor {
    K beta;
    K alpha;
};

// unit * product of linear factors, kept unexpanded so root structure stays exact.
template <typename K>
struct FactoredLinear {
    K unit = K(1);
    std::vector<LinearFactor<K>> factors;
};

template <typename K>
Poly<K> expand(const FactoredLinear<K>& f) {
    if (f.unit.is_zero()) throw std::domain_error("factored form with zero unit");
    Poly<K> p{f.unit};
    for (const auto& [beta, alpha] : f.factors) {
        if (beta.is_zero() && alpha.is_zero())
            throw std::domain_error("factored form with a zero factor");
        p *= Poly<K>{-alpha, beta};
    }
    return p;
}

// Reversal in factored form: each genuine linear factor beta*x - alpha flips to
// alpha*x - beta and contributes one sign; constant factors pass through.
// Requires every linear factor to have alpha != 0 so the expansion keeps a
// nonzero constant term.
template <typename K>
FactoredLinear<K> reverse_factored(const FactoredLinear<K>& f) {
    FactoredLinear<K> r;
    r.unit = f.unit;
    r.factors.reserve(f.factors.size());
    for (const auto& [beta, alpha] : f.factors) {
        if (beta.is_zero()) {
            r.factors.push_back({beta, alpha});
            continue;
        }
        if (alpha.is_zero())
            throw std::domain_error("reversal of a factored form with a root at zero");
        r.factors.push_back({alpha, beta});
        r.unit = -r.unit;
    }
    return r;
}

template <typename K>
struct RootPairing {
    std::vector<std::pair<K, K>> pairs;  // each {rho, 1/rho}
    std::optional<K> unpaired;           // -1 (palindromic) or +1 (antipalindromic), even cipher only
};

// Matches the roots of a palindromic/antipalindromic factored polynomial into
// reciprocal pairs, pulling out the mandatory -1/+1 root when the cipher is
// even. Multiplicities resolve by input order. A failed matching is a
// verification_error: the pairing is guaranteed to exist on this domain.
template <typename K>
RootPairing<K> root_pairing(const FactoredLinear<K>& f) {
    std::vector<K> roots;
    roots.reserve(f.factors.size());
    for (const auto& [beta, alpha] : f.factors) {
        if (beta.is_zero())
            throw std::domain_error("root pairing requires finite roots (all beta nonzero)");
        roots.push_back(alpha / beta);
    }
    Symmetry sym = classify(expand(f));
    if (sym == Symmetry::neither)
        throw std::domain_error("root pairing requires a palindromic or antipalindromic polynomial");

    RootPairing<K> out;
    if (roots.size() % 2 == 1) {  // even cipher: one self-inverse root is forced
        K forced = sym == Symmetry::palindromic ? K(-1) : K(1);
        auto it = std::find(roots.begin(), roots.end(), forced);
        if (it == roots.end())
            throw verification_error("mandatory root " + forced.str() + " missing from an " +
                                     std::string(to_string(sym)) + " polynomial of even cipher");
        out.unpaired = forced;
        roots.erase(it);
    }
    while (!roots.empty()) {
        K rho = roots.front();
        roots.erase(roots.begin());
        K inv = K(1) / rho;
        auto it = std::find(roots.begin(), roots.end(), inv);
        if (it == roots.end())
            throw verification_error("no reciprocal partner for root " + rho.str());
        roots.erase(it);
        out.pairs.emplace_back(std::move(rho), std::move(inv));
    }
    return out;
}

}  // namespace pastrev
