#pragma once

#include "pastrev/gaussian.hpp"
#include "pastrev/poly.hpp"
#include "pastrev/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace pastrev::props {

// Deterministic generator stream. All draws go through next()/below() so the
// sequence depends only on the seed, not on library distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    // Uniform in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool flip() { return (next() & 1) != 0; }

    // Small exact scalars: numerators in [-9, 9], denominators in [1, 9].
    Rational rational() { return Rational(range(-9, 9), range(1, 9)); }
    Rational nonzero_rational() {
        while (true) {
            Rational r = rational();
            if (!r.is_zero()) return r;
        }
    }
    GaussianRational gaussian() { return {rational(), rational()}; }
    GaussianRational nonzero_gaussian() {
        while (true) {
            GaussianRational g = gaussian();
            if (!g.is_zero()) return g;
        }
    }

    template <typename K>
    K scalar() {
        if constexpr (std::is_same_v<K, Rational>) return rational();
        else return gaussian();
    }
    template <typename K>
    K nonzero_scalar() {
        if constexpr (std::is_same_v<K, Rational>) return nonzero_rational();
        else return nonzero_gaussian();
    }

    // Random dense polynomial with degree uniform in [0, max_degree].
    template <typename K>
    Poly<K> poly(long max_degree, bool nonzero_constant) {
        long deg = range(0, max_degree);
        std::vector<K> c(static_cast<std::size_t>(deg) + 1, K(0));
        for (auto& a : c) a = scalar<K>();
        c.back() = nonzero_scalar<K>();
        if (nonzero_constant && c.front().is_zero()) c.front() = nonzero_scalar<K>();
        return Poly<K>(std::move(c));
    }

    // Mirrored construction of palindromic/antipalindromic polynomials with
    // the requested number of coefficients; the antipalindromic odd-cipher
    // middle coefficient is forced to zero.
    template <typename K>
    Poly<K> symmetric_poly(std::size_t cipher, Symmetry sym) {
        std::vector<K> c(cipher, K(0));
        std::size_t half = (cipher + 1) / 2;
        for (std::size_t j = 0; j < half; ++j) {
            K a = j == 0 ? nonzero_scalar<K>() : scalar<K>();
            c[j] = a;
            c[cipher - 1 - j] = sym == Symmetry::palindromic ? a : -a;
        }
        if (sym == Symmetry::antipalindromic && cipher % 2 == 1) c[cipher / 2] = K(0);
        return Poly<K>(std::move(c));
    }

private:
    std::mt19937_64 eng_;
};

struct Failure {
    std::string inputs;
    std::string expected;
    std::string got;
};

struct Report {
    std::string id;
    std::string anchor;
    std::string mode;
    bool diagnostic = false;
    std::uint64_t seed = 0;
    std::uint64_t cases = 0;
    std::vector<Failure> failures;
    long long millis = 0;
};

// Per-property execution state handed to the check body.
class Context {
public:
    Context(std::uint64_t seed, std::uint64_t cases) : rng_(seed), cases_(cases) {}

    Rng& rng() { return rng_; }
    std::uint64_t cases() const { return cases_; }

    void count_case() { ++ran_; }
    void fail(std::string inputs, std::string expected, std::string got) {
        if (failures_.size() < 16)  // cap per property; one counterexample already proves the point
            failures_.push_back({std::move(inputs), std::move(expected), std::move(got)});
        ++failure_count_;
    }
    void check(bool ok, const std::string& inputs, const std::string& expected, const std::string& got) {
        if (!ok) fail(inputs, expected, got);
    }

    std::uint64_t ran() const { return ran_; }
    const std::vector<Failure>& failures() const { return failures_; }
    std::uint64_t failure_count() const { return failure_count_; }

private:
    Rng rng_;
    std::uint64_t cases_;
    std::uint64_t ran_ = 0;
    std::uint64_t failure_count_ = 0;
    std::vector<Failure> failures_;
};

struct Spec {
    std::string id;
    std::string anchor;    // one-line statement of the law being checked
    std::string mode;      // randomized | exhaustive | witness | diagnostic
    std::uint64_t cases;   // default case count for randomized properties
    bool scalable;         // whether a --cases override applies
    bool diagnostic;       // diagnostics document known discrepancies; they never gate the suite
    std::function<void(Context&)> run;
};

const std::vector<Spec>& registry();

Report run_property(const Spec& spec, std::uint64_t seed, std::optional<std::uint64_t> cases_override);

// Runs the whole registry (or the ids in filter) with per-property seeds
// derived from the master seed; result order follows registration order.
std::vector<Report> run_all(std::uint64_t seed, const std::set<std::string>& filter,
                            std::optional<std::uint64_t> cases_override);

// A suite passes when every non-diagnostic property has zero failures.
bool suite_passed(const std::vector<Report>& reports);

std::string reports_json(const std::vector<Report>& reports, std::uint64_t master_seed, bool timings);
std::string reports_text(const std::vector<Report>& reports);

std::uint64_t derive_seed(std::uint64_t master_seed, const std::string& id);

}  // namespace pastrev::props
