#include "pastrev/propcheck.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <stdexcept>

namespace pastrev::props {

using nlohmann::ordered_json;

std::uint64_t derive_seed(std::uint64_t master_seed, const std::string& id) {
    // FNV-1a over the id, mixed with the master seed.
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : id) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h ^ master_seed;
}

Report run_property(const Spec& spec, std::uint64_t seed, std::optional<std::uint64_t> cases_override) {
    std::uint64_t derived = derive_seed(seed, spec.id);
    std::uint64_t cases = spec.scalable && cases_override ? *cases_override : spec.cases;
    Context ctx(derived, cases);
    auto start = std::chrono::steady_clock::now();
    spec.run(ctx);
    auto stop = std::chrono::steady_clock::now();
    Report r;
    r.id = spec.id;
    r.anchor = spec.anchor;
    r.mode = spec.mode;
    r.diagnostic = spec.diagnostic;
    r.seed = derived;
    r.cases = ctx.ran();
    r.failures = ctx.failures();
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return r;
}

std::vector<Report> run_all(std::uint64_t seed, const std::set<std::string>& filter,
                            std::optional<std::uint64_t> cases_override) {
    for (const std::string& id : filter) {
        bool known = false;
        for (const Spec& spec : registry()) known = known || spec.id == id;
        if (!known) throw std::domain_error("unknown property id: " + id);
    }
    std::vector<Report> out;
    for (const Spec& spec : registry()) {
        if (!filter.empty() && filter.find(spec.id) == filter.end()) continue;
        out.push_back(run_property(spec, seed, cases_override));
    }
    return out;
}

bool suite_passed(const std::vector<Report>& reports) {
    for (const Report& r : reports)
        if (!r.diagnostic && !r.failures.empty()) return false;
    return true;
}

namespace {

ordered_json report_to_json(const Report& r, bool timings) {
    ordered_json failures = ordered_json::array();
    for (const Failure& f : r.failures)
        failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
    ordered_json j{{"id", r.id},
                   {"anchor", r.anchor},
                   {"mode", r.mode},
                   {"diagnostic", r.diagnostic},
                   {"seed", r.seed},
                   {"cases", r.cases},
                   {"failures", std::move(failures)}};
    // Elapsed time is opt-in so that default reports are reproducible byte
    // for byte under a fixed seed.
    if (timings) j["millis"] = r.millis;
    return j;
}

}  // namespace

std::string reports_json(const std::vector<Report>& reports, std::uint64_t master_seed, bool timings) {
    ordered_json props = ordered_json::array();
    std::size_t failed = 0;
    for (const Report& r : reports) {
        props.push_back(report_to_json(r, timings));
        if (!r.diagnostic && !r.failures.empty()) ++failed;
    }
    ordered_json j{{"seed", master_seed},
                   {"properties", std::move(props)},
                   {"failed", failed},
                   {"passed", failed == 0}};
    return j.dump(2) + "\n";
}

std::string reports_text(const std::vector<Report>& reports) {
    std::string out;
    for (const Report& r : reports) {
        std::string status;
        if (r.diagnostic)
            status = r.failures.empty() ? "NOTE" : "FAIL";
        else
            status = r.failures.empty() ? "PASS" : "FAIL";
        out += status + " " + r.id + " (" + r.mode + ", cases=" + std::to_string(r.cases) + ") " +
               r.anchor + "\n";
        for (const Failure& f : r.failures)
            out += "     counterexample: " + f.inputs + " expected " + f.expected + " got " + f.got + "\n";
    }
    return out;
}

}  // namespace pastrev::props
