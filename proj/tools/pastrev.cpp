// pastrev: pasting (⋄) and reversing (~) over polynomials, base-B numerals and
// linear differential operators, plus the seeded verification suite.

#include "pastrev/cheb.hpp"
#include "pastrev/diffop.hpp"
#include "pastrev/errors.hpp"
#include "pastrev/factored.hpp"
#include "pastrev/natnum.hpp"
#include "pastrev/parse.hpp"
#include "pastrev/propcheck.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace pastrev;
using nlohmann::ordered_json;

enum ExitCode { kOk = 0, kVerificationFailure = 1, kParseError = 2, kDomainError = 3 };

struct Output {
    bool json = false;
    int code = kOk;

    void value(const std::string& v) const {
        if (json) std::cout << ordered_json{{"result", v}}.dump() << "\n";
        else std::cout << v << "\n";
    }
    void value(std::size_t v) const {
        if (json) std::cout << ordered_json{{"result", v}}.dump() << "\n";
        else std::cout << v << "\n";
    }
    void value(bool v) const {
        if (json) std::cout << ordered_json{{"result", v}}.dump() << "\n";
        else std::cout << (v ? "true" : "false") << "\n";
    }
    void object(const ordered_json& j, const std::string& text) const {
        if (json) std::cout << j.dump() << "\n";
        else std::cout << text;
    }
};

using GPoly = Poly<GaussianRational>;

GPoly need_poly(const std::string& text, char* var = nullptr) {
    ParsedPoly p = parse_poly(text);
    if (var != nullptr) *var = p.var;
    return p.value;
}

FactoredLinear<GaussianRational> build_factored(const std::string& unit,
                                                const std::vector<std::string>& factor_args) {
    FactoredLinear<GaussianRational> f;
    f.unit = parse_gaussian(unit);
    for (const std::string& fa : factor_args) {
        auto comma = fa.find(',');
        if (comma == std::string::npos)
            throw parse_error("factor must be 'beta,alpha'", 0);
        f.factors.push_back(
            {parse_gaussian(fa.substr(0, comma)), parse_gaussian(fa.substr(comma + 1))});
    }
    return f;
}

std::string factored_str(const FactoredLinear<GaussianRational>& f, char var) {
    std::string out = f.unit.is_one() ? "" : "(" + f.unit.str() + ")";
    for (const auto& [beta, alpha] : f.factors)
        out += "(" + GPoly{-alpha, beta}.str(var) + ")";
    return out.empty() ? "1" : out;
}

template <typename R>
typename R::Elem shift_for_ring(const GaussianRational& c);

template <>
ConstRing::Elem shift_for_ring<ConstRing>(const GaussianRational& c) { return c; }

template <>
PolyRing::Elem shift_for_ring<PolyRing>(const GaussianRational& c) {
    if (!c.is_real()) throw std::domain_error("divisor shift must be rational over this ring");
    return Poly<Rational>(c.re());
}

// Binary operator commands accept mixed rings by lifting constants.
std::pair<OpVariant, OpVariant> align_rings(OpVariant a, OpVariant b) {
    bool a_const = std::holds_alternative<DiffOp<ConstRing>>(a);
    bool b_const = std::holds_alternative<DiffOp<ConstRing>>(b);
    if (a_const == b_const) return {std::move(a), std::move(b)};
    if (a_const) a = OpVariant(to_poly_ring(std::get<DiffOp<ConstRing>>(a)));
    else b = OpVariant(to_poly_ring(std::get<DiffOp<ConstRing>>(b)));
    return {std::move(a), std::move(b)};
}

int run(int argc, char** argv) {
    CLI::App app{"Pasting and Reversing over polynomials, numerals and differential operators"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    // ---- poly ----------------------------------------------------------
    auto* poly = app.add_subcommand("poly", "Polynomial operations");
    poly->require_subcommand(1);
    std::string poly_a, poly_b, poly_c, poly_unit = "1";
    std::vector<std::string> poly_list, poly_factors;

    auto* p_cipher = poly->add_subcommand("cipher", "Number of coefficients");
    p_cipher->add_option("poly", poly_a)->required();
    auto* p_reverse = poly->add_subcommand("reverse", "Coefficient reversal (requires nonzero constant term)");
    p_reverse->add_option("poly", poly_a)->required();
    auto* p_flip = poly->add_subcommand("flip", "Unchecked coefficient flip");
    p_flip->add_option("poly", poly_a)->required();
    auto* p_classify = poly->add_subcommand("classify", "palindromic / antipalindromic / neither");
    p_classify->add_option("poly", poly_a)->required();
    auto* p_recip = poly->add_subcommand("recip", "Conjugate-coefficient reversal");
    p_recip->add_option("poly", poly_a)->required();
    auto* p_paste = poly->add_subcommand("paste", "x^cipher(Q) P + Q");
    p_paste->add_option("P", poly_a)->required();
    p_paste->add_option("Q", poly_b)->required();
    auto* p_fold = poly->add_subcommand("fold", "Left fold of paste");
    p_fold->add_option("poly", poly_list)->required()->expected(-1);
    auto* p_add = poly->add_subcommand("add", "Sum");
    p_add->add_option("P", poly_a)->required();
    p_add->add_option("Q", poly_b)->required();
    auto* p_sub = poly->add_subcommand("sub", "Difference");
    p_sub->add_option("P", poly_a)->required();
    p_sub->add_option("Q", poly_b)->required();
    auto* p_mul = poly->add_subcommand("mul", "Product");
    p_mul->add_option("P", poly_a)->required();
    p_mul->add_option("Q", poly_b)->required();
    auto* p_divides = poly->add_subcommand("divides", "Does x - c divide P?");
    p_divides->add_option("P", poly_a)->required();
    p_divides->add_option("c", poly_c)->required();
    auto* p_expand = poly->add_subcommand("expand", "Expand unit * prod(beta x - alpha)");
    p_expand->add_option("--unit", poly_unit, "Unit scalar");
    p_expand->add_option("--factor", poly_factors, "Factor 'beta,alpha'")->required();
    auto* p_revfact = poly->add_subcommand("revfact", "Reversal in factored form");
    p_revfact->add_option("--unit", poly_unit, "Unit scalar");
    p_revfact->add_option("--factor", poly_factors, "Factor 'beta,alpha'")->required();
    auto* p_pair = poly->add_subcommand("pair", "Reciprocal root pairing of a factored polynomial");
    p_pair->add_option("--unit", poly_unit, "Unit scalar");
    p_pair->add_option("--factor", poly_factors, "Factor 'beta,alpha'")->required();

    // ---- nat -----------------------------------------------------------
    auto* nat = app.add_subcommand("nat", "Base-B numeral operations");
    nat->require_subcommand(1);
    int base = 10;
    nat->add_option("--base", base, "Numeral base (2..36)");
    std::string nat_a, nat_b;
    std::vector<std::string> nat_list;
    auto* n_cipher = nat->add_subcommand("cipher", "Digit count");
    n_cipher->add_option("n", nat_a)->required();
    auto* n_reverse = nat->add_subcommand("reverse", "Digit reversal");
    n_reverse->add_option("n", nat_a)->required();
    auto* n_palin = nat->add_subcommand("palindrome", "Is the digit string a palindrome?");
    n_palin->add_option("n", nat_a)->required();
    auto* n_eleven = nat->add_subcommand("eleven", "Is n divisible by base+1?");
    n_eleven->add_option("n", nat_a)->required();
    auto* n_paste = nat->add_subcommand("paste", "base^cipher(m) n + m");
    n_paste->add_option("n", nat_a)->required();
    n_paste->add_option("m", nat_b)->required();
    auto* n_fold = nat->add_subcommand("fold", "Left fold of paste");
    n_fold->add_option("n", nat_list)->required()->expected(-1);
    auto* n_games = nat->add_subcommand("games", "Verified digit-identity tables");
    std::string game_name;
    int game_rows = 9;
    n_games->add_option("game", game_name, "nines | repunits")->required()
        ->check(CLI::IsMember({"nines", "repunits"}));
    n_games->add_option("--rows", game_rows, "Number of rows");

    // ---- op ------------------------------------------------------------
    auto* op = app.add_subcommand("op", "Linear differential operator operations (D = d/dx)");
    op->require_subcommand(1);
    std::string op_a, op_b, op_c, op_f;
    std::vector<std::string> op_factors;
    auto* o_cipher = op->add_subcommand("cipher", "Number of coefficients");
    o_cipher->add_option("L", op_a)->required();
    auto* o_reverse = op->add_subcommand("reverse", "Coefficient reversal");
    o_reverse->add_option("L", op_a)->required();
    auto* o_classify = op->add_subcommand("classify", "palindromic / antipalindromic / neither");
    o_classify->add_option("L", op_a)->required();
    auto* o_add = op->add_subcommand("add", "Sum");
    o_add->add_option("L", op_a)->required();
    o_add->add_option("R", op_b)->required();
    auto* o_mul = op->add_subcommand("mul", "Composition L R in normal form");
    o_mul->add_option("L", op_a)->required();
    o_mul->add_option("R", op_b)->required();
    auto* o_paste = op->add_subcommand("paste", "L D^cipher(R) + R");
    o_paste->add_option("L", op_a)->required();
    o_paste->add_option("R", op_b)->required();
    auto* o_divide = op->add_subcommand("divide", "Right division by the monic D + c");
    o_divide->add_option("L", op_a)->required();
    o_divide->add_option("c", op_c)->required();
    auto* o_apply = op->add_subcommand("apply", "Apply L to an exp-polynomial");
    o_apply->add_option("L", op_a)->required();
    o_apply->add_option("f", op_f)->required();
    auto* o_charpoly = op->add_subcommand("charpoly", "Coefficient polynomial of a constant operator");
    o_charpoly->add_option("L", op_a)->required();
    auto* o_kernel = op->add_subcommand("kernel", "Kernel exponents of factored (beta D - alpha) products");
    o_kernel->add_option("--factor", op_factors, "Factor 'beta,alpha'")->required();
    auto* o_logderiv = op->add_subcommand("logderiv", "Order-one log-derivative pair and product");
    o_logderiv->add_option("L", op_a)->required();

    // ---- cheb ----------------------------------------------------------
    auto* cheb = app.add_subcommand("cheb", "Chebyshev half-degree reduction");
    cheb->require_subcommand(1);
    unsigned cheb_n = 0;
    std::string cheb_poly;
    std::vector<std::string> cheb_coeffs;
    auto* c_t = cheb->add_subcommand("t", "Chebyshev polynomial of the first kind");
    c_t->add_option("n", cheb_n)->required()->check(CLI::Range(0, 512));
    auto* c_reduce = cheb->add_subcommand("reduce", "Expansion of a palindromic P over T_k");
    c_reduce->add_option("poly", cheb_poly)->required();
    auto* c_lift = cheb->add_subcommand("lift", "Palindromic polynomial of an expansion");
    c_lift->add_option("coeff", cheb_coeffs)->required()->expected(-1);

    // ---- verify --------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Run the seeded property suite");
    std::uint64_t seed = 42;
    std::optional<std::uint64_t> cases;
    std::vector<std::string> filter_ids;
    bool timings = false;
    bool list_only = false;
    verify->add_option("--seed", seed, "Master seed");
    verify->add_option("--cases", cases, "Case count for scalable randomized properties");
    verify->add_option("--filter", filter_ids, "Property ids to run")->delimiter(',');
    verify->add_flag("--timings", timings, "Include elapsed milliseconds in JSON output");
    verify->add_flag("--list", list_only, "List registered properties and exit");

    CLI11_PARSE(app, argc, argv);
    Output out{format == "json"};

    // ---- dispatch ------------------------------------------------------
    char var = 'x';
    if (p_cipher->parsed()) {
        out.value(need_poly(poly_a).cipher());
    } else if (p_reverse->parsed()) {
        GPoly p = need_poly(poly_a, &var);
        out.value(reverse(p).str(var));
    } else if (p_flip->parsed()) {
        GPoly p = need_poly(poly_a, &var);
        out.value(raw_coefficient_flip(p).str(var));
    } else if (p_classify->parsed()) {
        out.value(std::string(to_string(classify(need_poly(poly_a)))));
    } else if (p_recip->parsed()) {
        GPoly p = need_poly(poly_a, &var);
        out.value(reciprocal_conj(p).str(var));
    } else if (p_paste->parsed()) {
        GPoly p = need_poly(poly_a, &var);
        out.value(paste(p, need_poly(poly_b)).str(var));
    } else if (p_fold->parsed()) {
        std::vector<GPoly> ps;
        for (const std::string& s : poly_list) ps.push_back(need_poly(s, &var));
        out.value(paste_fold(ps).str(var));
    } else if (p_add->parsed() || p_sub->parsed() || p_mul->parsed()) {
        GPoly p = need_poly(poly_a, &var);
        GPoly q = need_poly(poly_b);
        GPoly r = p_add->parsed() ? p + q : p_sub->parsed() ? p - q : p * q;
        out.value(r.str(var));
    } else if (p_divides->parsed()) {
        out.value(divides_at(need_poly(poly_a, &var), parse_gaussian(poly_c)));
    } else if (p_expand->parsed()) {
        out.value(expand(build_factored(poly_unit, poly_factors)).str(var));
    } else if (p_revfact->parsed()) {
        auto rf = reverse_factored(build_factored(poly_unit, poly_factors));
        ordered_json factors = ordered_json::array();
        for (const auto& [beta, alpha] : rf.factors)
            factors.push_back({{"beta", beta.str()}, {"alpha", alpha.str()}});
        out.object({{"unit", rf.unit.str()}, {"factors", factors}, {"expanded", expand(rf).str(var)}},
                   factored_str(rf, var) + " = " + expand(rf).str(var) + "\n");
    } else if (p_pair->parsed()) {
        auto rp = root_pairing(build_factored(poly_unit, poly_factors));
        ordered_json pairs = ordered_json::array();
        std::string text;
        for (const auto& [a, b] : rp.pairs) {
            pairs.push_back({a.str(), b.str()});
            text += "{" + a.str() + ", " + b.str() + "}\n";
        }
        ordered_json j{{"pairs", pairs}};
        if (rp.unpaired) {
            j["unpaired"] = rp.unpaired->str();
            text += "unpaired: " + rp.unpaired->str() + "\n";
        } else {
            j["unpaired"] = nullptr;
        }
        out.object(j, text);
    } else if (n_cipher->parsed()) {
        out.value(Numeral::parse(nat_a, base).cipher());
    } else if (n_reverse->parsed()) {
        out.value(reverse_nat(Numeral::parse(nat_a, base)).str());
    } else if (n_palin->parsed()) {
        out.value(is_palindrome(Numeral::parse(nat_a, base)));
    } else if (n_eleven->parsed()) {
        out.value(check_eleven(Numeral::parse(nat_a, base)));
    } else if (n_paste->parsed()) {
        out.value(paste_nat(Numeral::parse(nat_a, base), Numeral::parse(nat_b, base)).str());
    } else if (n_fold->parsed()) {
        std::vector<Numeral> ns;
        for (const std::string& s : nat_list) ns.push_back(Numeral::parse(s, base));
        out.value(paste_fold_nat(ns).str());
    } else if (n_games->parsed()) {
        if (base != 10) throw std::domain_error("the game tables are base-10 identities");
        auto rows = game_name == "nines" ? game_nines(game_rows) : game_repunits(game_rows);
        ordered_json jrows = ordered_json::array();
        bool all_equal = true;
        for (const GameRow& r : rows) {
            jrows.push_back({{"n", r.n}, {"lhs", r.lhs.get_str()}, {"rhs", r.rhs.get_str()},
                             {"equal", r.equal}});
            all_equal = all_equal && r.equal;
        }
        out.object({{"rows", jrows}}, game_table_text(rows));
        return all_equal ? kOk : kVerificationFailure;
    } else if (o_cipher->parsed()) {
        ParsedOp l = parse_op(op_a);
        out.value(std::visit([](const auto& o) { return o.cipher(); }, l.value));
    } else if (o_reverse->parsed()) {
        ParsedOp l = parse_op(op_a);
        out.value(std::visit([&](const auto& o) { return op_reverse(o).str(l.var); }, l.value));
    } else if (o_classify->parsed()) {
        ParsedOp l = parse_op(op_a);
        out.value(std::string(
            std::visit([](const auto& o) { return to_string(op_classify(o)); }, l.value)));
    } else if (o_add->parsed() || o_mul->parsed() || o_paste->parsed()) {
        ParsedOp l = parse_op(op_a);
        ParsedOp r = parse_op(op_b);
        auto [a, b] = align_rings(l.value, r.value);
        char v = l.var != 'x' ? l.var : r.var;
        std::string result = std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                const T& y = std::get<T>(b);
                if (o_add->parsed()) return (x + y).str(v);
                if (o_mul->parsed()) return op_mul(x, y).str(v);
                return op_paste(x, y).str(v);
            },
            a);
        out.value(result);
    } else if (o_divide->parsed()) {
        ParsedOp l = parse_op(op_a);
        GaussianRational c = parse_gaussian(op_c);
        std::visit(
            [&](const auto& x) {
                using Ring = typename std::decay_t<decltype(x)>::Ring;
                auto dv = right_divide_monic_linear(x, shift_for_ring<Ring>(c));
                std::string rem = Ring::str(dv.remainder, l.var);
                out.object({{"quotient", dv.quotient.str(l.var)}, {"remainder", rem}},
                           "quotient: " + dv.quotient.str(l.var) + "\nremainder: " + rem + "\n");
            },
            l.value);
    } else if (o_apply->parsed()) {
        ParsedOp l = parse_op(op_a);
        ExpPoly f = parse_exppoly(op_f);
        out.value(std::visit([&](const auto& o) { return apply(o, f).str(l.var); }, l.value));
    } else if (o_charpoly->parsed()) {
        ParsedOp l = parse_op(op_a);
        if (!std::holds_alternative<DiffOp<ConstRing>>(l.value))
            throw std::domain_error("charpoly requires constant coefficients");
        out.value(char_poly(std::get<DiffOp<ConstRing>>(l.value)).str('x'));
    } else if (o_kernel->parsed()) {
        std::vector<std::pair<GaussianRational, GaussianRational>> factors;
        for (const std::string& fa : op_factors) {
            auto comma = fa.find(',');
            if (comma == std::string::npos) throw parse_error("factor must be 'beta,alpha'", 0);
            factors.emplace_back(parse_gaussian(fa.substr(0, comma)),
                                 parse_gaussian(fa.substr(comma + 1)));
        }
        ordered_json exps = ordered_json::array();
        std::string text;
        for (const auto& [lambda, mult] : kernel_exponents(factors)) {
            exps.push_back({{"lambda", lambda.str()}, {"multiplicity", mult}});
            text += lambda.str() + " (multiplicity " + std::to_string(mult) + ")\n";
        }
        out.object({{"exponents", exps}}, text);
    } else if (o_logderiv->parsed()) {
        ParsedOp l = parse_op(op_a);
        LogDerivative ld =
            std::visit([](const auto& o) { return log_derivative_product(o); }, l.value);
        out.object({{"u1", ld.u1.str(l.var)}, {"u2", ld.u2.str(l.var)}, {"product", ld.product.str(l.var)}},
                   "u1: " + ld.u1.str(l.var) + "\nu2: " + ld.u2.str(l.var) +
                       "\nproduct: " + ld.product.str(l.var) + "\n");
    } else if (c_t->parsed()) {
        out.value(cheb_T(cheb_n).str('w'));
    } else if (c_reduce->parsed()) {
        ParsedPoly p = parse_poly(cheb_poly);
        auto ce = palindromic_to_cheb(p.value);
        ordered_json coeffs = ordered_json::array();
        std::string text;
        for (const auto& c : ce.coeffs) {
            coeffs.push_back(c.str());
            text += (text.empty() ? "" : " ") + c.str();
        }
        out.object({{"n", ce.coeffs.size() - 1}, {"coeffs", coeffs}}, text + "\n");
    } else if (c_lift->parsed()) {
        ChebExpansion<GaussianRational> ce;
        for (const std::string& s : cheb_coeffs) ce.coeffs.push_back(parse_gaussian(s));
        out.value(cheb_to_palindromic(ce).str('z'));
    } else if (verify->parsed()) {
        if (list_only) {
            for (const auto& spec : props::registry())
                std::cout << spec.id << "  (" << spec.mode << ", default cases " << spec.cases
                          << ") " << spec.anchor << "\n";
            return kOk;
        }
        std::set<std::string> filter(filter_ids.begin(), filter_ids.end());
        auto reports = props::run_all(seed, filter, cases);
        if (out.json) std::cout << props::reports_json(reports, seed, timings);
        else std::cout << props::reports_text(reports);
        return props::suite_passed(reports) ? kOk : kVerificationFailure;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
}
