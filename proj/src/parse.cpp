#include "pastrev/parse.hpp"

#include <cctype>
#include <map>

namespace pastrev {

namespace {

// Shared recursive-descent scanner. Whitespace is insignificant everywhere.
class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    // Next meaningful character after the one peek() reports.
    char peek_second() {
        skip_ws();
        std::size_t p = pos_ + 1;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        return p < text_.size() ? text_[p] : '\0';
    }
    char peek_raw(std::size_t ahead) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected '") + c + "' " + what);
    }
    bool lookahead_keyword(const char* word) {
        skip_ws();
        for (std::size_t i = 0; word[i] != '\0'; ++i)
            if (peek_raw(i) != word[i]) return false;
        return true;
    }
    void keyword(const char* word) {
        if (!lookahead_keyword(word)) fail(std::string("expected '") + word + "'");
        while (*word != '\0') {
            ++pos_;
            ++word;
        }
    }
    bool at_end() { return peek() == '\0'; }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    // +/- between terms; returns 0 when neither is present.
    int sign_or_zero() {
        if (accept('+')) return 1;
        if (accept('-')) return -1;
        return 0;
    }

    mpz_class integer() {
        skip_ws();
        std::string ds;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ds += text_[pos_++];
        if (ds.empty()) fail("expected a number");
        return mpz_class(ds, 10);
    }

    unsigned long exponent() {
        mpz_class e = integer();
        if (!e.fits_ulong_p()) fail("exponent out of range");
        return e.get_ui();
    }

    // digits [/ digits], no sign
    Rational rational_atom() {
        mpz_class n = integer();
        if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek_second()))) {
            accept('/');
            mpz_class d = integer();
            if (sgn(d) == 0) fail("zero denominator");
            return Rational(n, d);
        }
        return Rational(n);
    }

    // rational ['i'] | 'i', no sign
    GaussianRational gaussian_atom() {
        if (peek() == 'i') {
            ++pos_;
            return GaussianRational(Rational(0), Rational(1));
        }
        Rational r = rational_atom();
        if (peek() == 'i') {
            ++pos_;
            return GaussianRational(Rational(0), r);
        }
        return GaussianRational(r);
    }

    // signed sum of gaussian atoms: `3`, `-2i`, `3+2i`, `1/2-i`
    GaussianRational gaussian_expr() {
        GaussianRational acc;
        bool first = true;
        while (true) {
            int s = sign_or_zero();
            if (s == 0) {
                if (!first) break;
                s = 1;
            }
            GaussianRational g = gaussian_atom();
            acc += s < 0 ? -g : g;
            first = false;
            char c = peek();
            if (c != '+' && c != '-') break;
        }
        return acc;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

bool is_var_letter(char c) { return c == 'x' || c == 'z'; }

// One polynomial parser shared by the standalone grammar, operator
// coefficients, and exp-polynomial arguments.
class PolyParser {
public:
    PolyParser(Scanner& sc, char& var) : sc_(sc), var_(var) {}

    // coefficient [var ['^' k]] | var ['^' k]. A '*' is consumed only when a
    // variable follows, so `2*D` and `2*exp(x)` leave the star to the caller.
    Poly<GaussianRational> monomial() {
        GaussianRational coeff(1);
        bool have_coeff = false;
        char c = sc_.peek();
        if (c == '(') {
            sc_.expect('(', "");
            coeff = sc_.gaussian_expr();
            sc_.expect(')', "closing a coefficient");
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'i') {
            coeff = sc_.gaussian_atom();
            have_coeff = true;
        }
        if (have_coeff && sc_.peek() == '*') {
            if (!is_var_letter(sc_.peek_second())) return Poly<GaussianRational>(coeff);
            sc_.expect('*', "");
        }
        char v = sc_.peek();
        if (std::isalpha(static_cast<unsigned char>(v)) && v != 'D' &&
            !(have_coeff == false && sc_.lookahead_keyword("exp"))) {
            if (!is_var_letter(v)) sc_.fail(std::string("unknown variable '") + v + "'");
            if (var_ != '\0' && var_ != v)
                sc_.fail(std::string("variable '") + v + "' conflicts with '" + var_ + "'");
            var_ = v;
            sc_.accept(v);
            unsigned long k = 1;
            if (sc_.accept('^')) k = sc_.exponent();
            return Poly<GaussianRational>::monomial(coeff, k);
        }
        if (!have_coeff) sc_.fail("expected a term");
        return Poly<GaussianRational>(coeff);
    }

    // signed sum of monomials
    Poly<GaussianRational> expr() {
        Poly<GaussianRational> acc;
        bool first = true;
        while (true) {
            int s = sc_.sign_or_zero();
            if (s == 0) {
                if (!first) break;
                s = 1;
            }
            Poly<GaussianRational> m = monomial();
            acc += s < 0 ? -m : m;
            first = false;
            char c = sc_.peek();
            if (c != '+' && c != '-') break;
        }
        return acc;
    }

private:
    Scanner& sc_;
    char& var_;
};

}  // namespace

Rational parse_rational(const std::string& text) {
    Scanner sc(text);
    int s = sc.sign_or_zero();
    Rational r = sc.rational_atom();
    if (!sc.at_end()) sc.fail("trailing input after rational");
    return s < 0 ? -r : r;
}

GaussianRational parse_gaussian(const std::string& text) {
    Scanner sc(text);
    GaussianRational g = sc.gaussian_expr();
    if (!sc.at_end()) sc.fail("trailing input after number");
    return g;
}

ParsedPoly parse_poly(const std::string& text) {
    Scanner sc(text);
    char var = '\0';
    PolyParser pp(sc, var);
    Poly<GaussianRational> p = pp.expr();
    if (!sc.at_end()) sc.fail("trailing input after polynomial");
    return {std::move(p), var == '\0' ? 'x' : var};
}

ParsedOp parse_op(const std::string& text) {
    Scanner sc(text);
    char var = '\0';
    PolyParser pp(sc, var);
    std::map<std::size_t, Poly<GaussianRational>> by_power;
    bool first = true;
    while (true) {
        int s = sc.sign_or_zero();
        if (s == 0) {
            if (!first) break;
            s = 1;
        }
        Poly<GaussianRational> coeff(GaussianRational(1));
        std::size_t power = 0;
        bool coeff_taken = false;
        if (sc.peek() == '(') {
            sc.expect('(', "");
            coeff = pp.expr();
            sc.expect(')', "closing a coefficient");
            coeff_taken = true;
        } else if (sc.peek() != 'D') {
            coeff = pp.monomial();
            coeff_taken = true;
        }
        if (!coeff_taken || (sc.peek() == '*' && sc.peek_second() == 'D')) {
            if (coeff_taken) sc.expect('*', "");
            sc.expect('D', "the operator symbol");
            power = sc.accept('^') ? sc.exponent() : 1;
        }
        by_power[power] += s < 0 ? -coeff : coeff;
        first = false;
        char c = sc.peek();
        if (c != '+' && c != '-') break;
    }
    if (!sc.at_end()) sc.fail("trailing input after operator");

    std::size_t top = 0;
    bool all_const = true;
    for (const auto& [k, c] : by_power) {
        if (!c.is_zero()) top = std::max(top, k);
        all_const = all_const && c.degree() <= 0;
    }
    if (all_const) {
        std::vector<GaussianRational> coeffs(top + 1, GaussianRational());
        for (const auto& [k, c] : by_power)
            if (k < coeffs.size()) coeffs[k] = c.constant_term();
        return {OpVariant(DiffOp<ConstRing>(std::move(coeffs))), var == '\0' ? 'x' : var};
    }
    std::vector<Poly<Rational>> coeffs(top + 1, Poly<Rational>());
    for (const auto& [k, c] : by_power) {
        for (const auto& g : c.coeffs())
            if (!g.is_real())
                throw parse_error("imaginary coefficients cannot mix with x-dependent coefficients", 0);
        if (k < coeffs.size()) coeffs[k] = to_rational(c);
    }
    return {OpVariant(DiffOp<PolyRing>(std::move(coeffs))), var == '\0' ? 'x' : var};
}

ExpPoly parse_exppoly(const std::string& text) {
    Scanner sc(text);
    char var = '\0';
    PolyParser pp(sc, var);
    ExpPoly acc;
    bool first = true;
    auto exp_argument = [&]() {
        sc.keyword("exp");
        sc.expect('(', "opening exp");
        Poly<GaussianRational> s = pp.expr();
        sc.expect(')', "closing exp");
        return s;
    };
    while (true) {
        int s = sc.sign_or_zero();
        if (s == 0) {
            if (!first) break;
            s = 1;
        }
        Poly<GaussianRational> amp(GaussianRational(1));
        Poly<GaussianRational> expo;
        if (sc.lookahead_keyword("exp")) {
            expo = exp_argument();
        } else {
            if (sc.peek() == '(') {
                sc.expect('(', "");
                amp = pp.expr();
                sc.expect(')', "closing an amplitude");
            } else {
                amp = pp.monomial();
            }
            if (sc.peek() == '*') {
                sc.expect('*', "");
                expo = exp_argument();
            }
        }
        acc = acc + ExpPoly::exponential(s < 0 ? -amp : amp, expo);
        first = false;
        char c = sc.peek();
        if (c != '+' && c != '-') break;
    }
    if (!sc.at_end()) sc.fail("trailing input after exp-polynomial");
    return acc;
}

std::string op_str(const OpVariant& op, char var) {
    return std::visit([var](const auto& l) { return l.str(var); }, op);
}

DiffOp<PolyRing> to_poly_ring(const DiffOp<ConstRing>& op) {
    std::vector<Poly<Rational>> coeffs;
    coeffs.reserve(op.coeffs().size());
    for (const GaussianRational& g : op.coeffs()) {
        if (!g.is_real())
            throw std::domain_error("operator with imaginary constants cannot join the polynomial ring");
        coeffs.emplace_back(g.re());
    }
    return DiffOp<PolyRing>(std::move(coeffs));
}

}  // namespace pastrev
