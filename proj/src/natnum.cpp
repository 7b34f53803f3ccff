#include "pastrev/natnum.hpp"

#include "pastrev/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace pastrev {

namespace {

constexpr const char* kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

mpz_class base_pow(int base, std::size_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

}  // namespace

Numeral::Numeral(mpz_class value, int base) : base_(base), value_(std::move(value)) {
    if (base_ < 2 || base_ > 36) throw std::domain_error("numeral base must be in [2, 36]");
    if (sgn(value_) < 0) throw std::domain_error("numerals are nonnegative");
}

Numeral Numeral::parse(const std::string& text, int base) {
    if (base < 2 || base > 36) throw std::domain_error("numeral base must be in [2, 36]");
    if (text.empty()) throw parse_error("empty numeral", 0);
    mpz_class v = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        int d;
        if (ch >= '0' && ch <= '9') d = ch - '0';
        else if (ch >= 'a' && ch <= 'z') d = ch - 'a' + 10;
        else throw parse_error(std::string("invalid digit '") + ch + "'", i);
        if (d >= base) throw parse_error(std::string("digit '") + ch + "' out of range for base " +
                                         std::to_string(base), i);
        v = v * base + d;
    }
    return Numeral(std::move(v), base);
}

std::vector<int> Numeral::digits() const {
    if (sgn(value_) == 0) return {0};
    std::vector<int> ds;
    mpz_class v = value_;
    while (sgn(v) != 0) {
        ds.push_back(static_cast<int>(mpz_class(v % base_).get_ui()));
        v /= base_;
    }
    std::reverse(ds.begin(), ds.end());
    return ds;
}

std::size_t Numeral::cipher() const {
    if (sgn(value_) == 0) return 1;
    std::size_t count = 0;
    mpz_class v = value_;
    while (sgn(v) != 0) {
        v /= base_;
        ++count;
    }
    return count;
}

std::string Numeral::str() const {
    std::string out;
    for (int d : digits()) out += kDigits[d];
    return out;
}

std::size_t cipher_nat(const Numeral& n) { return n.cipher(); }

Numeral reverse_nat(const Numeral& n) {
    std::vector<int> ds = n.digits();
    mpz_class v = 0;
    for (auto it = ds.rbegin(); it != ds.rend(); ++it) v = v * n.base() + *it;
    return Numeral(std::move(v), n.base());
}

Numeral paste_nat(const Numeral& n, const Numeral& m) {
    if (n.base() != m.base()) throw std::domain_error("pasting numerals of different bases");
    return Numeral(n.value() * base_pow(n.base(), m.cipher()) + m.value(), n.base());
}

Numeral paste_fold_nat(std::span<const Numeral> xs) {
    if (xs.empty()) throw std::domain_error("paste fold of an empty sequence");
    Numeral acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = paste_nat(acc, xs[i]);
    return acc;
}

Numeral paste_fold_nat(const std::vector<Numeral>& xs) {
    return paste_fold_nat(std::span<const Numeral>(xs));
}

bool is_palindrome(const Numeral& n) {
    std::vector<int> ds = n.digits();
    return std::equal(ds.begin(), ds.begin() + static_cast<long>(ds.size() / 2), ds.rbegin());
}

bool check_eleven(const Numeral& n) {
    return mpz_class(n.value() % (n.base() + 1)) == 0;
}

std::vector<GameRow> game_nines(int rows) {
    if (rows < 1 || rows > 10) throw std::domain_error("nines table has rows 1..10");
    std::vector<GameRow> out;
    std::vector<Numeral> descending;
    for (int n = 0; n < rows; ++n) {
        descending.emplace_back(static_cast<long>(9 - n), 10);
        Numeral a = paste_fold_nat(descending);
        long t = 9 - (n + 2);
        GameRow row;
        row.n = n;
        row.expr = a.str() + " x 9 " + (t >= 0 ? "+ " : "- ") + std::to_string(t >= 0 ? t : -t);
        row.lhs = a.value() * 9 + t;
        row.rhs = paste_fold_nat(std::vector<Numeral>(static_cast<std::size_t>(n) + 2, Numeral(8L, 10))).value();
        row.equal = row.lhs == row.rhs;
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<GameRow> game_repunits(int rows) {
    if (rows < 1 || rows > 9) throw std::domain_error("repunit table has rows 1..9");
    std::vector<GameRow> out;
    for (int n = 0; n < rows; ++n) {
        Numeral rep = paste_fold_nat(std::vector<Numeral>(static_cast<std::size_t>(n) + 1, Numeral(1L, 10)));
        GameRow row;
        row.n = n;
        row.expr = rep.str() + " x " + rep.str();
        row.lhs = rep.value() * rep.value();
        if (n == 0) {
            row.rhs = 1;
        } else {
            std::vector<Numeral> ascending;
            for (int k = 0; k <= n; ++k) ascending.emplace_back(static_cast<long>(k + 1), 10);
            Numeral up = paste_fold_nat(ascending);
            ascending.pop_back();
            Numeral down = reverse_nat(paste_fold_nat(ascending));
            row.rhs = paste_nat(up, down).value();
        }
        row.equal = row.lhs == row.rhs;
        out.push_back(std::move(row));
    }
    return out;
}

std::string game_table_text(const std::vector<GameRow>& rows) {
    std::string out;
    for (const GameRow& r : rows) {
        out += r.expr + " = " + r.rhs.get_str();
        if (!r.equal) out += "  [MISMATCH lhs = " + r.lhs.get_str() + "]";
        out += "\n";
    }
    return out;
}

}  // namespace pastrev
