#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace pastrev {

// Nonnegative integer viewed through its digit sequence in a fixed base.
// The digit view and the arbitrary-precision value always agree; leading
// zeros cannot occur (zero itself is the single digit 0).
class Numeral {
public:
    Numeral() : base_(10), value_(0) {}
    explicit Numeral(mpz_class value, int base = 10);
    explicit Numeral(long value, int base = 10) : Numeral(mpz_class(value), base) {}

    // Parses a digit string (0-9a-z) in the given base.
    static Numeral parse(const std::string& text, int base = 10);

    int base() const { return base_; }
    const mpz_class& value() const { return value_; }

    std::vector<int> digits() const;  // most significant first
    std::size_t cipher() const;       // digit count; cipher(0) = 1
    std::string str() const;

    bool operator==(const Numeral& o) const { return base_ == o.base_ && value_ == o.value_; }
    bool operator!=(const Numeral& o) const { return !(*this == o); }

private:
    int base_;
    mpz_class value_;
};

std::size_t cipher_nat(const Numeral& n);

// Digit reversal; leading zeros produced by the flip are normalized away
// (reverse of 120 is 21), so the involution law needs a nonzero last digit.
Numeral reverse_nat(const Numeral& n);

// base^cipher(m) * n + m: digit-sequence concatenation.
Numeral paste_nat(const Numeral& n, const Numeral& m);

Numeral paste_fold_nat(std::span<const Numeral> xs);
Numeral paste_fold_nat(const std::vector<Numeral>& xs);

bool is_palindrome(const Numeral& n);

// True iff base+1 divides the value (11 in base ten).
bool check_eleven(const Numeral& n);

// One verified identity row of a digit game table.
struct GameRow {
    int n;
    std::string expr;  // left-hand side as printed, e.g. "987 x 9 + 5"
    mpz_class lhs;
    mpz_class rhs;
    bool equal;
};

// Descending-digit nines table: (9 pasted down to 9-n) * 9 + 9 - (n + 2)
// equals a run of n+2 eights. Base ten; rows 1..10.
std::vector<GameRow> game_nines(int rows);

// Repunit squares: (n+1 ones)^2 equals 12...(n+1) pasted onto its reversal.
// Base ten; rows 1..9.
std::vector<GameRow> game_repunits(int rows);

std::string game_table_text(const std::vector<GameRow>& rows);

}  // namespace pastrev
