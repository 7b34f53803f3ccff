#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pastrev/natnum.hpp"

#include <stdexcept>

using namespace pastrev;

TEST_CASE("cipher is the digit count") {
    CHECK(Numeral(987L).cipher() == 3);
    CHECK(Numeral(0L).cipher() == 1);
    CHECK(Numeral(mpz_class("1000000000")).cipher() == 10);
    CHECK(Numeral(255L, 16).cipher() == 2);
}

TEST_CASE("digit reversal normalizes leading zeros") {
    CHECK(reverse_nat(Numeral(123L)) == Numeral(321L));
    CHECK(reverse_nat(Numeral(120L)) == Numeral(21L));
    CHECK(reverse_nat(Numeral(7L)) == Numeral(7L));
    CHECK(reverse_nat(Numeral(0L)) == Numeral(0L));
    CHECK(reverse_nat(reverse_nat(Numeral(123L))) == Numeral(123L));
}

TEST_CASE("pasting concatenates digit strings") {
    CHECK(paste_nat(Numeral(12L), Numeral(34L)) == Numeral(1234L));
    CHECK(paste_nat(Numeral(mpz_class("987654321")), Numeral(0L)) ==
          Numeral(mpz_class("9876543210")));
    Numeral a = paste_nat(paste_nat(Numeral(1L), Numeral(2L)), Numeral(3L));
    Numeral b = paste_nat(Numeral(1L), paste_nat(Numeral(2L), Numeral(3L)));
    CHECK(a == Numeral(123L));
    CHECK(a == b);
    CHECK_THROWS_AS(paste_nat(Numeral(1L, 10), Numeral(1L, 8)), std::domain_error);
}

TEST_CASE("fold handles multi-digit entries") {
    std::vector<Numeral> digits;
    for (long k = 1; k <= 10; ++k) digits.emplace_back(k);
    CHECK(paste_fold_nat(digits) == Numeral(mpz_class("12345678910")));
    CHECK(paste_fold_nat(std::vector<Numeral>{Numeral(9L), Numeral(10L)}) == Numeral(910L));
    CHECK(paste_fold_nat(std::vector<Numeral>(5, Numeral(1L))) == Numeral(11111L));
    CHECK_THROWS_AS(paste_fold_nat(std::vector<Numeral>{}), std::domain_error);
}

TEST_CASE("palindrome predicate") {
    CHECK(is_palindrome(Numeral(12321L)));
    CHECK_FALSE(is_palindrome(Numeral(123L)));
    CHECK(is_palindrome(Numeral(7L)));
    CHECK(is_palindrome(Numeral(0L)));
}

TEST_CASE("divisibility by base+1") {
    CHECK(check_eleven(Numeral(123321L)));  // 11 * 11211
    CHECK(check_eleven(Numeral(1221L)));    // 11 * 111
    CHECK(check_eleven(Numeral(121L)));     // 11 * 11, odd cipher
    CHECK_FALSE(check_eleven(Numeral(123L)));
    CHECK(check_eleven(Numeral(0x11L, 16)));  // 17 in base 16
}

TEST_CASE("parsing digit strings") {
    CHECK(Numeral::parse("987") == Numeral(987L));
    CHECK(Numeral::parse("0") == Numeral(0L));
    CHECK(Numeral::parse("ff", 16) == Numeral(255L, 16));
    CHECK(Numeral::parse("101", 2) == Numeral(5L, 2));
    CHECK_THROWS(Numeral::parse("12a"));
    CHECK_THROWS(Numeral::parse(""));
    CHECK(Numeral(255L, 16).str() == "ff");
}

TEST_CASE("nines table reproduces the printed rows") {
    auto rows = game_nines(9);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0].expr == "9 x 9 + 7");
    CHECK(rows[0].rhs == 88);
    CHECK(rows[2].expr == "987 x 9 + 5");
    CHECK(rows[2].rhs == 8888);
    CHECK(rows[7].expr == "98765432 x 9 + 0");
    CHECK(rows[8].expr == "987654321 x 9 - 1");
    CHECK(rows[8].rhs == mpz_class("8888888888"));
    for (const auto& r : rows) CHECK(r.equal);
}

TEST_CASE("tenth nines row still balances") {
    auto rows = game_nines(10);
    REQUIRE(rows.size() == 10);
    CHECK(rows[9].expr == "9876543210 x 9 - 2");
    CHECK(rows[9].lhs == mpz_class("88888888888"));
    CHECK(rows[9].equal);
    CHECK_THROWS_AS(game_nines(11), std::domain_error);
    CHECK_THROWS_AS(game_nines(0), std::domain_error);
}

TEST_CASE("repunit table reproduces the printed rows") {
    auto rows = game_repunits(9);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0].expr == "1 x 1");
    CHECK(rows[0].rhs == 1);
    CHECK(rows[2].lhs == 12321);
    CHECK(rows[4].rhs == mpz_class("123454321"));
    CHECK(rows[8].rhs == mpz_class("12345678987654321"));
    for (const auto& r : rows) CHECK(r.equal);
    CHECK_THROWS_AS(game_repunits(10), std::domain_error);
}

TEST_CASE("game text layout") {
    auto rows = game_nines(2);
    CHECK(game_table_text(rows) == "9 x 9 + 7 = 88\n98 x 9 + 6 = 888\n");
}
