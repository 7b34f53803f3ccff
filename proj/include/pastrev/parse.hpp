#pragma once

#include "pastrev/diffop.hpp"
#include "pastrev/errors.hpp"
#include "pastrev/exppoly.hpp"
#include "pastrev/gaussian.hpp"
#include "pastrev/poly.hpp"
#include "pastrev/rational.hpp"

#include <string>
#include <variant>

namespace pastrev {

struct ParsedPoly {
    Poly<GaussianRational> value;
    char var = 'x';
};

using OpVariant = std::variant<DiffOp<ConstRing>, DiffOp<PolyRing>>;

struct ParsedOp {
    OpVariant value;
    char var = 'x';
};

Rational parse_rational(const std::string& text);
GaussianRational parse_gaussian(const std::string& text);

// Polynomial grammar: terms `c`, `x`, `c*x^k`, `cx^k` joined by +/-;
// coefficients are rationals, Gaussian atoms (`2i`), or parenthesized
// Gaussian expressions (`(1+i)`); the variable letter is x or z.
ParsedPoly parse_poly(const std::string& text);

// Operator grammar: terms `c`, `p(x)`, `p*D^k`, `D^k` joined by +/-, with a
// required `*` before `D` and parentheses around multi-term coefficients.
// Selects the constants ring when every coefficient is constant; otherwise
// all coefficients must be real polynomials.
ParsedOp parse_op(const std::string& text);

// Exp-polynomial grammar: terms `q`, `q*exp(s)`, `exp(s)` joined by +/-,
// where q is a monomial or parenthesized polynomial and s a polynomial.
ExpPoly parse_exppoly(const std::string& text);

std::string op_str(const OpVariant& op, char var = 'x');

// Lifts constant-ring operators into the polynomial ring (requires real
// coefficients) so mixed-ring binary operations can proceed.
DiffOp<PolyRing> to_poly_ring(const DiffOp<ConstRing>& op);

}  // namespace pastrev
