#ifndef HOMALG_RATIONAL_HPP
#define HOMALG_RATIONAL_HPP

// Exact scalar type. All arithmetic in this project is over the rationals;
// there is no floating point anywhere and every comparison is exact.

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

#include "homalg/errors.hpp"

namespace homalg {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator (GMP keeps the canonical form through arithmetic).
using Rational = mpq_class;

/// Build a rational from an integer pair, canonicalizing the result.
/// Throws DivisionByZero when den == 0.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

enum class ScalarOp { Add, Sub, Mul, Div };

/// Exact field arithmetic; Div with b == 0 reports DivisionByZero.
inline Rational scalar_arith(const Rational& a, const Rational& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::Add:
      return a + b;
    case ScalarOp::Sub:
      return a - b;
    case ScalarOp::Mul:
      return a * b;
    case ScalarOp::Div:
      if (b == 0) throw DivisionByZero("division by zero");
      return a / b;
  }
  throw Error("unreachable scalar op");
}

/// Canonical textual form: "p/q" in lowest terms, or plain "p" for integers.
inline std::string format_rational(const Rational& q) { return q.get_str(); }

/// Parse "p" or "p/q" (optional leading '-', decimal digits). Rejects
/// anything else, including a zero denominator; canonicalizes the value.
inline Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  const auto fail = [&]() -> Rational {
    throw ParseError("not a rational: \"" + text + "\"");
  };
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
  if (digits == 0) return fail();
  if (i < text.size()) {
    if (text[i] != '/') return fail();
    ++i;
    digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
    if (digits == 0 || i != text.size()) return fail();
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) return fail();
  if (q.get_den() == 0) throw ParseError("zero denominator: \"" + text + "\"");
  q.canonicalize();
  return q;
}

}  // namespace homalg

namespace Eigen {

// Dense types over the exact rational scalar.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

#endif
