#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace fixcheck {

using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class AlgebraKind { RealInterval, FiniteChain };

/// An MV-chain: either the interval [0,k] with rational values, or the
/// integer chain {0,...,k}. Truncated addition is the monoid, complement
/// is k - x.
struct MVAlgebra {
  AlgebraKind kind = AlgebraKind::RealInterval;
  long k = 1;

  bool operator==(const MVAlgebra& o) const { return kind == o.kind && k == o.k; }
  bool operator!=(const MVAlgebra& o) const { return !(*this == o); }
  std::string describe() const;
};

MVAlgebra real_interval(long k = 1);
MVAlgebra finite_chain(long k);

struct MVValue {
  Rational value;
  MVAlgebra algebra;
};

/// Validates range (and integrality for chains).
MVValue mv(const MVAlgebra& a, const Rational& v);
MVValue mv_top(const MVAlgebra& a);
MVValue mv_bottom(const MVAlgebra& a);

MVValue oplus(const MVValue& x, const MVValue& y);   // truncated addition
MVValue ominus(const MVValue& x, const MVValue& y);  // truncated subtraction
MVValue mv_complement(const MVValue& x);             // k - x
MVValue mv_join(const MVValue& x, const MVValue& y);
MVValue mv_meet(const MVValue& x, const MVValue& y);
bool mv_leq(const MVValue& x, const MVValue& y);
bool mv_lt(const MVValue& x, const MVValue& y);
bool mv_eq(const MVValue& x, const MVValue& y);

/// Accepts "p/q", integers, and finite decimals like "0.25".
Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& r);  // canonical "p/q", "3" for integers

}  // namespace fixcheck
