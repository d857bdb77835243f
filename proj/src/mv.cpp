#include "fixcheck/mv.hpp"

namespace fixcheck {

std::string MVAlgebra::describe() const {
  if (kind == AlgebraKind::RealInterval) return "real " + std::to_string(k);
  return "chain " + std::to_string(k);
}

MVAlgebra real_interval(long k) {
  if (k < 1) throw Error("algebra bound must be >= 1, got " + std::to_string(k));
  return MVAlgebra{AlgebraKind::RealInterval, k};
}

MVAlgebra finite_chain(long k) {
  if (k < 1) throw Error("algebra bound must be >= 1, got " + std::to_string(k));
  return MVAlgebra{AlgebraKind::FiniteChain, k};
}

MVValue mv(const MVAlgebra& a, const Rational& v) {
  if (v < 0 || v > a.k)
    throw Error("value " + rational_str(v) + " outside [0," + std::to_string(a.k) + "]");
  if (a.kind == AlgebraKind::FiniteChain && denominator(v) != 1)
    throw Error("value " + rational_str(v) + " is not an element of chain " + std::to_string(a.k));
  return MVValue{v, a};
}

MVValue mv_top(const MVAlgebra& a) { return MVValue{Rational(a.k), a}; }
MVValue mv_bottom(const MVAlgebra& a) { return MVValue{Rational(0), a}; }

static void require_same(const MVValue& x, const MVValue& y) {
  if (x.algebra != y.algebra)
    throw Error("algebra mismatch: " + x.algebra.describe() + " vs " + y.algebra.describe());
}

MVValue oplus(const MVValue& x, const MVValue& y) {
  require_same(x, y);
  Rational s = x.value + y.value;
  if (s > x.algebra.k) s = x.algebra.k;
  return MVValue{s, x.algebra};
}

MVValue ominus(const MVValue& x, const MVValue& y) {
  require_same(x, y);
  Rational s = x.value - y.value;
  if (s < 0) s = 0;
  return MVValue{s, x.algebra};
}

MVValue mv_complement(const MVValue& x) {
  return MVValue{Rational(x.algebra.k) - x.value, x.algebra};
}

MVValue mv_join(const MVValue& x, const MVValue& y) {
  require_same(x, y);
  return x.value >= y.value ? x : y;
}

MVValue mv_meet(const MVValue& x, const MVValue& y) {
  require_same(x, y);
  return x.value <= y.value ? x : y;
}

bool mv_leq(const MVValue& x, const MVValue& y) {
  require_same(x, y);
  return x.value <= y.value;
}

bool mv_lt(const MVValue& x, const MVValue& y) {
  require_same(x, y);
  return x.value < y.value;
}

bool mv_eq(const MVValue& x, const MVValue& y) {
  require_same(x, y);
  return x.value == y.value;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error("empty number");
  auto bad = [&] { throw Error("malformed number '" + text + "'"); };
  auto slash = text.find('/');
  auto dot = text.find('.');
  try {
    if (slash != std::string::npos) {
      boost::multiprecision::cpp_int p(text.substr(0, slash));
      boost::multiprecision::cpp_int q(text.substr(slash + 1));
      if (q == 0) throw Error("zero denominator in '" + text + "'");
      return Rational(p, q);
    }
    if (dot != std::string::npos) {
      std::string frac = text.substr(dot + 1);
      if (frac.empty()) bad();
      for (char c : frac)
        if (!isdigit((unsigned char)c)) bad();
      boost::multiprecision::cpp_int ip(dot == 0 ? std::string("0") : text.substr(0, dot));
      boost::multiprecision::cpp_int den = 1;
      for (size_t i = 0; i < frac.size(); ++i) den *= 10;
      boost::multiprecision::cpp_int num = ip * den;
      boost::multiprecision::cpp_int fp(frac);
      num += (ip < 0 ? -fp : fp);
      return Rational(num, den);
    }
    return Rational(boost::multiprecision::cpp_int(text));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    bad();
  }
  return Rational(0);  // unreachable
}

std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace fixcheck
