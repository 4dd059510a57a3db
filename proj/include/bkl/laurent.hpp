#pragma once

// Exact Laurent polynomials with arbitrary-precision integer coefficients.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bkl {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in t and t^{-1}. Zero coefficients are never stored.
class LaurentPoly1 {
 public:
  LaurentPoly1() = default;
  LaurentPoly1(BigInt c);  // NOLINT(google-explicit-constructor)
  LaurentPoly1(long long c) : LaurentPoly1(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  static LaurentPoly1 monomial(BigInt c, int exponent);
  static LaurentPoly1 t(int exponent = 1) { return monomial(1, exponent); }

  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;
  int max_degree() const;
  int span() const { return max_degree() - min_degree(); }
  BigInt coefficient(int exponent) const;
  /// Value at t = 0; requires no negative exponents.
  BigInt at_zero() const;
  BigInt at_one() const;

  LaurentPoly1& operator+=(const LaurentPoly1& o);
  LaurentPoly1& operator-=(const LaurentPoly1& o);
  LaurentPoly1 operator-() const;
  friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
  friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }
  friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b);
  friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;

  /// Quotient a / b; throws std::domain_error unless b divides a exactly.
  friend LaurentPoly1 divide_exact(const LaurentPoly1& a, const LaurentPoly1& b);

  /// Representative of the class modulo units +-t^k: lowest exponent 0 and
  /// positive lowest coefficient.
  LaurentPoly1 normalized_unit() const;

 private:
  std::map<int, BigInt> terms_;
};

bool equal_up_to_units(const LaurentPoly1& a, const LaurentPoly1& b);
std::string to_string(const LaurentPoly1& p, const char* var = "t");

/// Polynomial in v, z with (possibly negative) integer exponents.
class LaurentPoly2 {
 public:
  using Exponent = std::pair<int, int>;

  LaurentPoly2() = default;
  LaurentPoly2(long long c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly2 monomial(BigInt c, int v_exp, int z_exp);

  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest and smallest v-exponents.
  int max_v() const;
  int min_v() const;

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2 operator-() const;
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

 private:
  std::map<Exponent, BigInt> terms_;
};

/// Sparse `coef v^a z^b` terms sorted by (a, b).
std::string to_string(const LaurentPoly2& p);

using PolyMatrix = std::vector<std::vector<LaurentPoly1>>;

/// Fraction-free Bareiss elimination with row pivoting.
LaurentPoly1 determinant(PolyMatrix m);

}  // namespace bkl
