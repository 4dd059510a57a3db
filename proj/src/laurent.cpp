#include "bkl/laurent.hpp"

#include <stdexcept>

namespace bkl {

namespace {

template <class Map>
void add_term(Map& m, const typename Map::key_type& k, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = m.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

std::string signed_term(bool first, const BigInt& c, const std::string& body) {
  std::string s;
  if (first) {
    s = c.str();
  } else {
    s = c < 0 ? " - " : " + ";
    s += (c < 0 ? BigInt(-c) : c).str();
  }
  if (!body.empty()) s += " " + body;
  return s;
}

}  // namespace

LaurentPoly1::LaurentPoly1(BigInt c) {
  if (c != 0) terms_.emplace(0, std::move(c));
}

LaurentPoly1 LaurentPoly1::monomial(BigInt c, int exponent) {
  LaurentPoly1 p;
  if (c != 0) p.terms_.emplace(exponent, std::move(c));
  return p;
}

int LaurentPoly1::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly1::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

BigInt LaurentPoly1::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly1::at_zero() const {
  if (!terms_.empty() && terms_.begin()->first < 0)
    throw std::domain_error("negative exponent at t = 0");
  return coefficient(0);
}

BigInt LaurentPoly1::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
  return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, BigInt(-c));
  return *this;
}

LaurentPoly1 LaurentPoly1::operator-() const {
  LaurentPoly1 p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
  LaurentPoly1 p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) add_term(p.terms_, ea + eb, BigInt(ca * cb));
  return p;
}

LaurentPoly1 divide_exact(const LaurentPoly1& a, const LaurentPoly1& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  LaurentPoly1 rem = a;
  LaurentPoly1 q;
  const int bmax = b.max_degree();
  const int bmin = b.min_degree();
  const BigInt& lead = b.terms_.rbegin()->second;
  while (!rem.is_zero()) {
    const int e = rem.max_degree();
    if (e - bmax < rem.min_degree() - bmin) break;
    const BigInt& c = rem.terms_.rbegin()->second;
    if (c % lead != 0) throw std::domain_error("inexact polynomial division");
    auto m = LaurentPoly1::monomial(c / lead, e - bmax);
    q += m;
    rem -= m * b;
  }
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

LaurentPoly1 LaurentPoly1::normalized_unit() const {
  if (terms_.empty()) return {};
  const int shift = min_degree();
  const bool flip = terms_.begin()->second < 0;
  LaurentPoly1 p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e - shift, flip ? BigInt(-c) : c);
  return p;
}

bool equal_up_to_units(const LaurentPoly1& a, const LaurentPoly1& b) {
  return a.normalized_unit() == b.normalized_unit();
}

std::string to_string(const LaurentPoly1& p, const char* var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    out += signed_term(first, c, std::string(var) + "^" + std::to_string(e));
    first = false;
  }
  return out;
}

LaurentPoly2::LaurentPoly2(long long c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, BigInt(c));
}

LaurentPoly2 LaurentPoly2::monomial(BigInt c, int v_exp, int z_exp) {
  LaurentPoly2 p;
  if (c != 0) p.terms_.emplace(Exponent{v_exp, z_exp}, std::move(c));
  return p;
}

int LaurentPoly2::max_v() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.rbegin()->first.first;
}

int LaurentPoly2::min_v() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.begin()->first.first;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, BigInt(-c));
  return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      add_term(p.terms_, LaurentPoly2::Exponent{ea.first + eb.first, ea.second + eb.second},
               BigInt(ca * cb));
  return p;
}

std::string to_string(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    out += signed_term(first, c,
                       "v^" + std::to_string(e.first) + " z^" + std::to_string(e.second));
    first = false;
  }
  return out;
}

LaurentPoly1 determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m)
    if (row.size() != n) throw std::domain_error("determinant of a non-square matrix");
  LaurentPoly1 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = LaurentPoly1{};
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace bkl
