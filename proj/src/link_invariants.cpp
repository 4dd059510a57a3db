#include "bkl/link_invariants.hpp"

#include <algorithm>

#include "bkl/conjugacy.hpp"
#include "bkl/positivity.hpp"

namespace bkl {

namespace {

void append(BandWord& w, int i, int j, int sign) { w.letters.push_back({i, j, sign}); }

}  // namespace

LnWords ln_words(int n) {
  if (n < 1) throw DomainError("the L_n family starts at n = 1");
  LnWords out;
  out.w.n = n + 3;
  append(out.w, 1, 3, -1);
  for (int j = 1; j <= n; ++j)
    for (int rep = 0; rep < 2; ++rep) {
      append(out.w, 1, 2, 1);
      append(out.w, 2, 3 + j, 1);
      append(out.w, 1, 2, -1);
      append(out.w, 1, 3, -1);
    }
  out.w_prime.n = n + 2;
  append(out.w_prime, 1, 2, -1);
  for (int j = 1; j <= n; ++j)
    for (int rep = 0; rep < 2; ++rep) {
      append(out.w_prime, 1, 2 + j, 1);
      append(out.w_prime, 1, 2, -1);
    }
  return out;
}

IntMatrix seifert_block_B() {
  return {{1, 0, -1, -1, -1},
          {0, 0, 0, 1, 0},
          {-1, 1, 0, 0, 1},
          {0, 1, 0, -1, 0},
          {0, 0, 1, 1, 1}};
}

IntMatrix seifert_block_C() {
  IntMatrix c(5, std::vector<int>(5, 0));
  c[4][0] = -1;
  return c;
}

IntMatrix seifert_matrix_Ln(int n) {
  if (n < 1) throw DomainError("the L_n family starts at n = 1");
  const auto b = seifert_block_B();
  const auto c = seifert_block_C();
  IntMatrix a(5 * n, std::vector<int>(5 * n, 0));
  for (int k = 0; k < n; ++k)
    for (int r = 0; r < 5; ++r)
      for (int s = 0; s < 5; ++s) {
        a[5 * k + r][5 * k + s] = b[r][s];
        if (k + 1 < n) a[5 * k + r][5 * (k + 1) + s] = c[r][s];
      }
  return a;
}

LaurentPoly1 determinant(const IntMatrix& m) {
  PolyMatrix p;
  for (const auto& row : m) {
    p.emplace_back();
    for (int x : row) p.back().emplace_back(static_cast<long long>(x));
  }
  return determinant(std::move(p));
}

LaurentPoly1 alexander_from_seifert(const IntMatrix& m) {
  const std::size_t n = m.size();
  PolyMatrix p(n, std::vector<LaurentPoly1>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("Seifert matrix must be square");
    for (std::size_t j = 0; j < n; ++j)
      p[i][j] = LaurentPoly1(static_cast<long long>(m[i][j])) -
                LaurentPoly1::monomial(m[j][i], 1);
  }
  return determinant(std::move(p));
}

PolyMatrix reduced_burau(const ArtinWord& w) {
  validate(w);
  const int d = w.n - 1;
  PolyMatrix m(d, std::vector<LaurentPoly1>(d));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  for (const auto& g : w.letters) {
    // Only column c of the generator matrix differs from the identity.
    const int c = g.i - 1;
    std::vector<LaurentPoly1> col(d);
    if (c > 0) col[c - 1] = g.sign > 0 ? LaurentPoly1::t() : LaurentPoly1(1);
    col[c] = g.sign > 0 ? -LaurentPoly1::t() : -LaurentPoly1::t(-1);
    if (c + 1 < d) col[c + 1] = g.sign > 0 ? LaurentPoly1(1) : LaurentPoly1::t(-1);
    for (int r = 0; r < d; ++r) {
      LaurentPoly1 acc;
      for (int k = 0; k < d; ++k)
        if (!col[k].is_zero() && !m[r][k].is_zero()) acc += m[r][k] * col[k];
      m[r][c] = std::move(acc);
    }
  }
  return m;
}

LaurentPoly1 alexander_from_burau(const BandWord& w) {
  validate(w);
  if (w.n == 1) return 1;
  auto m = reduced_burau(band_to_artin(w));
  const std::size_t d = m.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[i][j] = (i == j ? LaurentPoly1(1) : LaurentPoly1()) - m[i][j];
  LaurentPoly1 cyclotomic;
  for (int k = 0; k < w.n; ++k) cyclotomic += LaurentPoly1::t(k);
  return divide_exact(determinant(std::move(m)), cyclotomic);
}

LaurentPoly2 homfly_neg_torus2(int k, SkeinSign sign) {
  if (k < 0) throw DomainError("homfly_neg_torus2 needs k >= 0");
  const long long eps = static_cast<long long>(sign);
  // Unlink of two components: z P0 = v^-1 P(unknot) + eps v P(unknot).
  LaurentPoly2 p0 = LaurentPoly2::monomial(1, -1, -1) + LaurentPoly2::monomial(eps, 1, -1);
  LaurentPoly2 p1 = 1;
  if (k == 0) return p0;
  // Resolving a negative crossing of sigma^-k:
  // P(sigma^-k) = eps (v^-1 z P(sigma^-(k-1)) - v^-2 P(sigma^-(k-2))).
  const LaurentPoly2 a = LaurentPoly2::monomial(eps, -1, 1);
  const LaurentPoly2 b = LaurentPoly2::monomial(-eps, -2, 0);
  for (int m = 2; m <= k; ++m) {
    LaurentPoly2 next = a * p1 + b * p0;
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

LaurentPoly2 homfly_Kn(int n, SkeinSign sign) {
  if (n < 1) throw DomainError("homfly_Kn needs n >= 1");
  const long long eps = static_cast<long long>(sign);
  // Q(m, j) = -eps v^2 Q(m-1, j+1) + v z Q(m-1, j+2), Q(0, j) = P(sigma^-(j+1)).
  const LaurentPoly2 neg = LaurentPoly2::monomial(-eps, 2, 0);
  const LaurentPoly2 zero = LaurentPoly2::monomial(1, 1, 1);
  std::vector<LaurentPoly2> row;
  for (int j = 0; j <= 2 * n; ++j) row.push_back(homfly_neg_torus2(j + 1, sign));
  for (int m = 1; m <= n; ++m) {
    std::vector<LaurentPoly2> next;
    for (int j = 0; j + 2 < static_cast<int>(row.size()); ++j)
      next.push_back(neg * row[j + 1] + zero * row[j + 2]);
    row = std::move(next);
  }
  return row.front();
}

LaurentPoly2 homfly_Kn_closed_form(int n, SkeinSign sign) {
  if (n < 1) throw DomainError("homfly_Kn needs n >= 1");
  const long long eps = static_cast<long long>(sign);
  LaurentPoly2 sum;
  BigInt binom = 1;
  for (int i = 0; i <= n; ++i) {
    const BigInt coef = ((n - i) % 2 == 0 || eps < 0) ? binom : BigInt(-binom);
    sum += LaurentPoly2::monomial(coef, 2 * n - i, i) * homfly_neg_torus2(n + 1 + i, sign);
    binom = binom * (n - i) / (i + 1);
  }
  return sum;
}

int mfw_bound(const LaurentPoly2& p) {
  if (p.is_zero()) throw DomainError("mfw_bound of the zero polynomial");
  const int span = p.max_v() - p.min_v();
  if (span % 2 != 0) throw DomainError("odd v-span " + std::to_string(span));
  return span / 2 + 1;
}

int bennequin_chi(const BandWord& w) { return band_stats(w).euler_characteristic(); }

int defect(int chi, int sl) {
  const int twice = -chi - sl;
  if (twice % 2 != 0)
    throw DomainError("defect: -chi - sl = " + std::to_string(twice) + " is odd");
  return twice / 2;
}

bool LnReport::all_ok() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second; });
}

LnReport verify_Ln_claims(int n, int burau_max_n) {
  const auto words = ln_words(n);
  LnReport r;
  r.n = n;

  const auto p = homfly_Kn(n);
  r.d_plus = p.max_v();
  r.d_minus = p.min_v();
  r.mfw_bound = mfw_bound(p);
  r.verdicts["braid_index"] =
      r.d_plus == n && r.d_minus == -n - 2 && r.mfw_bound == n + 2 && p == homfly_Kn_closed_form(n);

  const auto seifert = seifert_matrix_Ln(n);
  const auto delta = alexander_from_seifert(seifert);
  const auto det_b = determinant(seifert_block_B());
  r.degree_span = delta.span();
  r.alexander_at_zero = delta.at_zero().str();
  r.det_B = det_b.at_zero().str();
  r.chi = 2 - 5 * n;
  r.verdicts["chi"] = r.degree_span == 5 * n && delta.at_zero() == 1 && det_b == LaurentPoly1(1) &&
                      determinant(seifert) == LaurentPoly1(1);
  if (n <= burau_max_n) r.burau_agrees = equal_up_to_units(delta, alexander_from_burau(words.w));

  r.sl = self_linking(words.w);
  r.verdicts["sl"] = r.sl == -(n + 4) && writhe(words.w) == -1;

  r.defect = defect(r.chi, r.sl);
  r.verdicts["defect"] = r.defect == 3 * n + 1;

  auto stats = band_stats(words.w);
  r.chi_bennequin_word = stats.euler_characteristic();
  for (int k = 0; k < n; ++k) stats = tunnel_stab_accounting(stats, +1);
  r.chi_after_stabilization = stats.euler_characteristic();
  r.nb_word = nb_of_word(words.w);
  r.nb_upper = stats.neg_bands;
  r.verdicts["nb_upper"] = r.nb_word == 4 * n + 1 && r.nb_upper == 3 * n + 1 &&
                           r.chi_bennequin_word == 2 - 7 * n &&
                           r.chi_after_stabilization == r.chi;

  r.nb_lower = std::max(0, -summit_representative(words.w).class_inf);
  // The summit inf bounds nb of the braid W_n, not of the link.
  r.verdicts["nb_lower"] = r.nb_lower <= r.nb_word;

  r.nb_gap = r.nb_word - r.nb_upper;
  r.verdicts["nb_equals_defect"] = r.defect == r.nb_upper && r.nb_gap == n;
  r.conditional.push_back("nb_equals_defect");
  return r;
}

}  // namespace bkl
