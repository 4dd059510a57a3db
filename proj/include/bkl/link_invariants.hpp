#pragma once

// The L_n link family: band words, Seifert matrices, Alexander and HOMFLY-PT
// polynomials, the Morton-Franks-Williams bound and defect arithmetic.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bkl/braid_word.hpp"
#include "bkl/laurent.hpp"

namespace bkl {

struct LnWords {
  BandWord w;        // W_n in B_{n+3}, closes to L_n
  BandWord w_prime;  // W'_n in B_{n+2}, closes to K_n
};

LnWords ln_words(int n);

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix seifert_block_B();
IntMatrix seifert_block_C();
/// 5n x 5n, B on the diagonal blocks and C directly above them.
IntMatrix seifert_matrix_Ln(int n);

LaurentPoly1 determinant(const IntMatrix& m);
/// det(M - t M^T).
LaurentPoly1 alexander_from_seifert(const IntMatrix& m);

/// Reduced Burau matrix of an Artin word, entries in Z[t, t^-1].
PolyMatrix reduced_burau(const ArtinWord& w);
/// det(I - Burau(w)) / (1 + t + ... + t^{n-1}); defined up to +-t^k.
LaurentPoly1 alexander_from_burau(const BandWord& w);

/// Sign in v^-1 P(K+) + eps v P(K-) = z P(K0). kPlus is the convention the
/// L_n claims are stated in; kMinus is the common one.
enum class SkeinSign { kPlus = 1, kMinus = -1 };

/// P of the closure of sigma^-k in B_2, k >= 0.
LaurentPoly2 homfly_neg_torus2(int k, SkeinSign sign = SkeinSign::kPlus);
/// P(K_n) by repeated skein resolution at the distinguished crossing of each gamma'.
LaurentPoly2 homfly_Kn(int n, SkeinSign sign = SkeinSign::kPlus);
/// v^n sum_{i=0}^{n} binom(n,i) (-eps)^{n-i} v^{n-i} z^i P(sigma^{-n-1-i}).
LaurentPoly2 homfly_Kn_closed_form(int n, SkeinSign sign = SkeinSign::kPlus);

/// (d+ - d-)/2 + 1; throws DomainError on an odd v-span or the zero polynomial.
int mfw_bound(const LaurentPoly2& p);

/// Euler characteristic of the Bennequin surface: strands minus letters.
int bennequin_chi(const BandWord& w);
/// (-chi - sl) / 2; throws DomainError when -chi - sl is odd.
int defect(int chi, int sl);

struct LnReport {
  int n = 0;
  int mfw_bound = 0;
  int d_plus = 0;
  int d_minus = 0;
  /// Euler characteristic from the Seifert-matrix argument, 2 - 5n.
  int chi = 0;
  int chi_bennequin_word = 0;
  int chi_after_stabilization = 0;
  int degree_span = 0;
  std::string alexander_at_zero;
  std::string det_B;
  /// Seifert-matrix and Burau Alexander polynomials agree up to units. A
  /// cross-check of the matrix, not one of the claims, so all_ok ignores it.
  std::optional<bool> burau_agrees;
  int sl = 0;
  int defect = 0;
  int nb_word = 0;
  int nb_upper = 0;
  int nb_lower = 0;
  int nb_gap = 0;
  /// Claim name to verdict. "nb_equals_defect" rests on the generalized
  /// Jones conjecture and is listed under `conditional`.
  std::map<std::string, bool> verdicts;
  std::vector<std::string> conditional;

  bool all_ok() const;
};

/// Checks every L_n claim. The Burau cross-check runs when n <= burau_max_n.
LnReport verify_Ln_claims(int n, int burau_max_n = 2);

}  // namespace bkl
