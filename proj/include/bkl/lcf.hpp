#pragma once

// Left-canonical form delta^r A_1 ... A_k and the word problem.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bkl/braid_word.hpp"
#include "bkl/ncp.hpp"

namespace bkl {

/// A canonical factor or its inverse.
struct SignedFactor {
  Factor factor;
  int sign = 1;
  friend bool operator==(const SignedFactor&, const SignedFactor&) = default;
};

/// delta^{delta_power} W_1 ... W_s with each W_i a canonical factor or the
/// inverse of one. Band words embed letterwise.
struct FactorWord {
  int n = 1;
  int delta_power = 0;
  std::vector<SignedFactor> factors;
  friend bool operator==(const FactorWord&, const FactorWord&) = default;
};

FactorWord to_factor_word(const BandWord& w);
FactorWord inverse(const FactorWord& w);
FactorWord concat(const FactorWord& a, const FactorWord& b);
/// Expands every factor into band letters; delta powers stay in delta_power.
BandWord to_band_word(const FactorWord& w);
std::string to_string(const FactorWord& w);

struct LeftCanonicalForm {
  int n = 1;
  int inf = 0;
  std::vector<Factor> factors;

  int sup() const { return inf + static_cast<int>(factors.size()); }
  int canonical_length() const { return static_cast<int>(factors.size()); }
  friend bool operator==(const LeftCanonicalForm&, const LeftCanonicalForm&) = default;
};
using Lcf = LeftCanonicalForm;

/// Order in which adjacent pairs are left-weighted. Every order yields the
/// same form; kInsertion is the fast default.
enum class SweepOrder {
  kInsertion,          // append factors one at a time, sweeping leftwards
  kLeftToRightPasses,  // full left-to-right passes until a pass changes nothing
  kRandomPairs,        // repeatedly fix a uniformly chosen non-left-weighted pair
};

Lcf normalize(const FactorWord& w, SweepOrder order = SweepOrder::kInsertion, std::uint64_t seed = 0);

Lcf lcf(const BandWord& w);
Lcf lcf(const BandWord& w, SweepOrder order, std::uint64_t seed = 0);
Lcf lcf(const ArtinWord& w);

Lcf identity_lcf(int n);
Lcf delta_power_lcf(int n, int r);

struct InfSupLen {
  int inf;
  int sup;
  int len;
  friend bool operator==(const InfSupLen&, const InfSupLen&) = default;
};
InfSupLen inf_sup_len(const Lcf& f);

/// Throws DomainError for mismatched strand counts.
bool equal(const BandWord& a, const BandWord& b);

Lcf multiply(const Lcf& a, const Lcf& b);
Lcf invert(const Lcf& f);
/// u^{-1} f u.
Lcf conjugate(const Lcf& f, const BandWord& u);
/// u^{-1} f u for a canonical factor u; the hot path of summit-set searches.
Lcf conjugate_by_factor(const Lcf& f, const Factor& u);

FactorWord to_factor_word(const Lcf& f);
/// delta^r followed by the band words of A_1, ..., A_k.
BandWord lcf_to_word(const Lcf& f);

int writhe(const Lcf& f);
Permutation permutation_of(const Lcf& f);
/// True iff the stored form satisfies every LCF invariant.
bool is_valid_lcf(const Lcf& f);

/// `d^-1 {1,3|2} {1,3|2}`; the identity prints as `e`.
std::string to_string(const Lcf& f);
/// Inverse of to_string; `n` is needed when no factor is listed.
Lcf parse_lcf(std::string_view text, int n);
/// Compact byte string, equal iff the forms are equal.
std::string canonical_key(const Lcf& f);

}  // namespace bkl
