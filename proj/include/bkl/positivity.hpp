#pragma once

// Strong quasipositivity, almost strong quasipositivity, the reduction Red,
// shortest words and negative band numbers.

#include <cstdint>
#include <optional>
#include <vector>

#include "bkl/braid_word.hpp"
#include "bkl/conjugacy.hpp"
#include "bkl/lcf.hpp"

namespace bkl {

/// delta^r W_1 ... W_s, each W_i a factor or an inverse factor, neither e nor delta.
using ReducedForm = FactorWord;

ReducedForm to_reduced_form(const Lcf& f);
/// r < 0 and some W_i is positive.
bool can_reduce(const ReducedForm& rf);
/// One reduction step. Among positive factors of maximal length the
/// rightmost one is traded against a delta^{-1}. Throws DomainError when
/// can_reduce is false.
ReducedForm red_step(const ReducedForm& rf);
/// Reduces until r >= 0 or no positive factor remains.
ReducedForm red_full(const Lcf& f);
/// red_full with every intermediate form, starting with the LCF itself.
std::vector<ReducedForm> red_trace(const Lcf& f);
/// Band word of the reduced form with delta powers written out as letters.
BandWord flatten(const ReducedForm& rf);

bool is_sqp(const BandWord& w);
bool is_sqp_conjugate(const BandWord& w, const ConjugacyConfig& cfg = {});

/// Conjugate to an ASQP braid but not to an SQP braid. Uses the super summit
/// set for n <= 4 and a summit-set witness search for n >= 5.
bool is_strict_asqp_conjugate(const BandWord& w, const ConjugacyConfig& cfg = {});
/// The n = 3, 4 criterion on one super summit element.
bool strict_asqp_by_super_summit(const BandWord& w, const ConjugacyConfig& cfg = {});
/// The general criterion: a summit-set member with inf = -1 whose first factor
/// has length n - 2. Valid for every n >= 3.
bool strict_asqp_by_summit_set(const BandWord& w, const ConjugacyConfig& cfg = {});

enum class Scope { kWord, kElement, kClass };

/// Shortest representative of the element or of its conjugacy class, n <= 4.
BandWord shortest_word(const BandWord& w, Scope scope, const ConjugacyConfig& cfg = {});

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

struct NbReport {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  BandWord witness;
  /// (n-1)r - (r/k) sum ||A_i|| when inf < 0 < sup, reduced to lowest terms.
  std::optional<Fraction> averaged_bound;
};

NbReport nb(const BandWord& w, Scope scope, const ConjugacyConfig& cfg = {});

/// Strand and band counts of a band word's Bennequin surface.
struct BandStats {
  int strands = 0;
  int pos_bands = 0;
  int neg_bands = 0;
  int euler_characteristic() const { return strands - pos_bands - neg_bands; }
  friend bool operator==(const BandStats&, const BandStats&) = default;
};

BandStats band_stats(const BandWord& w);
/// Bookkeeping of a tunnel stabilization: sign +1 removes a negative band,
/// sign -1 removes a positive band; both add a strand.
BandStats tunnel_stab_accounting(const BandStats& stats, int sign);

}  // namespace bkl
