#pragma once

// Cycling, decycling, super summit sets, summit sets and the conjugacy test.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bkl/braid_word.hpp"
#include "bkl/lcf.hpp"

namespace bkl {

struct ConjugacyConfig {
  std::size_t max_sss_size = 1'000'000;
  std::size_t max_ss_size = 1'000'000;
  /// Total cycling plus decycling steps allowed in summit_representative.
  int max_cycling_steps = 100'000;
  /// Worker threads for summit-set frontier expansion; 1 runs serially.
  int threads = 1;
};

/// A size guard or iteration cap was hit. `trace()` holds the steps taken.
class CapExceeded : public DomainError {
 public:
  CapExceeded(const std::string& message, std::vector<std::string> trace = {});
  const std::vector<std::string>& trace() const { return trace_; }

 private:
  std::vector<std::string> trace_;
};

struct ConjugacyClassSummary {
  int class_inf = 0;
  int class_sup = 0;
  int class_len = 0;
  Lcf representative;
};

/// d^r A_2 ... A_k tau^{-r}(A_1); identity on canonical length 0.
Lcf cycling(const Lcf& f);
/// d^r tau^r(A_k) A_1 ... A_{k-1}; identity on canonical length 0.
Lcf decycling(const Lcf& f);

/// Iterated cycling until inf is stable, then iterated decycling until sup is
/// stable. A phase is declared stable after n(n-1)/2 consecutive steps without
/// improvement.
ConjugacyClassSummary summit_representative(const Lcf& f, const ConjugacyConfig& cfg = {});
ConjugacyClassSummary summit_representative(const BandWord& w, const ConjugacyConfig& cfg = {});

/// Super summit set, sorted by canonical key.
std::vector<Lcf> super_summit_set(const Lcf& f, const ConjugacyConfig& cfg = {});
std::vector<Lcf> super_summit_set(const BandWord& w, const ConjugacyConfig& cfg = {});

/// Summit set (conjugates realizing inf of the class), sorted by canonical key.
std::vector<Lcf> summit_set(const Lcf& f, const ConjugacyConfig& cfg = {});
std::vector<Lcf> summit_set(const BandWord& w, const ConjugacyConfig& cfg = {});

struct SummitSets {
  std::vector<Lcf> sss;
  std::optional<std::vector<Lcf>> ss;
};
SummitSets summit_sets(const BandWord& w, bool with_summit_set, const ConjugacyConfig& cfg = {});

enum class SummitKind { kSuperSummit, kSummit };

/// Breadth-first search of the (super) summit set of `summary`'s class,
/// returning the first member accepted by `witness`. Members are visited in a
/// deterministic order regardless of the thread count.
std::optional<Lcf> find_in_summit_set(const ConjugacyClassSummary& summary, SummitKind kind,
                                      const std::function<bool(const Lcf&)>& witness,
                                      const ConjugacyConfig& cfg = {});

bool are_conjugate(const BandWord& a, const BandWord& b, const ConjugacyConfig& cfg = {});

/// Smallest canonical key of the super summit set; a complete conjugacy invariant.
std::string class_key(const BandWord& w, const ConjugacyConfig& cfg = {});

}  // namespace bkl
