#include "bkl/conjugacy.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace bkl {

CapExceeded::CapExceeded(const std::string& message, std::vector<std::string> trace)
    : DomainError(message), trace_(std::move(trace)) {}

Lcf cycling(const Lcf& f) {
  if (f.factors.empty()) return f;
  FactorWord w{f.n, f.inf, {}};
  for (std::size_t i = 1; i < f.factors.size(); ++i) w.factors.push_back({f.factors[i], 1});
  w.factors.push_back({tau(f.factors.front(), -f.inf), 1});
  return normalize(w);
}

Lcf decycling(const Lcf& f) {
  if (f.factors.empty()) return f;
  FactorWord w{f.n, f.inf, {}};
  w.factors.push_back({tau(f.factors.back(), f.inf), 1});
  for (std::size_t i = 0; i + 1 < f.factors.size(); ++i) w.factors.push_back({f.factors[i], 1});
  return normalize(w);
}

namespace {

std::string describe(const char* step, const Lcf& f) {
  return std::string(step) + ": inf=" + std::to_string(f.inf) + " sup=" + std::to_string(f.sup()) +
         " " + to_string(f);
}

}  // namespace

ConjugacyClassSummary summit_representative(const Lcf& f, const ConjugacyConfig& cfg) {
  const int patience = std::max(1, f.n * (f.n - 1) / 2);
  std::vector<std::string> trace;
  int steps = 0;
  auto step = [&](const char* name, Lcf (*op)(const Lcf&), const Lcf& x) {
    if (++steps > cfg.max_cycling_steps)
      throw CapExceeded("summit_representative exceeded max_cycling_steps=" +
                            std::to_string(cfg.max_cycling_steps),
                        std::move(trace));
    Lcf y = op(x);
    if (trace.size() < 64) trace.push_back(describe(name, y));
    return y;
  };

  Lcf best = f;
  Lcf cur = f;
  for (int idle = 0; idle < patience && !cur.factors.empty();) {
    cur = step("cycling", cycling, cur);
    if (cur.inf > best.inf) {
      best = cur;
      idle = 0;
    } else {
      ++idle;
    }
  }
  cur = best;
  for (int idle = 0; idle < patience && !cur.factors.empty();) {
    cur = step("decycling", decycling, cur);
    if (cur.inf > best.inf || (cur.inf == best.inf && cur.sup() < best.sup())) {
      best = cur;
      idle = 0;
    } else {
      ++idle;
    }
  }
  return {best.inf, best.sup(), best.canonical_length(), best};
}

ConjugacyClassSummary summit_representative(const BandWord& w, const ConjugacyConfig& cfg) {
  return summit_representative(lcf(w), cfg);
}

namespace {

struct SearchResult {
  std::vector<Lcf> members;
  std::optional<Lcf> witness;
};

SearchResult closure(const ConjugacyClassSummary& summary, SummitKind kind,
                     const std::function<bool(const Lcf&)>* witness, const ConjugacyConfig& cfg) {
  const Lcf& start = summary.representative;
  const int n = start.n;
  const std::size_t cap = kind == SummitKind::kSuperSummit ? cfg.max_sss_size : cfg.max_ss_size;
  auto keep = [&](const Lcf& x) {
    if (x.inf != summary.class_inf) return false;
    return kind == SummitKind::kSummit || x.sup() == summary.class_sup;
  };

  SearchResult result;
  result.members.push_back(start);
  if (witness && (*witness)(start)) {
    result.witness = start;
    return result;
  }
  if (n == 1) return result;

  std::vector<Factor> conjugators;
  for (const auto& u : enumerate_factors(n))
    if (!u.is_identity()) conjugators.push_back(u);

  std::unordered_set<std::string> visited{canonical_key(start)};
  std::vector<Lcf> frontier{start};
  const int threads = std::max(1, cfg.threads);

  while (!frontier.empty()) {
    // Expansion is pure, so it may run in any order; insertion below is serial
    // and walks members and conjugators in a fixed order.
    std::vector<std::vector<Lcf>> expanded(frontier.size());
    auto expand_range = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        expanded[i].reserve(conjugators.size());
        for (const auto& u : conjugators) expanded[i].push_back(conjugate_by_factor(frontier[i], u));
      }
    };
    if (threads == 1 || frontier.size() < 8) {
      expand_range(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (std::size_t lo = 0; lo < frontier.size(); lo += chunk)
        pool.emplace_back(expand_range, lo, std::min(frontier.size(), lo + chunk));
      for (auto& t : pool) t.join();
    }

    std::vector<Lcf> next;
    for (auto& batch : expanded) {
      for (auto& x : batch) {
        if (!keep(x)) continue;
        if (!visited.insert(canonical_key(x)).second) continue;
        if (result.members.size() >= cap)
          throw CapExceeded(std::string(kind == SummitKind::kSuperSummit ? "super summit" : "summit") +
                            " set exceeds size guard " + std::to_string(cap));
        result.members.push_back(x);
        if (witness && (*witness)(x)) {
          result.witness = x;
          return result;
        }
        next.push_back(std::move(x));
      }
    }
    frontier = std::move(next);
  }
  return result;
}

std::vector<Lcf> sorted(std::vector<Lcf> v) {
  std::sort(v.begin(), v.end(),
            [](const Lcf& a, const Lcf& b) { return canonical_key(a) < canonical_key(b); });
  return v;
}

}  // namespace

std::vector<Lcf> super_summit_set(const Lcf& f, const ConjugacyConfig& cfg) {
  return sorted(closure(summit_representative(f, cfg), SummitKind::kSuperSummit, nullptr, cfg).members);
}

std::vector<Lcf> super_summit_set(const BandWord& w, const ConjugacyConfig& cfg) {
  return super_summit_set(lcf(w), cfg);
}

std::vector<Lcf> summit_set(const Lcf& f, const ConjugacyConfig& cfg) {
  return sorted(closure(summit_representative(f, cfg), SummitKind::kSummit, nullptr, cfg).members);
}

std::vector<Lcf> summit_set(const BandWord& w, const ConjugacyConfig& cfg) {
  return summit_set(lcf(w), cfg);
}

SummitSets summit_sets(const BandWord& w, bool with_summit_set, const ConjugacyConfig& cfg) {
  const auto summary = summit_representative(w, cfg);
  SummitSets out;
  out.sss = sorted(closure(summary, SummitKind::kSuperSummit, nullptr, cfg).members);
  if (with_summit_set) out.ss = sorted(closure(summary, SummitKind::kSummit, nullptr, cfg).members);
  return out;
}

std::optional<Lcf> find_in_summit_set(const ConjugacyClassSummary& summary, SummitKind kind,
                                      const std::function<bool(const Lcf&)>& witness,
                                      const ConjugacyConfig& cfg) {
  return closure(summary, kind, &witness, cfg).witness;
}

bool are_conjugate(const BandWord& a, const BandWord& b, const ConjugacyConfig& cfg) {
  if (a.n != b.n) throw DomainError("cannot compare braids on different strand counts");
  if (writhe(a) != writhe(b)) return false;
  if (permutation_of(a).cycle_type() != permutation_of(b).cycle_type()) return false;
  const auto sa = summit_representative(a, cfg);
  const auto sb = summit_representative(b, cfg);
  if (sa.class_inf != sb.class_inf || sa.class_sup != sb.class_sup) return false;
  if (sa.representative == sb.representative) return true;
  const Lcf target = sa.representative;
  return find_in_summit_set(sb, SummitKind::kSuperSummit,
                            [&](const Lcf& x) { return x == target; }, cfg)
      .has_value();
}

std::string class_key(const BandWord& w, const ConjugacyConfig& cfg) {
  const auto members = super_summit_set(w, cfg);
  return canonical_key(members.front());
}

}  // namespace bkl
