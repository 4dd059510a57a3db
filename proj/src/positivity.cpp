#include "bkl/positivity.hpp"

#include <algorithm>
#include <numeric>

namespace bkl {

ReducedForm to_reduced_form(const Lcf& f) { return to_factor_word(f); }

bool can_reduce(const ReducedForm& rf) {
  if (rf.delta_power >= 0) return false;
  return std::any_of(rf.factors.begin(), rf.factors.end(),
                     [](const SignedFactor& sf) { return sf.sign > 0; });
}

ReducedForm red_step(const ReducedForm& rf) {
  if (!can_reduce(rf)) throw DomainError("red_step needs a negative delta power and a positive factor");
  std::size_t k = 0;
  int best = -1;
  for (std::size_t i = 0; i < rf.factors.size(); ++i) {
    const auto& sf = rf.factors[i];
    if (sf.sign > 0 && sf.factor.length() >= best) {
      best = sf.factor.length();
      k = i;
    }
  }
  // W_k = d V_k^{-1} with W_k V_k = d, and W_1..W_{k-1} d = d tau(W_1)..tau(W_{k-1}).
  ReducedForm out{rf.n, rf.delta_power + 1, {}};
  out.factors.reserve(rf.factors.size());
  for (std::size_t i = 0; i < k; ++i) out.factors.push_back({tau(rf.factors[i].factor), rf.factors[i].sign});
  out.factors.push_back({right_complement(rf.factors[k].factor), -1});
  for (std::size_t i = k + 1; i < rf.factors.size(); ++i) out.factors.push_back(rf.factors[i]);
  return out;
}

std::vector<ReducedForm> red_trace(const Lcf& f) {
  std::vector<ReducedForm> trace{to_reduced_form(f)};
  while (can_reduce(trace.back())) trace.push_back(red_step(trace.back()));
  return trace;
}

ReducedForm red_full(const Lcf& f) { return red_trace(f).back(); }

BandWord flatten(const ReducedForm& rf) { return expand_delta(to_band_word(rf)); }

bool is_sqp(const BandWord& w) { return lcf(w).inf >= 0; }

bool is_sqp_conjugate(const BandWord& w, const ConjugacyConfig& cfg) {
  return summit_representative(w, cfg).class_inf >= 0;
}

namespace {

// B_1 and B_2 have no proper canonical factors; decide from the delta power.
bool strict_asqp_small(const BandWord& w) {
  if (w.n == 1) return false;
  return lcf(w).inf == -1;
}

}  // namespace

bool strict_asqp_by_super_summit(const BandWord& w, const ConjugacyConfig& cfg) {
  if (w.n != 3 && w.n != 4) throw DomainError("the super summit criterion applies to B3 and B4 only");
  const auto s = summit_representative(w, cfg);
  if (s.class_inf != -1) return false;
  if (w.n == 3) return s.class_len >= 1;
  const auto& fs = s.representative.factors;
  return std::any_of(fs.begin(), fs.end(), [](const Factor& a) { return a.length() == 2; });
}

bool strict_asqp_by_summit_set(const BandWord& w, const ConjugacyConfig& cfg) {
  if (w.n < 3) return strict_asqp_small(w);
  const auto s = summit_representative(w, cfg);
  if (s.class_inf != -1) return false;
  const int n = w.n;
  auto witness = [n](const Lcf& x) {
    return x.inf == -1 && !x.factors.empty() && x.factors.front().length() == n - 2;
  };
  return find_in_summit_set(s, SummitKind::kSummit, witness, cfg).has_value();
}

bool is_strict_asqp_conjugate(const BandWord& w, const ConjugacyConfig& cfg) {
  if (w.n < 3) return strict_asqp_small(w);
  if (w.n <= 4) return strict_asqp_by_super_summit(w, cfg);
  return strict_asqp_by_summit_set(w, cfg);
}

BandWord shortest_word(const BandWord& w, Scope scope, const ConjugacyConfig& cfg) {
  if (w.n > 4) throw DomainError("shortest words are only guaranteed for n <= 4");
  switch (scope) {
    case Scope::kElement:
      return flatten(red_full(lcf(w)));
    case Scope::kClass:
      return flatten(red_full(summit_representative(w, cfg).representative));
    case Scope::kWord:
      break;
  }
  throw DomainError("shortest_word needs scope element or class");
}

namespace {

NbReport report_from(const Lcf& f, int lower_inf, const BandWord& input) {
  NbReport rep;
  rep.lower = std::max(0, -lower_inf);
  rep.witness = flatten(red_full(f));
  rep.upper = nb_of_word(rep.witness);
  // Past four strands the reduced word can be worse than the input.
  const BandWord given = expand_delta(input);
  if (nb_of_word(given) < rep.upper) {
    rep.witness = given;
    rep.upper = nb_of_word(given);
  }
  if (f.n <= 4) rep.exact = rep.upper;
  if (f.inf < 0 && f.sup() > 0) {
    const std::int64_t r = -f.inf;
    const std::int64_t k = f.canonical_length();
    std::int64_t total = 0;
    for (const auto& a : f.factors) total += a.length();
    Fraction bound{(f.n - 1) * r * k - r * total, k};
    const std::int64_t g = std::gcd(bound.num, bound.den);
    if (g > 1) {
      bound.num /= g;
      bound.den /= g;
    }
    rep.averaged_bound = bound;
  }
  return rep;
}

}  // namespace

NbReport nb(const BandWord& w, Scope scope, const ConjugacyConfig& cfg) {
  validate(w);
  switch (scope) {
    case Scope::kWord: {
      NbReport rep;
      rep.exact = nb_of_word(w);
      rep.lower = rep.upper = *rep.exact;
      rep.witness = expand_delta(w);
      return rep;
    }
    case Scope::kElement: {
      const Lcf f = lcf(w);
      return report_from(f, f.inf, w);
    }
    case Scope::kClass: {
      const auto s = summit_representative(w, cfg);
      return report_from(s.representative, s.class_inf, w);
    }
  }
  return {};
}

BandStats band_stats(const BandWord& w) {
  const BandWord e = expand_delta(w);
  BandStats s{w.n, 0, 0};
  for (const auto& g : e.letters) (g.sign > 0 ? s.pos_bands : s.neg_bands)++;
  return s;
}

BandStats tunnel_stab_accounting(const BandStats& stats, int sign) {
  if (sign > 0) {
    if (stats.neg_bands < 1) throw DomainError("positive tunnel stabilization needs a negative band");
    return {stats.strands + 1, stats.pos_bands, stats.neg_bands - 1};
  }
  if (sign < 0) {
    if (stats.pos_bands < 1) throw DomainError("negative tunnel stabilization needs a positive band");
    return {stats.strands + 1, stats.pos_bands - 1, stats.neg_bands};
  }
  throw DomainError("tunnel stabilization sign must be +1 or -1");
}

}  // namespace bkl
