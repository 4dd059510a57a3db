#include "bkl/cli.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "bkl/conjugacy.hpp"
#include "bkl/json_io.hpp"
#include "bkl/lcf.hpp"
#include "bkl/link_invariants.hpp"
#include "bkl/ncp.hpp"
#include "bkl/parse.hpp"
#include "bkl/positivity.hpp"

namespace bkl::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::size_t max_sss = ConjugacyConfig{}.max_sss_size;
  int max_cycling = ConjugacyConfig{}.max_cycling_steps;
  int threads = 1;
  std::string word;
  std::string word2;
  std::string scope = "element";
  std::string method = "auto";
  std::string family;
  int n = 0;
  bool standard_skein = false;
  int burau_max = 2;

  ConjugacyConfig config() const {
    ConjugacyConfig c;
    c.max_sss_size = c.max_ss_size = max_sss;
    c.max_cycling_steps = max_cycling;
    c.threads = threads;
    return c;
  }
};

std::string isl(const Lcf& f) {
  return "inf=" + std::to_string(f.inf) + " sup=" + std::to_string(f.sup()) +
         " len=" + std::to_string(f.canonical_length());
}

Scope parse_scope(const std::string& s) {
  if (s == "word") return Scope::kWord;
  if (s == "element") return Scope::kElement;
  return Scope::kClass;
}

ordered_json poly_json(const LaurentPoly1& p) {
  auto terms = ordered_json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c.str()});
  return terms;
}

ordered_json poly_json(const LaurentPoly2& p) {
  auto terms = ordered_json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, c.str()});
  return terms;
}

void print_set(const std::vector<Lcf>& members, const Options& o, std::ostream& out) {
  if (o.json) {
    auto arr = ordered_json::array();
    for (const auto& m : members) arr.push_back(to_json(m));
    out << arr.dump() << '\n';
    return;
  }
  for (const auto& m : members) out << to_string(m) << '\n';
}

void add_word(CLI::App* cmd, Options& o) { cmd->add_option("word", o.word, "braid word")->required(); }

void add_two_words(CLI::App* cmd, Options& o) {
  cmd->add_option("word", o.word, "first braid word")->required();
  cmd->add_option("other", o.word2, "second braid word")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Band-generator braid toolkit", "bklbraid"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--max-sss", o.max_sss, "size guard for super summit and summit sets")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-cycling", o.max_cycling, "cycling/decycling step cap")->check(CLI::PositiveNumber);
  app.add_option("--threads", o.threads, "worker threads for summit-set search")->check(CLI::PositiveNumber);

  std::function<void()> action;
  auto verb = [&](const char* name, const char* help, std::function<void()> fn) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };

  add_word(verb("lcf", "left canonical form", [&] {
             const Lcf f = lcf(parse_band_word(o.word));
             if (o.json) {
               out << to_json(f).dump() << '\n';
             } else {
               out << to_string(f) << '\n' << isl(f) << '\n';
             }
           }),
           o);

  add_two_words(verb("eq", "word problem", [&] {
                  const bool eq = equal(parse_band_word(o.word), parse_band_word(o.word2));
                  if (o.json) {
                    out << ordered_json{{"equal", eq}}.dump() << '\n';
                  } else {
                    out << (eq ? "true" : "false") << '\n';
                  }
                }),
                o);

  add_word(verb("inf", "inf, sup and canonical length", [&] {
             const Lcf f = lcf(parse_band_word(o.word));
             if (o.json) {
               out << ordered_json{{"inf", f.inf}, {"sup", f.sup()}, {"len", f.canonical_length()}}.dump()
                   << '\n';
             } else {
               out << isl(f) << '\n';
             }
           }),
           o);

  add_two_words(verb("conj", "conjugacy test", [&] {
                  const bool c = are_conjugate(parse_band_word(o.word), parse_band_word(o.word2), o.config());
                  if (o.json) {
                    out << ordered_json{{"conjugate", c}}.dump() << '\n';
                  } else {
                    out << (c ? "true" : "false") << '\n';
                  }
                }),
                o);

  add_word(verb("sss", "super summit set", [&] {
             const auto members = super_summit_set(parse_band_word(o.word), o.config());
             err << "super summit set: " << members.size() << " elements\n";
             print_set(members, o, out);
           }),
           o);

  add_word(verb("ss", "summit set", [&] {
             const auto members = summit_set(parse_band_word(o.word), o.config());
             err << "summit set: " << members.size() << " elements\n";
             print_set(members, o, out);
           }),
           o);

  add_word(verb("sqp", "strong quasipositivity", [&] {
             const BandWord w = parse_band_word(o.word);
             const bool word_level = is_sqp(w);
             const bool class_level = is_sqp_conjugate(w, o.config());
             if (o.json) {
               out << ordered_json{{"sqp", word_level}, {"sqp_conjugate", class_level}}.dump() << '\n';
             } else {
               out << "sqp=" << word_level << " sqp_conjugate=" << class_level << '\n';
             }
           }),
           o);

  auto* asqp = verb("asqp", "strict almost strong quasipositivity of the class", [&] {
    const BandWord w = parse_band_word(o.word);
    bool v = false;
    if (o.method == "super-summit") {
      v = strict_asqp_by_super_summit(w, o.config());
    } else if (o.method == "summit-set") {
      v = strict_asqp_by_summit_set(w, o.config());
    } else {
      v = is_strict_asqp_conjugate(w, o.config());
    }
    if (o.json) {
      out << ordered_json{{"strict_asqp", v}}.dump() << '\n';
    } else {
      out << "strict_asqp=" << v << '\n';
    }
  });
  add_word(asqp, o);
  asqp->add_option("--method", o.method, "auto, super-summit or summit-set")
      ->check(CLI::IsMember({"auto", "super-summit", "summit-set"}));

  add_word(verb("reduce", "reduction of the LCF towards a shortest word", [&] {
             const auto trace = red_trace(lcf(parse_band_word(o.word)));
             const BandWord flat = flatten(trace.back());
             if (o.json) {
               auto steps = ordered_json::array();
               for (const auto& rf : trace) steps.push_back(to_string(rf));
               out << ordered_json{{"steps", steps}, {"word", to_string(flat)}}.dump() << '\n';
             } else {
               for (const auto& rf : trace) out << to_string(rf) << '\n';
               out << to_string(flat) << '\n';
             }
           }),
           o);

  auto* shortest = verb("shortest", "shortest band word, n <= 4", [&] {
    const BandWord w = shortest_word(parse_band_word(o.word), parse_scope(o.scope), o.config());
    if (o.json) {
      out << ordered_json{{"word", to_string(w)}, {"length", letter_count(w)}}.dump() << '\n';
    } else {
      out << to_string(w) << '\n' << "length=" << letter_count(w) << '\n';
    }
  });
  add_word(shortest, o);
  shortest->add_option("--scope", o.scope, "element or class")->check(CLI::IsMember({"element", "class"}));

  auto* nbcmd = verb("nb", "negative band number", [&] {
    const NbReport r = nb(parse_band_word(o.word), parse_scope(o.scope), o.config());
    if (o.json) {
      out << to_json(r).dump() << '\n';
      return;
    }
    out << "lower=" << r.lower << '\n' << "upper=" << r.upper << '\n';
    if (r.exact) out << "exact=" << *r.exact << '\n';
    if (r.averaged_bound) out << "averaged_bound=" << r.averaged_bound->num << '/' << r.averaged_bound->den << '\n';
    out << "witness=" << to_string(r.witness) << '\n';
  });
  add_word(nbcmd, o);
  nbcmd->add_option("--scope", o.scope, "word, element or class")
      ->check(CLI::IsMember({"word", "element", "class"}));

  auto* alex = verb("alexander", "Alexander polynomial of L_n from its Seifert matrix", [&] {
    const auto p = alexander_from_seifert(seifert_matrix_Ln(o.n));
    if (o.json) {
      out << ordered_json{{"n", o.n}, {"terms", poly_json(p)}, {"span", p.span()}, {"at_zero", p.at_zero().str()}}
                 .dump()
          << '\n';
    } else {
      out << to_string(p) << '\n' << "span=" << p.span() << " at_zero=" << p.at_zero() << '\n';
    }
  });
  alex->add_option("--family", o.family, "link family")->required()->check(CLI::IsMember({"Ln"}));
  alex->add_option("n", o.n, "family index")->required()->check(CLI::PositiveNumber);

  auto* homfly = verb("homfly", "HOMFLY-PT polynomial of K_n", [&] {
    const auto p = homfly_Kn(o.n, o.standard_skein ? SkeinSign::kMinus : SkeinSign::kPlus);
    if (o.json) {
      out << ordered_json{{"n", o.n},
                          {"terms", poly_json(p)},
                          {"d_plus", p.max_v()},
                          {"d_minus", p.min_v()},
                          {"mfw_bound", mfw_bound(p)}}
                 .dump()
          << '\n';
    } else {
      out << to_string(p) << '\n'
          << "d_plus=" << p.max_v() << " d_minus=" << p.min_v() << " mfw_bound=" << mfw_bound(p) << '\n';
    }
  });
  homfly->add_option("--family", o.family, "link family")->required()->check(CLI::IsMember({"Kn"}));
  homfly->add_option("n", o.n, "family index")->required()->check(CLI::PositiveNumber);
  homfly->add_flag("--standard-skein", o.standard_skein, "use v^-1 P+ - v P- = z P0");

  auto* ln = verb("verify-ln", "check the L_n family claims", [&] {
    const LnReport r = verify_Ln_claims(o.n, o.burau_max);
    if (o.json) {
      out << to_json(r).dump() << '\n';
      return;
    }
    out << "n=" << r.n << " mfw_bound=" << r.mfw_bound << " chi=" << r.chi << " degree_span=" << r.degree_span
        << " sl=" << r.sl << " defect=" << r.defect << " nb_upper=" << r.nb_upper << " nb_lower=" << r.nb_lower
        << '\n';
    for (const auto& [name, ok] : r.verdicts) out << name << '=' << (ok ? "ok" : "FAILED") << '\n';
    out << "all_ok=" << r.all_ok() << '\n';
  });
  ln->add_option("n", o.n, "family index")->required()->check(CLI::PositiveNumber);
  ln->add_option("--burau-max", o.burau_max, "run the Burau cross-check up to this n");

  auto* factors = verb("factors", "enumerate canonical factors", [&] {
    const auto fs = enumerate_factors(o.n);
    if (o.json) {
      auto arr = ordered_json::array();
      for (const auto& f : fs) arr.push_back(f.blocks());
      out << arr.dump() << '\n';
    } else {
      for (const auto& f : fs) out << to_string(f) << '\n';
    }
    err << fs.size() << " factors\n";
  });
  factors->add_option("n", o.n, "strand count")->required()->check(CLI::Range(1, 12));

  std::vector<const char*> argv{"bklbraid"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // Help requests are Success exceptions; app.exit prints the help of the selected verb.
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  out << std::boolalpha;
  try {
    action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    for (const auto& line : e.trace()) err << "  " << line << '\n';
    return kDomainError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace bkl::cli
