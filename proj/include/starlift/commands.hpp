#pragma once

#include <array>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "starlift/config.hpp"
#include "starlift/display.hpp"
#include "starlift/hensel.hpp"
#include "starlift/json_io.hpp"
#include "starlift/k0lab.hpp"
#include "starlift/moyal.hpp"
#include "starlift/star.hpp"

namespace starlift {

inline std::string write_report(const std::string& out_dir, const std::string& name,
                                const Json& report) {
  std::filesystem::create_directories(out_dir);
  auto path = (std::filesystem::path(out_dir) / name).string();
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write report file: " + path);
  f << report.dump(2) << '\n';
  return path;
}

// f*g for all monomial pairs up to the requested degree, with a Poisson
// cross-check column phi1(f,g) - phi1(g,f) = {f,g} per entry.
template <Algebra A>
int cmd_moyal_table(const StarProduct<A>& s, const RunConfig& cfg, std::ostream& out,
                    const std::string& out_dir) {
  if constexpr (!is_polynomial_algebra<A>::value) {
    throw ConfigError("moyal-table needs a polynomial base");
  } else {
    if (s.kind() != StarKind::moyal) throw ConfigError("moyal-table needs \"star\": \"moyal\"");
    const auto& alg = s.base();
    int max_degree = cfg.inputs.value("max_degree", 2);
    if (max_degree < 0 || max_degree > 6) throw ConfigError("max_degree must be in 0..6");
    std::vector<typename A::Element> monomials;
    for (int d = 0; d <= max_degree; ++d)
      for (const auto& exps : detail::compositions(d, 2 * alg.dof()))
        monomials.push_back(alg.monomial(exps, alg.field().one()));
    Json entries = Json::array();
    bool all_ok = true;
    for (const auto& f : monomials)
      for (const auto& g : monomials) {
        auto product = s.mul(embed(alg, f, cfg.precision), embed(alg, g, cfg.precision));
        auto lhs = moyal_phi(alg, 1, f, g) - moyal_phi(alg, 1, g, f);
        bool poisson_ok = lhs == poisson_bracket(f, g);
        all_ok = all_ok && poisson_ok;
        out << polynomial_text(alg, f) << " * " << polynomial_text(alg, g) << " = "
            << series_text(alg, product) << (poisson_ok ? "" : "  [poisson FAIL]") << "\n";
        entries.push_back(Json{{"f", polynomial_text(alg, f)},
                               {"g", polynomial_text(alg, g)},
                               {"product", series_json(alg, product)},
                               {"poisson_ok", poisson_ok}});
      }
    Json report{{"identity", "phi1(f,g) - phi1(g,f) = {f,g}"},
                {"star", star_kind_name(s.kind())},
                {"precision", cfg.precision},
                {"max_degree", max_degree},
                {"entries", std::move(entries)},
                {"passed", all_ok}};
    auto path = write_report(out_dir, "moyal-table-report.json", report);
    out << (all_ok ? "all Poisson checks passed" : "Poisson check FAILED") << "; report: " << path
        << "\n";
    return all_ok ? 0 : 1;
  }
}

template <Algebra A>
int cmd_assoc_check(const StarProduct<A>& s, const RunConfig& cfg, std::ostream& out,
                    const std::string& out_dir) {
  const auto& alg = s.base();
  std::vector<std::array<typename A::Element, 3>> triples;
  if (cfg.inputs.contains("triples")) {
    for (const auto& t : cfg.inputs.at("triples")) {
      if (!t.is_array() || t.size() != 3)
        throw ConfigError("each associativity triple must list three elements");
      triples.push_back({parse_element(alg, t.at(0)), parse_element(alg, t.at(1)),
                         parse_element(alg, t.at(2))});
    }
  } else {
    int samples = cfg.inputs.value("samples", 100);
    if (samples < 1 || samples > 100000) throw ConfigError("samples must be in 1..100000");
    Rng rng(cfg.seed);
    triples = sample_triples(alg, rng, samples);
  }
  auto rep = check_associativity(s, triples, cfg.precision);
  Json report = assoc_json(s, rep);
  for (std::size_t i = 0; i < rep.failures.size(); ++i) {
    const auto& [a, b, c] = triples[static_cast<std::size_t>(rep.failures[i].sample_index)];
    report["failures"][i]["triple"] =
        Json::array({element_text(alg, a), element_text(alg, b), element_text(alg, c)});
  }
  auto path = write_report(out_dir, "assoc-check-report.json", report);
  if (rep.passed()) {
    out << rep.total << " triples associative at precision " << cfg.precision
        << "; report: " << path << "\n";
    return 0;
  }
  const auto& first = rep.failures.front();
  const auto& [a, b, c] = triples[static_cast<std::size_t>(first.sample_index)];
  out << "associativity FAILED on triple (" << element_text(alg, a) << ", "
      << element_text(alg, b) << ", " << element_text(alg, c) << ") at h^"
      << first.mismatch_order << "; report: " << path << "\n";
  return 1;
}

template <Algebra A>
int cmd_invert(const StarProduct<A>& s, const RunConfig& cfg, std::ostream& out,
               const std::string& out_dir) {
  const auto& alg = s.base();
  if (!cfg.inputs.contains("input")) throw ConfigError("invert needs an \"input\" series");
  auto a = parse_series(alg, cfg.inputs.at("input"), cfg.precision);
  try {
    auto cert = invert_certified(s, a);
    auto path = write_report(out_dir, "invert-report.json", inversion_json(s, cert));
    out << "inverse: " << series_text(alg, cert.output) << "\n";
    out << (cert.ok() ? "residuals zero" : "residuals NONZERO") << "; report: " << path << "\n";
    return cert.ok() ? 0 : 1;
  } catch (const NotInvertibleAtClassicalLimit& e) {
    Json report{{"identity", "a*b = b*a = 1"},
                {"star", star_kind_name(s.kind())},
                {"precision", cfg.precision},
                {"input", series_json(alg, a)},
                {"invertible", false},
                {"error", e.what()}};
    auto path = write_report(out_dir, "invert-report.json", report);
    out << "not invertible: " << e.what() << "; report: " << path << "\n";
    return 1;
  }
}

template <Algebra A>
int cmd_lift_idempotent(const StarProduct<A>& s, const RunConfig& cfg, std::ostream& out,
                        const std::string& out_dir) {
  const auto& alg = s.base();
  if (alg.field().characteristic() == 2)
    throw CharacteristicTwo("idempotent lifting requires 2 to be invertible (2a-1 occurs)");
  if (!cfg.inputs.contains("input"))
    throw ConfigError("lift-idempotent needs an \"input\" element");
  auto e = parse_element(alg, cfg.inputs.at("input"));
  auto cert = lift_idempotent(s, e, cfg.precision);
  auto path = write_report(out_dir, "lift-idempotent-report.json", idempotent_json(s, cert));
  out << "lift: " << series_text(alg, cert.lifted) << "\n";
  out << (cert.ok() ? "certificate passed" : "certificate FAILED") << "; report: " << path
      << "\n";
  return cert.ok() ? 0 : 1;
}

template <Algebra A>
int cmd_k0_experiment(const StarProduct<A>& s, const RunConfig& cfg, std::ostream& out,
                      const std::string& out_dir) {
  if constexpr (!is_matrix_algebra<A>::value) {
    throw ConfigError("k0-experiment needs a matrix base");
  } else {
    const auto& alg = s.base();
    if (alg.field().characteristic() == 2)
      throw CharacteristicTwo("idempotent lifting requires 2 to be invertible (2a-1 occurs)");
    int conjugates = cfg.inputs.value("conjugates", 2);
    int alternatives = cfg.inputs.value("alternatives", 2);
    if (conjugates < 0 || conjugates > 64) throw ConfigError("conjugates must be in 0..64");
    if (alternatives < 0 || alternatives > 64) throw ConfigError("alternatives must be in 0..64");
    Rng rng(cfg.seed);
    auto corpus = default_corpus(alg, rng, conjugates);
    auto report = run_k0_experiment(s, corpus, cfg.precision, cfg.seed, alternatives);
    auto path = write_report(out_dir, "k0-experiment-report.json", k0_report_json(alg, report));
    out << report.entries.size() << " idempotents lifted, " << report.passed() << " passed, "
        << report.failed() << " failed; report: " << path << "\n";
    return report.ok() ? 0 : 1;
  }
}

template <Algebra A>
int dispatch_command(const std::string& command, const StarProduct<A>& s, const RunConfig& cfg,
                     std::ostream& out, const std::string& out_dir) {
  if (command == "moyal-table") return cmd_moyal_table(s, cfg, out, out_dir);
  if (command == "assoc-check") return cmd_assoc_check(s, cfg, out, out_dir);
  if (command == "invert") return cmd_invert(s, cfg, out, out_dir);
  if (command == "lift-idempotent") return cmd_lift_idempotent(s, cfg, out, out_dir);
  if (command == "k0-experiment") return cmd_k0_experiment(s, cfg, out, out_dir);
  throw ConfigError("unknown command '" + command + "'");
}

inline int run_command(const std::string& command, const Json& config_json, std::ostream& out,
                       const std::string& out_dir) {
  RunConfig cfg = parse_config(config_json);
  return with_tower(cfg, [&](const auto& star) {
    return dispatch_command(command, star, cfg, out, out_dir);
  });
}

}  // namespace starlift
