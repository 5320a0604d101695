#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "odolab/cohomology.hpp"
#include "odolab/error.hpp"
#include "odolab/fredholm.hpp"
#include "odolab/harmonic.hpp"
#include "odolab/io.hpp"
#include "odolab/ktheory.hpp"
#include "odolab/length.hpp"
#include "odolab/selftest.hpp"
#include "odolab/supernatural.hpp"

namespace odolab::cli {

using io::json;

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

/// Parsed command line shared by every subcommand.
struct RunConfig {
  std::vector<std::string> inputs;
  std::string scale_path;
  std::string spec_path;
  std::string table_path;
  std::string mode = "auto";
  std::string method = "prefix";
  std::string output_path;
  std::optional<std::size_t> level;
  unsigned N = 0;
  std::int64_t n = 1;
  std::optional<Natural> sweep;
  std::string c = "1";
  std::string alpha = "1";
  std::optional<std::string> r;
  std::string op = "lcm";
  double tolerance = kDerivedTolerance;
};

namespace detail {

inline io::NumericMode numeric_mode(const std::string& mode) {
  if (mode == "exact") return io::NumericMode::exact;
  if (mode == "float") return io::NumericMode::floating;
  return io::NumericMode::automatic;
}

inline io::AnyFunction load_function(const RunConfig& cfg, const std::string& path, const Scale& scale) {
  io::AnyFunction f = io::function_from_json(io::read_json_file(path), scale, numeric_mode(cfg.mode));
  if (cfg.level) std::visit([&](auto& g) { g = g.promoted(*cfg.level); }, f);
  return f;
}

inline K0Class load_class(const RunConfig& cfg, const std::string& path, const Scale& scale) {
  K0Class f = io::k0_class_from_json(io::read_json_file(path), scale);
  return cfg.level ? f.promoted(*cfg.level) : f;
}

inline json witness_pair(const std::optional<std::pair<DualElement, DualElement>>& w) {
  if (!w) return nullptr;
  return json::array({io::dual_to_json(w->first), io::dual_to_json(w->second)});
}

inline json axiom_report_to_json(const AxiomReport& r) {
  return json{{"all_pass", r.all_pass()},
              {"normalization", r.normalization},
              {"non_archimedean", r.non_archimedean},
              {"order_class_constancy", r.order_class_constancy},
              {"witnesses",
               {{"normalization", r.normalization_witness ? io::dual_to_json(*r.normalization_witness) : json(nullptr)},
                {"non_archimedean", witness_pair(r.non_archimedean_witness)},
                {"order_class_constancy", witness_pair(r.order_class_witness)}}}};
}

inline json selftest_to_json(const SelftestReport& report) {
  json suites = json::array();
  for (const auto& s : report.suites) {
    json entry{{"name", s.name}, {"scale", s.scale}, {"passed", s.passed}, {"failed", s.failed}};
    if (s.failed > 0) entry["first_failure"] = s.first_failure;
    suites.push_back(entry);
  }
  json out{{"suites", suites}, {"passed", report.passed()}, {"failed", report.failed()}, {"ok", report.ok()}};
  if (report.fixture) {
    out["fixture"] = report.fixture->error ? json{{"error", *report.fixture->error}}
                                           : axiom_report_to_json(report.fixture->report);
  }
  return out;
}

inline Scale load_scale(const std::string& path) { return io::scale_from_json(io::read_json_file(path)); }
inline LengthSpec load_spec(const std::string& path) { return io::spec_from_json(io::read_json_file(path)); }

struct Outcome {
  json document;
  int code = kSuccess;
};

}  // namespace detail

/// Runs one command line (without the program name). Writes one canonical JSON
/// document to `out` (or --output), diagnostics to `err`.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("ODOLAB_TOLERANCE")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value > 0)) {
      err << "ODOLAB_TOLERANCE must be a positive number, got '" << env << "'\n";
      return kUsageError;
    }
    cfg.tolerance = value;
  }

  CLI::App app{"Exact harmonic analysis, cohomology and K-theory on odometers", "odolab"};
  app.require_subcommand(1);
  app.add_option("-o,--output", cfg.output_path, "Write the result document to this file");
  std::function<detail::Outcome()> action;

  auto group = [&app](const char* name, const char* help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };
  auto input = [&cfg](CLI::App* cmd, const char* name, const char* help) {
    cmd->add_option(name, cfg.inputs, help)->required();
  };
  auto with_scale = [&cfg](CLI::App* cmd) { cmd->add_option("--scale", cfg.scale_path, "Scale file")->required(); };
  auto with_spec = [&cfg](CLI::App* cmd, bool required) {
    auto* o = cmd->add_option("--spec", cfg.spec_path, "Length spec file");
    if (required) o->required();
  };
  auto with_level = [&cfg](CLI::App* cmd) { cmd->add_option("--level", cfg.level, "Promote inputs to level m"); };
  auto with_mode = [&cfg](CLI::App* cmd) {
    cmd->add_option("--mode", cfg.mode, "Numeric mode")->check(CLI::IsMember({"auto", "exact", "float"}));
  };

  // scale
  auto* scale_cmd = group("scale", "Scales s_1 | s_2 | ...");
  auto* scale_validate = scale_cmd->add_subcommand("validate", "Validate a scale file");
  input(scale_validate, "file", "Scale file");
  scale_validate->callback([&] {
    action = [&]() -> detail::Outcome {
      const Scale s = detail::load_scale(cfg.inputs.at(0));
      return {{{"scale", s.entries()}, {"depth", s.depth()}, {"lcm", to_string(scale_lcm(s))}}};
    };
  });

  // supernatural
  auto* sn_cmd = group("supernatural", "Supernatural number literals such as 2^inf*3");
  auto* sn_combine = sn_cmd->add_subcommand("combine", "lcm, gcd or product of two literals");
  input(sn_combine, "literals", "Two literals");
  sn_combine->add_option("--op", cfg.op, "Operation")->check(CLI::IsMember({"lcm", "gcd", "mul"}));
  sn_combine->callback([&] {
    action = [&]() -> detail::Outcome {
      if (cfg.inputs.size() != 2) throw CLI::ValidationError("literals", "exactly two literals are required");
      const auto a = parse_supernatural(cfg.inputs[0]);
      const auto b = parse_supernatural(cfg.inputs[1]);
      const CombineMode mode = cfg.op == "gcd" ? CombineMode::gcd : cfg.op == "mul" ? CombineMode::mul : CombineMode::lcm;
      return {{{"result", to_string(combine(a, b, mode))}}};
    };
  });
  auto* sn_divides = sn_cmd->add_subcommand("divides", "Whether the first literal divides the second");
  input(sn_divides, "literals", "Two literals");
  sn_divides->callback([&] {
    action = [&]() -> detail::Outcome {
      if (cfg.inputs.size() != 2) throw CLI::ValidationError("literals", "exactly two literals are required");
      return {{{"divides", divides(parse_supernatural(cfg.inputs[0]), parse_supernatural(cfg.inputs[1]))}}};
    };
  });

  // length
  auto* length_cmd = group("length", "Length functions on the dual group");
  auto* length_classify = length_cmd->add_subcommand("classify", "Recover (s, l) from a length table");
  input(length_classify, "table", "Length table file");
  length_classify->callback([&] {
    action = [&]() -> detail::Outcome {
      return {io::spec_to_json(classify(io::table_from_json(io::read_json_file(cfg.inputs.at(0)))))};
    };
  });
  auto* length_verify = length_cmd->add_subcommand("verify", "Check the length-function axioms exhaustively");
  length_verify->add_option("table", cfg.table_path, "Length table file");
  with_spec(length_verify, false);
  with_level(length_verify);
  length_verify->callback([&] {
    action = [&]() -> detail::Outcome {
      if (cfg.table_path.empty() == cfg.spec_path.empty())
        throw CLI::ValidationError("table", "give either a table file or --spec");
      const LengthTable t = cfg.table_path.empty() ? lambda_table(detail::load_spec(cfg.spec_path), cfg.level)
                                                   : io::table_from_json(io::read_json_file(cfg.table_path));
      return {detail::axiom_report_to_json(verify_axioms(t))};
    };
  });
  auto* length_growth = length_cmd->add_subcommand("growth", "Check lambda >= c ord^alpha and bound d(r)");
  with_spec(length_growth, true);
  length_growth->add_option("--c", cfg.c, "Growth constant c (rational)");
  length_growth->add_option("--alpha", cfg.alpha, "Growth exponent alpha (rational)");
  length_growth->add_option("--r", cfg.r, "Radius r for d(r) (rational)");
  length_growth->callback([&] {
    action = [&]() -> detail::Outcome {
      const LengthSpec spec = detail::load_spec(cfg.spec_path);
      const GrowthParams p{parse_rational(cfg.c), parse_rational(cfg.alpha)};
      const GrowthCertificate cert = growth_certificate(spec, p, spec.depth());
      json doc{{"holds", cert.holds}, {"witness", cert.witness ? io::dual_to_json(*cert.witness) : json(nullptr)},
               {"beta", to_string(p.beta())}};
      if (cfg.r) {
        const Rational r = parse_rational(*cfg.r);
        doc["d"] = d_of_r(spec, r);
        doc["totient_bound"] = totient_bound(r, p);
      }
      return {doc};
    };
  });

  // fn
  auto* fn_cmd = group("fn", "Locally constant functions");
  auto* fn_fourier = fn_cmd->add_subcommand("fourier", "Fourier coefficients over G_m");
  input(fn_fourier, "function", "Function file");
  with_scale(fn_fourier);
  with_level(fn_fourier);
  with_mode(fn_fourier);
  fn_fourier->callback([&] {
    action = [&]() -> detail::Outcome {
      const auto f = detail::load_function(cfg, cfg.inputs.at(0), detail::load_scale(cfg.scale_path));
      return {std::visit([](const auto& g) { return io::fourier_to_json(fourier(g)); }, f)};
    };
  });
  auto* fn_norm = fn_cmd->add_subcommand("norm", "Rapid-decay norm ||f||_N");
  input(fn_norm, "function", "Function file");
  with_spec(fn_norm, true);
  with_level(fn_norm);
  with_mode(fn_norm);
  fn_norm->add_option("--N", cfg.N, "Norm index");
  fn_norm->callback([&] {
    action = [&]() -> detail::Outcome {
      const LengthSpec spec = detail::load_spec(cfg.spec_path);
      const auto f = detail::load_function(cfg, cfg.inputs.at(0), spec.scale());
      const double norm = std::visit([&](const auto& g) { return rd_norm(g, cfg.N, spec); }, f);
      return {{{"N", cfg.N}, {"norm", norm}}};
    };
  });
  auto* fn_exp = fn_cmd->add_subcommand("exp", "x -> exp(i n f(x)) for real f");
  input(fn_exp, "function", "Function file");
  with_scale(fn_exp);
  with_level(fn_exp);
  with_mode(fn_exp);
  fn_exp->add_option("--n", cfg.n, "Frequency n");
  fn_exp->callback([&] {
    action = [&]() -> detail::Outcome {
      const auto f = detail::load_function(cfg, cfg.inputs.at(0), detail::load_scale(cfg.scale_path));
      return {io::function_to_json(std::visit([&](const auto& g) { return exp_i(g, cfg.n, cfg.tolerance); }, f))};
    };
  });

  // cohomology
  auto* coh_cmd = group("cohomology", "Coboundaries of the shift");
  auto* coh_solve = coh_cmd->add_subcommand("solve", "Solve g o phi - g = f");
  input(coh_solve, "function", "Function file");
  with_scale(coh_solve);
  with_level(coh_solve);
  with_mode(coh_solve);
  coh_solve->add_option("--method", cfg.method, "Solver")->check(CLI::IsMember({"prefix", "fourier"}));
  coh_solve->callback([&] {
    action = [&]() -> detail::Outcome {
      const auto f = detail::load_function(cfg, cfg.inputs.at(0), detail::load_scale(cfg.scale_path));
      json g = std::visit(
          [&](const auto& h) {
            if (cfg.method == "fourier") return io::function_to_json(solve_coboundary_fourier(h, cfg.tolerance));
            return io::function_to_json(solve_coboundary_prefix(h, cfg.tolerance));
          },
          f);
      return {{{"g", g}, {"method", cfg.method}}};
    };
  });

  // k0
  auto* k0_cmd = group("k0", "K_0 classes as integer-valued functions");
  auto* k0_decompose = k0_cmd->add_subcommand("decompose", "Coefficients in the free basis 1_(x)");
  input(k0_decompose, "function", "Integer-valued function file");
  with_scale(k0_decompose);
  k0_decompose->callback([&] {
    action = [&]() -> detail::Outcome {
      return {io::coeffs_to_json(decompose(detail::load_class(cfg, cfg.inputs.at(0), detail::load_scale(cfg.scale_path))))};
    };
  });
  auto* k0_pair = k0_cmd->add_subcommand("pair", "Pairing Phi(f) = sum_y phi_(y) f_(y)");
  input(k0_pair, "files", "Homomorphism file and function file");
  with_scale(k0_pair);
  k0_pair->callback([&] {
    action = [&]() -> detail::Outcome {
      if (cfg.inputs.size() != 2) throw CLI::ValidationError("files", "expected <phi.json> <f.json>");
      const KHomomorphism phi = io::khom_from_json(io::read_json_file(cfg.inputs[0]));
      return {{{"pairing", pair(phi, detail::load_class(cfg, cfg.inputs[1], detail::load_scale(cfg.scale_path)))}}};
    };
  });

  // khom
  auto* khom_cmd = group("khom", "K-homology via the Fredholm module");
  auto* khom_index = khom_cmd->add_subcommand("index", "Index of the compressed operator vs the pairing");
  input(khom_index, "files", "Homomorphism file and projection file");
  with_scale(khom_index);
  with_spec(khom_index, false);
  khom_index->callback([&] {
    action = [&]() -> detail::Outcome {
      if (cfg.inputs.size() != 2) throw CLI::ValidationError("files", "expected <phi.json> <p.json>");
      const Scale scale = detail::load_scale(cfg.scale_path);
      const KHomomorphism phi = io::khom_from_json(io::read_json_file(cfg.inputs[0]));
      const K0Class p = detail::load_class(cfg, cfg.inputs[1], scale);
      const std::int64_t index = cfg.spec_path.empty() ? index_pairing(phi, p).index
                                                       : index_pairing_spectral(phi, p, detail::load_spec(cfg.spec_path)).index;
      const std::int64_t pairing = pair(phi, p);
      return {{{"index", index}, {"pairing", pairing}, {"agree", index == pairing}}};
    };
  });

  // spectral
  auto* spectral_cmd = group("spectral", "Spectral triple with Dirac weights l_{n(y)}");
  auto* spectral_bound = spectral_cmd->add_subcommand("bound", "sup_y Lambda(y)|f(y) - f(gamma(y))| against 2||f||_1");
  input(spectral_bound, "function", "Function file");
  with_spec(spectral_bound, true);
  with_level(spectral_bound);
  with_mode(spectral_bound);
  spectral_bound->add_option("--Y", cfg.sweep, "Sweep bound (default min(256, s_M - 1))");
  spectral_bound->callback([&] {
    action = [&]() -> detail::Outcome {
      const LengthSpec spec = detail::load_spec(cfg.spec_path);
      const auto f = detail::load_function(cfg, cfg.inputs.at(0), spec.scale());
      const Natural sweep = cfg.sweep.value_or(std::min<Natural>(256, spec.scale().top() - 1));
      return {std::visit(
          [&](const auto& g) {
            const CommutatorSweep s = spectral_commutator_bound(g, spec, sweep);
            const double bound = 2.0 * rd_norm(g, 1, spec);
            return json{{"sup", s.value}, {"argmax", s.argmax}, {"bound", bound}, {"holds", s.value <= bound + cfg.tolerance}};
          },
          f)};
    };
  });

  // selftest
  auto* selftest = app.add_subcommand("selftest", "Run the bundled invariant suites");
  selftest->add_option("--table", cfg.table_path, "Length table fixture to verify as well");
  selftest->callback([&] {
    action = [&]() -> detail::Outcome {
      SelftestConfig st;
      st.tolerance = cfg.tolerance;
      if (!cfg.table_path.empty()) st.fixture = io::table_from_json(io::read_json_file(cfg.table_path));
      const SelftestReport report = run_selftest(st);
      return {detail::selftest_to_json(report), report.ok() ? kSuccess : kDomainError};
    };
  });

  detail::Outcome outcome;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    outcome = action();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    outcome = {{{"error", std::string(e.name())}, {"message", e.detail()}}, kDomainError};
    err << e.what() << '\n';
  }

  const std::string text = io::canonical(outcome.document) + '\n';
  if (cfg.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output_path);
    if (!file) {
      err << "cannot write '" << cfg.output_path << "'\n";
      return kDomainError;
    }
    file << text;
  }
  return outcome.code;
}

}  // namespace odolab::cli
