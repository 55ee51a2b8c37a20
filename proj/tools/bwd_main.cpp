// bwd: command-line front end for the finite-field energy toolkit.
//
// Exit status: 0 on success, 1 when a hard check fails, 2 on bad input.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bwd/characters.hpp"
#include "bwd/charsums.hpp"
#include "bwd/decompose.hpp"
#include "bwd/energy.hpp"
#include "bwd/error.hpp"
#include "bwd/harness.hpp"
#include "bwd/ratfunc.hpp"
#include "bwd/set_spec.hpp"
#include "bwd/sets.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kAssertionFailure = 1;
constexpr int kConfigError = 2;

struct FieldOpts {
  std::uint32_t p = 1009;
  std::uint32_t n = 1;
};

void add_field_options(CLI::App* cmd, FieldOpts& opts) {
  cmd->add_option("--p", opts.p, "Field characteristic")->capture_default_str();
  cmd->add_option("--n", opts.n, "Extension degree")->capture_default_str();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int run_records(const std::vector<bwd::VerificationRecord>& records, const std::string& output) {
  if (output.empty() || output == "-") {
    bwd::write_csv(records, std::cout);
  } else {
    bwd::emit_csv(records, output);
  }
  const auto summary = bwd::summarize(records);
  std::cerr << summary.records << " records, " << summary.hard_failures
            << " hard failures, max report ratio " << fmt(summary.max_report_ratio) << "\n";
  return summary.hard_failures == 0 ? kOk : kAssertionFailure;
}

int cmd_field(const FieldOpts& opts) {
  const auto f = bwd::Field::build(opts.p, opts.n);
  std::cout << f.describe() << "\n";
  return kOk;
}

int cmd_energy(const FieldOpts& opts, const std::string& spec) {
  const auto f = bwd::Field::build(opts.p, opts.n);
  const auto u = bwd::parse_set_spec(f, spec);
  std::cout << "size " << u.size() << "\n";
  std::cout << "sumset " << bwd::sumset(f, u, u).size() << "\n";
  std::cout << "energy " << bwd::energy(f, u) << "\n";
  std::cout << "multiplicative_energy " << bwd::multiplicative_energy(f, u).value << "\n";
  return kOk;
}

int cmd_decompose(const FieldOpts& opts, const std::string& spec, const std::string& fn,
                  double threshold) {
  const auto f = bwd::Field::build(opts.p, opts.n);
  const auto a = bwd::parse_set_spec(f, spec);
  const auto g = bwd::parse_rational(f, fn);
  bwd::PartitionOptions options;
  if (threshold > 0) options.threshold = threshold;
  const auto r = bwd::partition(f, a, g, options);
  std::cout << "A " << a.size() << "\n";
  std::cout << "M(A) " << fmt(r.m_value) << "\n";
  std::cout << "threshold " << fmt(r.threshold) << (r.trivial ? " (trivial)" : "") << "\n";
  std::cout << "iterations " << r.iterations.size() << "\n";
  std::cout << "S " << r.low_energy.size() << " E(S) " << r.low_energy_value << "\n";
  std::cout << "T " << r.structured.size() << " E(f(T)) " << r.image_energy << " bound "
            << fmt(r.aggregate_bound) << "\n";
  std::cout << "c1 " << fmt(r.low_energy_constant(a.size())) << " c2 "
            << fmt(r.image_energy_constant(a.size())) << "\n";
  return kOk;
}

int cmd_charsum(const FieldOpts& opts, const std::string& kind,
                const std::vector<std::string>& specs, std::uint64_t chi_j,
                std::uint32_t psi_a) {
  const auto f = bwd::Field::build(opts.p, opts.n);
  if (specs.size() != 3) throw bwd::ConfigError("--sets needs exactly three set specs");
  const auto a = bwd::parse_set_spec(f, specs[0]);
  const auto b = bwd::parse_set_spec(f, specs[1]);
  const auto c = bwd::parse_set_spec(f, specs[2]);
  const bwd::AdditiveCharacter psi{f.element(psi_a)};
  const bwd::MultiplicativeCharacter chi{chi_j};
  bwd::SumResult r;
  if (kind == "S") {
    r = bwd::sum_S(f, a, b, c, psi);
  } else if (kind == "T") {
    r = bwd::sum_T(f, a, b, c, chi);
  } else if (kind == "mixed") {
    r = bwd::sum_mixed(f, a, b, c, chi, psi);
  } else if (kind == "K") {
    r = bwd::kloosterman_K(f, a, b, c, bwd::WeightVector::constant(a),
                           bwd::WeightVector::constant(b), bwd::WeightVector::constant(c), psi);
  } else {
    throw bwd::ConfigError("--kind must be S, T, mixed or K");
  }
  std::cout << "value " << fmt(r.value.real()) << " " << fmt(r.value.imag()) << "\n";
  std::cout << "magnitude " << fmt(r.magnitude) << "\n";
  std::cout << "terms " << r.terms << "\n";
  for (const auto& bound : r.bounds) {
    std::cout << "bound " << bound.name << " " << fmt(bound.value) << " ratio "
              << fmt(bound.ratio) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-field energy decomposition and character sum toolkit"};
  app.require_subcommand(1);

  FieldOpts field_opts;
  std::string set_spec;
  std::string fn = "1/0,1";
  double threshold = 0;
  std::string kind = "S";
  std::vector<std::string> sets;
  std::uint64_t chi = 1;
  std::uint32_t psi = 1;
  std::string suite;
  std::string output;
  std::string config_path;
  bwd::ExperimentConfig verify_cfg;

  auto* field = app.add_subcommand("field", "Build a field and print its parameters");
  add_field_options(field, field_opts);

  auto* energy = app.add_subcommand("energy", "Energies of a set");
  add_field_options(energy, field_opts);
  energy->add_option("--set", set_spec, "Set spec")->required();

  auto* decompose = app.add_subcommand("decompose", "Partition a set into S and T");
  add_field_options(decompose, field_opts);
  decompose->add_option("--set", set_spec, "Set spec")->required();
  decompose->add_option("--fn", fn, "Rational function num/den")->capture_default_str();
  decompose->add_option("--threshold", threshold, "Override the stopping threshold");

  auto* charsum = app.add_subcommand("charsum", "Evaluate a triple character sum");
  add_field_options(charsum, field_opts);
  charsum->add_option("--kind", kind, "S, T, mixed or K")
      ->check(CLI::IsMember({"S", "T", "mixed", "K"}))
      ->capture_default_str();
  charsum->add_option("--sets", sets, "Three set specs A B C")->required()->expected(3);
  charsum->add_option("--chi", chi, "Multiplicative character exponent")->capture_default_str();
  charsum->add_option("--psi", psi, "Additive character parameter")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run one verification suite");
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--p", verify_cfg.p, "Field characteristic")->capture_default_str();
  verify->add_option("--n", verify_cfg.n, "Extension degree")->capture_default_str();
  verify->add_option("--fn", verify_cfg.function, "Rational function")->capture_default_str();
  verify->add_option("--seed", verify_cfg.seed, "Seed")->capture_default_str();
  verify->add_option("--trials", verify_cfg.trials, "Random instances")->capture_default_str();
  verify->add_option("--output", output, "CSV path (stdout if omitted)");

  auto* experiment = app.add_subcommand("experiment", "Run the suites named in a JSON config");
  experiment->add_option("--config", config_path, "Config path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*field) return cmd_field(field_opts);
    if (*energy) return cmd_energy(field_opts, set_spec);
    if (*decompose) return cmd_decompose(field_opts, set_spec, fn, threshold);
    if (*charsum) return cmd_charsum(field_opts, kind, sets, chi, psi);
    if (*verify) return run_records(bwd::run_suite(suite, verify_cfg), output);
    if (*experiment) {
      const auto cfg = bwd::load_config(config_path);
      std::vector<bwd::VerificationRecord> records;
      for (const auto& name : cfg.suites.empty() ? bwd::suite_names() : cfg.suites) {
        auto part = bwd::run_suite(name, cfg);
        records.insert(records.end(), part.begin(), part.end());
      }
      return run_records(records, cfg.output);
    }
  } catch (const bwd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kOk;
}
