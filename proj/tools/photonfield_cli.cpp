// Command-line driver: verification reports, expectation grids, vacuum scans and
// operator exports from a JSON scenario.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "photonfield/ensembles.hpp"
#include "photonfield/field_operators.hpp"
#include "photonfield/scenario.hpp"
#include "photonfield/verification.hpp"

namespace pf = photonfield;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::string config;
  std::string out;
  double tolerance_scale = 1.0;
  std::optional<std::uint64_t> seed;
  std::string operator_name;
};

/// Writes to <out>/<file> when --out is set, otherwise to stdout.
void emit(const Options& opt, const std::string& file, const std::string& content) {
  if (opt.out.empty()) {
    std::cout << content;
    return;
  }
  std::filesystem::create_directories(opt.out);
  const auto path = std::filesystem::path(opt.out) / file;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
}

int run_verify(const Options& opt) {
  const pf::Scenario scenario = pf::load_scenario(opt.config);
  pf::VerifyOptions vo;
  vo.tolerance_scale = opt.tolerance_scale;
  vo.seed = opt.seed;
  const pf::Report report = pf::run_checks(scenario, vo);

  for (const auto& c : report.checks) {
    std::cerr << (c.pass ? "PASS " : "FAIL ") << c.check << " residual=" << pf::format_double(c.residual)
              << " tolerance=" << pf::format_double(c.tolerance) << '\n';
  }
  if (!opt.out.empty()) {
    emit(opt, "report.json", report.to_json().dump(2) + "\n");
  } else {
    std::cout << report.to_json().dump(2) << '\n';
  }
  return report.passed() ? kExitPass : kExitCheckFailure;
}

int run_expect(const Options& opt) {
  const pf::Scenario scenario = pf::load_scenario(opt.config);
  if (!scenario.grid) throw pf::ConfigError("grid: missing; `expect` needs a grid specification");
  const pf::FockBasis basis = pf::build_basis(scenario.lattice);
  const pf::FockState state = pf::build_state(basis, scenario.state);
  const auto& g = *scenario.grid;
  const auto points = pf::time_points(g.r, g.t_begin, g.t_end, g.count);
  const auto rows = pf::expectation_grid(basis, state, g.field, points);
  std::ostringstream csv;
  pf::write_grid_csv(csv, rows);
  emit(opt, "grid.csv", csv.str());
  return kExitPass;
}

int run_vacuum_scan(const Options& opt) {
  const pf::Scenario scenario = pf::load_scenario(opt.config);
  if (!scenario.vacuum_scan) throw pf::ConfigError("vacuum_scan: missing; `vacuum-scan` needs a cutoff list");
  const auto& spec = *scenario.vacuum_scan;
  const auto rows = pf::vacuum_scan(scenario.lattice.box_length, scenario.lattice.units, spec.field, spec.cutoffs,
                                    scenario.lattice.gauge);
  std::ostringstream csv;
  pf::write_vacuum_scan_csv(csv, rows);
  emit(opt, "vacuum_scan.csv", csv.str());

  int status = kExitPass;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double rel = std::abs(rows[i].mode_sum - rows[i].lattice_sum) / rows[i].lattice_sum;
    if (rel > 1e-12 * opt.tolerance_scale) {
      std::cerr << "FAIL cutoff " << rows[i].cutoff << ": mode sum deviates from the lattice sum by "
                << pf::format_double(rel) << '\n';
      status = kExitCheckFailure;
    }
    if (i > 0 && !(rows[i].mode_sum > rows[i - 1].mode_sum)) {
      std::cerr << "FAIL cutoff " << rows[i].cutoff << ": mean square did not increase\n";
      status = kExitCheckFailure;
    }
  }
  return status;
}

pf::SparseOperator named_operator(const pf::FockBasis& basis, const std::string& name, const pf::SpacetimePoint& x) {
  auto axis = [&](char c) -> int {
    if (c < 'x' || c > 'z') throw pf::InvalidInput("unknown operator '" + name + "'");
    return c - 'x';
  };
  if (name == "H") return pf::observable_H(basis);
  if (name == "N") return pf::total_number(basis);
  if (name.size() == 3 && name[1] == '_' && std::string_view("EBAPS").find(name[0]) != std::string_view::npos) {
    const int i = axis(name[2]);
    switch (name[0]) {
      case 'E': return pf::field(basis, pf::FieldKind::E, x)[i];
      case 'B': return pf::field(basis, pf::FieldKind::B, x)[i];
      case 'A': return pf::field(basis, pf::FieldKind::A, x)[i];
      case 'P': return pf::observable_P(basis)[i];
      case 'S': return pf::observable_S(basis)[i];
      default: break;
    }
  }
  for (const std::string prefix : {"a_", "adag_"}) {
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size()) {
      const std::string digits = name.substr(prefix.size());
      if (digits.find_first_not_of("0123456789") != std::string::npos) break;
      const std::size_t m = std::stoul(digits);
      return prefix == "a_" ? pf::annihilation(basis, m) : pf::creation(basis, m);
    }
  }
  throw pf::InvalidInput("unknown operator '" + name +
                         "' (expected E_x..A_z, P_x..S_z, H, N, a_<mode> or adag_<mode>)");
}

int run_dump(const Options& opt) {
  const pf::Scenario scenario = pf::load_scenario(opt.config);
  const pf::FockBasis basis = pf::build_basis(scenario.lattice);
  const pf::SparseOperator op = named_operator(basis, opt.operator_name, scenario.sampling.probe);
  std::ostringstream out;
  pf::write_coordinate_list(out, op, basis.num_modes(), basis.n_max());
  emit(opt, opt.operator_name + ".coo", out.str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantized photon field on a periodic lattice: verification and data export"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "Scenario JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out, "Output directory (stdout when omitted)");
    sub->add_option("--tolerance-scale", opt.tolerance_scale, "Multiplier applied to every tolerance")
        ->check(CLI::NonNegativeNumber);
  };
  CLI::App* verify = app.add_subcommand("verify", "Run the verification checks and write a JSON report");
  common(verify);
  verify->add_option("--seed", opt.seed, "Seed for sampled checks (overrides the scenario)");
  CLI::App* expect = app.add_subcommand("expect", "Closed-form field expectation grid as CSV");
  common(expect);
  CLI::App* scan = app.add_subcommand("vacuum-scan", "Vacuum mean-square field versus momentum cutoff as CSV");
  common(scan);
  CLI::App* dump = app.add_subcommand("dump-operator", "Export an operator in coordinate-list form");
  common(dump);
  dump->add_option("name", opt.operator_name, "Operator name, e.g. E_x, H, N, a_0")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (*verify) return run_verify(opt);
    if (*expect) return run_expect(opt);
    if (*scan) return run_vacuum_scan(opt);
    if (*dump) return run_dump(opt);
  } catch (const pf::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const pf::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
