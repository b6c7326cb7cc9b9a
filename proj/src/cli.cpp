#include "funceq/cli.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include "funceq/conjugacy.hpp"
#include "funceq/error.hpp"
#include "funceq/expansion.hpp"
#include "funceq/oracle.hpp"
#include "funceq/problem.hpp"
#include "funceq/spec_file.hpp"
#include "funceq/spectrum.hpp"

namespace funceq {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::DegenerateSpec:
    case ErrorCode::NoFixedPoint:
    case ErrorCode::NotRepelling:
    case ErrorCode::UnsupportedSpec:
    case ErrorCode::WrongSpec:
      return true;
    default:
      return false;
  }
}

FourierSpectrum spectrum_for(const ProblemSpec& spec, const RunConfig& config, std::ostream& log) {
  if (config.y) return compute_spectrum(spec, *config.y, config.grid_N, config.modes_M);
  const auto scan = scan_shift(spec, config.grid_N, config.modes_M);
  for (const auto& t : scan.trials) log << "y = " << fmt(t.y) << (t.accepted ? " accepted\n" : " rejected\n");
  log << "using y = " << fmt(scan.spectrum.y) << "\n";
  return scan.spectrum;
}

CoefficientTable exact_table(const ProblemSpec& spec, std::size_t n_max) {
  auto table = is_two_three_tree(spec.P(), spec.Q()) ? coeffs_by_recurrence_23(n_max)
                                                     : coeffs_by_composition(spec.P(), spec.Q(), n_max);
  normalize(table, spec);
  return table;
}

void write_analyze(const ProblemSpec& spec, std::ostream& out) {
  const auto schroder = make_schroder_data(spec, 3);
  out << "quantity,value\n";
  out << "q," << fmt(spec.q()) << "\n";
  out << "alpha," << fmt(spec.alpha()) << "\n";
  out << "beta," << fmt(spec.beta()) << "\n";
  out << "Q'(q)," << fmt(spec.multiplier()) << "\n";
  out << "Psi''(q)," << fmt(schroder.derivative(2)) << "\n";
}

void write_spectrum(const FourierSpectrum& s, std::ostream& out) {
  out << "m,re_lambda_hat,im_lambda_hat,re_ratio,im_ratio\n";
  for (int m = 1; m <= s.modes(); ++m) {
    const auto lh = s.lambda_hat[m - 1];
    const auto r = s.ratios[m - 1];
    out << m << "," << fmt(lh.real()) << "," << fmt(lh.imag()) << "," << fmt(r.real()) << "," << fmt(r.imag())
        << "\n";
  }
}

void write_kfuncs(const ExpansionTable& table, std::size_t samples, std::ostream& out) {
  out << "x";
  for (int r = 1; r <= table.terms(); ++r) out << ",K" << r;
  out << "\n";
  for (std::size_t j = 0; j < samples; ++j) {
    const double x = static_cast<double>(j) / static_cast<double>(samples);
    out << fmt(x);
    for (int r = 1; r <= table.terms(); ++r) out << "," << fmt(K_eval(r, x, table));
    out << "\n";
  }
}

void write_exact(const CoefficientTable& table, std::ostream& out) {
  out << "n,phi_n,normalized\n";
  for (std::size_t n = 1; n <= table.size(); ++n)
    out << n << "," << table.phi(n).get_str() << "," << fmt(table.normalized[n - 1]) << "\n";
}

void write_compare(const CoefficientTable& exact, const ExpansionTable& table, std::ostream& out) {
  const int R = table.terms();
  out << "n,exact";
  for (int r = 1; r <= R; ++r) out << ",estimate_R" << r;
  for (int r = 1; r <= R; ++r) out << ",scaled_residual_R" << r;
  out << "\n";
  for (std::size_t n = 1; n <= exact.size(); ++n) {
    const auto est = asymptotic_terms(n, R, table);
    const double value = exact.normalized[n - 1];
    std::vector<double> partial;
    double acc = 0.0;
    for (double t : est.terms) partial.push_back(acc += t);
    out << n << "," << fmt(value);
    for (double p : partial) out << "," << fmt(p);
    // n^r (exact - estimate_r) tracks K_{r+1}.
    double scale = static_cast<double>(n);
    for (double p : partial) {
      out << "," << fmt(scale * (value - p));
      scale *= static_cast<double>(n);
    }
    out << "\n";
  }
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& log) {
  if (!is_power_of_two(config.grid_N)) {
    log << "error: --grid-n must be a power of two\n";
    return kValidationFailure;
  }
  if (config.modes_M < 1 || static_cast<std::size_t>(config.modes_M) > config.grid_N / 4) {
    log << "error: --modes must lie in [1, grid-n/4]\n";
    return kValidationFailure;
  }
  if (config.terms_R < 1) {
    log << "error: --terms must be positive\n";
    return kValidationFailure;
  }

  std::string stage = "parse";
  try {
    const auto file = read_spec_file(config.spec_path);
    stage = "validate";
    const auto diagnostics = validate_spec(file.P, file.Q, file.bracket);
    if (!diagnostics.empty()) {
      log << "error: spec fails validation:";
      for (auto d : diagnostics) log << " " << to_string(d);
      log << "\n";
      return kValidationFailure;
    }
    const auto spec = ProblemSpec::build(file.P, file.Q, file.bracket);

    switch (config.command) {
      case Command::Analyze:
        stage = "analyze";
        write_analyze(spec, out);
        break;
      case Command::Spectrum:
        stage = "spectrum";
        write_spectrum(spectrum_for(spec, config, log), out);
        break;
      case Command::KFuncs: {
        stage = "spectrum";
        auto spectrum = spectrum_for(spec, config, log);
        stage = "expansion";
        const ExpansionTable table(spec, std::move(spectrum), config.terms_R);
        write_kfuncs(table, config.samples, out);
        break;
      }
      case Command::Exact:
        stage = "oracle";
        write_exact(exact_table(spec, config.n_max), out);
        break;
      case Command::Compare: {
        stage = "oracle";
        const auto exact = exact_table(spec, config.n_max);
        stage = "spectrum";
        auto spectrum = spectrum_for(spec, config, log);
        stage = "expansion";
        const ExpansionTable table(spec, std::move(spectrum), config.terms_R);
        write_compare(exact, table, out);
        break;
      }
    }
  } catch (const Error& e) {
    log << "error in stage " << stage << ": " << e.what() << "\n";
    return is_validation_error(e.code()) ? kValidationFailure : kNumericalFailure;
  }
  return kSuccess;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "analyze") return Command::Analyze;
  if (name == "spectrum") return Command::Spectrum;
  if (name == "kfuncs") return Command::KFuncs;
  if (name == "exact") return Command::Exact;
  if (name == "compare") return Command::Compare;
  return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& log) {
  if (config.out_path.empty()) return execute(config, out, log);
  std::ofstream file(config.out_path);
  if (!file) {
    log << "error: cannot write " << config.out_path.string() << "\n";
    return kValidationFailure;
  }
  return execute(config, file, log);
}

}  // namespace funceq
