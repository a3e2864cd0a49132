#include "polyloc/cli.hpp"

#include "polyloc/error.hpp"
#include "polyloc/filter.hpp"
#include "polyloc/hermite.hpp"
#include "polyloc/io.hpp"
#include "polyloc/localize.hpp"
#include "polyloc/verify.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

namespace polyloc {

namespace {

struct PolyArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> m;
  std::vector<double> repro;
  bool has_repro = false;
};

struct FilterArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string out;
};

struct ApplyArgs {
  std::string filter;
  std::string signal;
  std::string out;
};

struct SynthArgs {
  std::vector<std::string> peaks;
  std::vector<std::string> carrier;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::size_t samples = 512;
  std::string out;
};

struct PeaksArgs {
  std::string signal;
  double threshold = 0.0;
  std::size_t min_sep = 1;
};

struct VerifyArgs {
  std::string suite = "quick";
};

std::vector<double> split_numbers(const std::string& text, char sep, const std::string& what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(sep, start);
    const std::string item = text.substr(start, end == std::string::npos ? end : end - start);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParameterError("cannot parse " + what + " '" + text + "'");
    }
    out.push_back(v);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

// Resolves the band/space flags into one of the three problems.
LocalizedPolynomial build_polynomial(const Family& family, const PolyArgs& args) {
  const std::size_t m = args.m.value_or(0);
  validate_band(Band{m, args.n});
  if (args.has_repro) {
    return optimal_reproducing(family, m, args.n, args.repro);
  }
  if (m == 0) return optimal_full(family, args.n);
  return optimal_band(family, m, args.n);
}

void validate_poly_args(const Family& family, const PolyArgs& args) {
  const std::size_t m = args.m.value_or(0);
  validate_band(Band{m, args.n});
  if (family.is_hermite()) {
    validate_hermite_band(Band{m, args.n});
    if (args.has_repro) {
      throw ParameterError("the reproducing space is not available for the Hermite family");
    }
  }
  if (args.has_repro && args.repro.size() != m) {
    throw ParameterError("--repro needs exactly m values e_0..e_{m-1}");
  }
}

class OutputTarget {
public:
  OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }

private:
  std::ofstream file_;
  std::ostream& fallback_;
};

int gen_poly(const PolyArgs& args, std::ostream& out) {
  const Family family = parse_family(args.family);
  validate_poly_args(family, args);
  if (family.is_hermite()) {
    const HermiteOptimal h = optimal_hermite_band(args.m.value_or(0), args.n);
    out << hermite_to_json(h).dump(2) << '\n';
    return kExitOk;
  }
  out << polynomial_to_json(build_polynomial(family, args)).dump(2) << '\n';
  return kExitOk;
}

int gen_filter(const FilterArgs& args, std::ostream& out) {
  const FilterKind kind = parse_filter_label(args.kind);
  if (args.n == 0) throw ParameterError("--n must be >= 1");
  if (kind == FilterKind::Band) validate_band(Band{args.m, args.n});
  const TrigFilter h = make_filter(kind, args.n, args.m);
  OutputTarget target(args.out, out);
  target.stream() << filter_to_json(h).dump(2) << '\n';
  return kExitOk;
}

Signal load_signal(const std::string& path, std::istream& in) {
  return path.empty() ? read_signal_csv(in) : read_signal_csv_file(path);
}

int apply(const ApplyArgs& args, std::istream& in, std::ostream& out) {
  const TrigFilter h = read_filter_file(args.filter);
  const Signal s = load_signal(args.signal, in);
  const Signal filtered = apply_filter(s, h);
  OutputTarget target(args.out, out);
  write_signal_csv(target.stream(), filtered);
  return kExitOk;
}

int synth(const SynthArgs& args, std::ostream& out) {
  SynthOptions opt;
  for (const std::string& p : args.peaks) {
    const std::vector<double> v = split_numbers(p, ':', "peak POSITION:WIDTH:AMPLITUDE");
    if (v.size() != 3) throw ParameterError("peak '" + p + "' must be POSITION:WIDTH:AMPLITUDE");
    opt.peaks.push_back({v[0], v[1], v[2]});
  }
  for (const std::string& c : args.carrier) {
    const std::vector<double> v = split_numbers(c, ':', "carrier FREQ:AMPLITUDE:PHASE");
    if (v.size() != 3 || v[0] < 0 || v[0] != std::floor(v[0])) {
      throw ParameterError("carrier '" + c + "' must be FREQ:AMPLITUDE:PHASE with integer FREQ");
    }
    opt.carrier.push_back({static_cast<std::size_t>(v[0]), v[1], v[2]});
  }
  opt.noise_stddev = args.noise;
  opt.seed = args.seed;
  opt.samples = args.samples;
  const Signal s = synth_signal(opt);
  OutputTarget target(args.out, out);
  write_signal_csv(target.stream(), s);
  return kExitOk;
}

int peaks(const PeaksArgs& args, std::istream& in, std::ostream& out) {
  if (args.min_sep < 1) throw ParameterError("--min-sep must be >= 1");
  const Signal s = load_signal(args.signal, in);
  const std::vector<std::size_t> idx = detect_peaks(s, args.threshold, args.min_sep);
  out << "index,t,value\n";
  char buf[96];
  for (std::size_t j : idx) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", j, s.t(j), s.samples[j]);
    out << buf;
  }
  return kExitOk;
}

int uncertainty(const PolyArgs& args, std::ostream& out) {
  const Family family = parse_family(args.family);
  if (!family.is_jacobi()) throw ParameterError("uncertainty requires a Jacobi family");
  validate_poly_args(family, args);
  const LocalizedPolynomial p = build_polynomial(family, args);
  const UncertaintyReport r = uncertainty_check(p);
  nlohmann::json j{{"family", family.name()},
                   {"kind", to_string(p.kind)},
                   {"band", {{"m", p.band.m}, {"n", p.band.n}}},
                   {"epsilon", r.epsilon},
                   {"var_s", r.var_s},
                   {"var_f", r.var_f},
                   {"product", r.product},
                   {"bound", r.bound},
                   {"holds", r.holds},
                   {"admissible", admissible_check(p)}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

int verify(const VerifyArgs& args, std::ostream& out) {
  const VerifySuite suite = args.suite == "full" ? VerifySuite::Full : VerifySuite::Quick;
  bool all = true;
  for (const CheckResult& r : run_verification(suite)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    all = all && r.passed;
  }
  out << (all ? "all checks passed\n" : "some checks FAILED\n");
  return all ? kExitOk : kExitNumeric;
}

CLI::Option* add_poly_options(CLI::App* cmd, PolyArgs& args) {
  cmd->add_option("--family", args.family, "jacobi:ALPHA,BETA | laguerre:ALPHA | hermite")
      ->required();
  cmd->add_option("--n", args.n, "highest degree n")->required();
  cmd->add_option("--m", args.m, "lowest degree m of the band");
  return cmd->add_option("--repro", args.repro, "e_0,...,e_{m-1} of R = p_m + sum e_l p_l")
      ->delimiter(',')
      ->expected(0, -1);
}

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Optimally space localized polynomials and peak filters"};
  app.name("polyloc");
  app.require_subcommand(1, 1);

  PolyArgs poly;
  auto* gen_poly_cmd = app.add_subcommand("gen-poly", "optimal polynomial as JSON");
  CLI::Option* poly_repro = add_poly_options(gen_poly_cmd, poly);

  FilterArgs filter;
  auto* gen_filter_cmd = app.add_subcommand("gen-filter", "trigonometric filter as JSON");
  gen_filter_cmd->add_option("--kind", filter.kind, "h1|h2|h3|h4|band")
      ->required()
      ->check(CLI::IsMember({"h1", "h2", "h3", "h4", "band"}));
  gen_filter_cmd->add_option("--n", filter.n, "filter degree")->required();
  gen_filter_cmd->add_option("--m", filter.m, "band start (band filters)");
  gen_filter_cmd->add_option("--out", filter.out, "output file (default stdout)");

  ApplyArgs apply_args;
  auto* apply_cmd = app.add_subcommand("apply", "filter a signal CSV");
  apply_cmd->add_option("--filter", apply_args.filter, "filter JSON file")->required();
  apply_cmd->add_option("--signal", apply_args.signal, "signal CSV (default stdin)");
  apply_cmd->add_option("--out", apply_args.out, "output CSV (default stdout)");

  SynthArgs synth_args;
  auto* synth_cmd = app.add_subcommand("synth", "synthesize a noisy multi-peak signal");
  synth_cmd->add_option("--peaks", synth_args.peaks, "POSITION:WIDTH:AMPLITUDE,...")
      ->delimiter(',');
  synth_cmd->add_option("--carrier", synth_args.carrier, "FREQ:AMPLITUDE:PHASE,...")
      ->delimiter(',');
  synth_cmd->add_option("--noise", synth_args.noise, "noise standard deviation")
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--seed", synth_args.seed, "noise seed");
  synth_cmd->add_option("--N", synth_args.samples, "number of samples")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  synth_cmd->add_option("--out", synth_args.out, "output CSV (default stdout)");

  PeaksArgs peaks_args;
  auto* peaks_cmd = app.add_subcommand("peaks", "detect peaks in a signal CSV");
  peaks_cmd->add_option("--signal", peaks_args.signal, "signal CSV (default stdin)");
  peaks_cmd->add_option("--threshold", peaks_args.threshold, "minimum peak value");
  peaks_cmd->add_option("--min-sep", peaks_args.min_sep, "minimum separation in samples")
      ->check(CLI::PositiveNumber);

  PolyArgs unc;
  auto* unc_cmd = app.add_subcommand("uncertainty", "Jacobi uncertainty product of an optimum");
  CLI::Option* unc_repro = add_poly_options(unc_cmd, unc);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run built-in invariant checks");
  verify_cmd->add_option("--suite", verify_args.suite, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  poly.has_repro = poly_repro->count() > 0;
  unc.has_repro = unc_repro->count() > 0;

  try {
    if (*gen_poly_cmd) return gen_poly(poly, out);
    if (*gen_filter_cmd) return gen_filter(filter, out);
    if (*apply_cmd) return apply(apply_args, in, out);
    if (*synth_cmd) return synth(synth_args, out);
    if (*peaks_cmd) return peaks(peaks_args, in, out);
    if (*unc_cmd) return uncertainty(unc, out);
    if (*verify_cmd) return verify(verify_args, out);
  } catch (const ParityError& e) {
    err << "parity error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BandError& e) {
    err << "band error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const SamplingError& e) {
    err << "sampling error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const Error& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}

} // namespace polyloc
