#include "polyloc/io.hpp"

#include "polyloc/error.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace polyloc {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_number(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace

Signal read_signal_csv(std::istream& in, const std::string& source) {
  Signal s;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto comma = body.find(',');
    const std::string field = comma == std::string::npos ? body : body.substr(comma + 1);
    if (comma != std::string::npos && field.find(',') != std::string::npos) {
      throw IoError(source + ":" + std::to_string(line_no) + ": expected at most two columns");
    }
    double value = 0.0;
    if (!parse_number(field, value)) {
      if (s.samples.empty() && line_no == 1) continue; // header
      throw IoError(source + ":" + std::to_string(line_no) + ": cannot parse sample '" +
                    trim(field) + "'");
    }
    s.samples.push_back(value);
  }
  if (in.bad()) {
    throw IoError(source + ": read failure");
  }
  if (s.samples.size() < 2) {
    throw IoError(source + ": a signal needs at least 2 samples");
  }
  return s;
}

Signal read_signal_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open signal file '" + path + "'");
  }
  return read_signal_csv(in, path);
}

void write_signal_csv(std::ostream& out, const Signal& s) {
  out << "t,value\n";
  for (std::size_t j = 0; j < s.size(); ++j) {
    out << format17(s.t(j)) << ',' << format17(s.samples[j]) << '\n';
  }
  if (!out) {
    throw IoError("failed writing signal CSV");
  }
}

nlohmann::json filter_to_json(const TrigFilter& h) {
  return nlohmann::json{{"label", filter_label(h.kind)},
                        {"n", h.degree},
                        {"m", h.band_start},
                        {"cos_coeffs", h.cos_coeffs}};
}

TrigFilter filter_from_json(const nlohmann::json& j) {
  try {
    TrigFilter h;
    h.kind = parse_filter_label(j.at("label").get<std::string>());
    h.degree = j.at("n").get<std::size_t>();
    h.band_start = j.at("m").get<std::size_t>();
    h.cos_coeffs = j.at("cos_coeffs").get<std::vector<double>>();
    if (h.band_start > h.degree || h.cos_coeffs.size() != h.degree - h.band_start + 1) {
      throw IoError("filter JSON: cos_coeffs must hold n - m + 1 entries");
    }
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("filter JSON: ") + e.what());
  } catch (const ParameterError& e) {
    throw IoError(std::string("filter JSON: ") + e.what());
  }
}

TrigFilter read_filter_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open filter file '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
  return filter_from_json(j);
}

nlohmann::json polynomial_to_json(const LocalizedPolynomial& p) {
  nlohmann::json j{{"family", p.family.name()},
                   {"kind", to_string(p.kind)},
                   {"band", {{"m", p.band.m}, {"n", p.band.n}}},
                   {"coeffs", p.coeffs},
                   {"lambda", p.lambda}};
  if (p.kind == ProblemKind::Reproducing) j["repro"] = p.repro;
  return j;
}

nlohmann::json hermite_to_json(const HermiteOptimal& h) {
  return nlohmann::json{{"family", "hermite"},
                        {"kind", h.band.m == 0 ? "full" : "band"},
                        {"band", {{"m", h.band.m}, {"n", h.band.n}}},
                        {"coeffs", h.coeffs},
                        {"lambda", h.lambda}};
}

} // namespace polyloc
