#include "doctest.h"

#include "polyloc/error.hpp"
#include "polyloc/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace polyloc;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("polyloc_io_" + name)).string();
}

} // namespace

TEST_CASE("signal CSV round trip is lossless") {
  Signal s;
  for (int j = 0; j < 37; ++j) s.samples.push_back(std::sin(0.3 * j) / 3.0 + 1e-17 * j);
  std::ostringstream out;
  write_signal_csv(out, s);
  const std::string text = out.str();
  CHECK(text.rfind("t,value\n", 0) == 0);
  std::istringstream in(text);
  const Signal back = read_signal_csv(in, "mem");
  CHECK(back.samples == s.samples);
}

TEST_CASE("signal CSV formats") {
  std::istringstream one("1.5\n-2\n3e-1\n");
  CHECK(read_signal_csv(one).samples == std::vector<double>{1.5, -2.0, 0.3});
  std::istringstream two("t,value\n0,1\n1,2\n");
  CHECK(read_signal_csv(two).samples == std::vector<double>{1.0, 2.0});
  std::istringstream crlf("value\r\n4\r\n5\r\n\r\n");
  CHECK(read_signal_csv(crlf).samples == std::vector<double>{4.0, 5.0});
}

TEST_CASE("signal CSV errors name the source line") {
  std::istringstream bad("t,value\n0,1\n1,abc\n");
  try {
    read_signal_csv(bad, "sig.csv");
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("sig.csv:3") != std::string::npos);
  }
  std::istringstream cols("1,2,3\n4,5,6\n");
  CHECK_THROWS_AS(read_signal_csv(cols), IoError);
  std::istringstream tiny("1\n");
  CHECK_THROWS_AS(read_signal_csv(tiny), IoError);
  CHECK_THROWS_AS(read_signal_csv_file("/nonexistent/polyloc.csv"), IoError);
}

TEST_CASE("filter JSON round trip") {
  for (FilterKind k : {FilterKind::Rogosinski, FilterKind::Cheb3, FilterKind::JacobiWindow, FilterKind::Hann,
                       FilterKind::Band}) {
    const TrigFilter h = make_filter(k, 9, k == FilterKind::Band ? 3 : 0);
    const nlohmann::json j = filter_to_json(h);
    CHECK(j.at("label") == filter_label(k));
    CHECK(j.at("n") == 9);
    const std::string path = temp_path(filter_label(k) + ".json");
    {
      std::ofstream f(path);
      f << j.dump(2);
    }
    const TrigFilter back = read_filter_file(path);
    std::remove(path.c_str());
    CHECK(back.kind == h.kind);
    CHECK(back.degree == h.degree);
    CHECK(back.band_start == h.band_start);
    CHECK(back.cos_coeffs == h.cos_coeffs);
  }
}

TEST_CASE("filter JSON validation") {
  nlohmann::json j = filter_to_json(make_filter(FilterKind::Hann, 4));
  nlohmann::json wrong = j;
  wrong["cos_coeffs"].push_back(0.1);
  CHECK_THROWS_AS(filter_from_json(wrong), IoError);
  nlohmann::json missing = j;
  missing.erase("label");
  CHECK_THROWS_AS(filter_from_json(missing), IoError);
  nlohmann::json badlabel = j;
  badlabel["label"] = "h7";
  CHECK_THROWS_AS(filter_from_json(badlabel), IoError);
  nlohmann::json mgtn = j;
  mgtn["m"] = 5;
  CHECK_THROWS_AS(filter_from_json(mgtn), IoError);
  CHECK_THROWS_AS(read_filter_file("/nonexistent/f.json"), IoError);
  const std::string path = temp_path("garbage.json");
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  CHECK_THROWS_AS(read_filter_file(path), IoError);
  std::remove(path.c_str());
}

TEST_CASE("polynomial JSON") {
  const std::vector<double> e{0.25};
  const LocalizedPolynomial p = optimal_reproducing(Family::legendre(), 1, 4, e);
  const nlohmann::json j = polynomial_to_json(p);
  CHECK(j.at("family") == "jacobi:0,0");
  CHECK(j.at("kind") == "reproducing");
  CHECK(j.at("band").at("m") == 1);
  CHECK(j.at("band").at("n") == 4);
  CHECK(j.at("lambda").get<double>() == p.lambda);
  CHECK(j.at("coeffs").get<std::vector<double>>() == p.coeffs);
  CHECK(j.at("repro").get<std::vector<double>>() == e);
  // serialized text parses back to the same doubles
  const nlohmann::json again = nlohmann::json::parse(j.dump());
  CHECK(again.at("coeffs").get<std::vector<double>>() == p.coeffs);

  const HermiteOptimal h = optimal_hermite_band(2, 6);
  const nlohmann::json hj = hermite_to_json(h);
  CHECK(hj.at("family") == "hermite");
  CHECK(hj.at("coeffs").size() == 5);
  CHECK(hj.at("lambda").get<double>() == h.lambda);
}
