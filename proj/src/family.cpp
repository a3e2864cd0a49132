#include "polyloc/family.hpp"

#include "polyloc/error.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <system_error>

namespace polyloc {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

double parse_double(const std::string& text, const std::string& context) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParameterError("cannot parse number '" + text + "' in " + context);
  }
  return value;
}

} // namespace

Family Family::jacobi(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha < -0.5 || beta < -0.5) {
    throw ParameterError("Jacobi parameters must satisfy alpha, beta >= -1/2 (got alpha=" +
                         format_double(alpha) + ", beta=" + format_double(beta) + ")");
  }
  Family f(JacobiParams{alpha, beta});
  const double s = alpha + beta;
  const double log_mass = (s + 1.0) * std::numbers::ln2 + std::lgamma(alpha + 1.0) +
                          std::lgamma(beta + 1.0) - std::lgamma(s + 2.0);
  f.b0_ = std::exp(0.5 * log_mass);
  return f;
}

Family Family::laguerre(double alpha) {
  if (!std::isfinite(alpha) || alpha <= -1.0) {
    throw ParameterError("Laguerre parameter must satisfy alpha > -1 (got alpha=" +
                         format_double(alpha) + ")");
  }
  Family f(LaguerreParams{alpha});
  f.b0_ = std::exp(0.5 * std::lgamma(alpha + 1.0));
  return f;
}

Family Family::hermite() {
  Family f(HermiteParams{});
  f.b0_ = std::pow(std::numbers::pi, 0.25);
  return f;
}

const JacobiParams& Family::jacobi_params() const {
  if (const auto* p = std::get_if<JacobiParams>(&kind_)) {
    return *p;
  }
  throw ParameterError("operation requires a Jacobi family, got " + name());
}

RecurrenceCoeffs Family::coeffs(std::size_t l) const {
  if (l == 0) {
    // a_0 per family, b_0 from the total mass.
    struct A0 {
      double operator()(const JacobiParams& j) const {
        return (j.beta - j.alpha) / (j.alpha + j.beta + 2.0);
      }
      double operator()(const LaguerreParams& p) const { return p.alpha + 1.0; }
      double operator()(const HermiteParams&) const { return 0.0; }
    };
    return {std::visit(A0{}, kind_), b0_};
  }
  const double k = static_cast<double>(l);
  struct Coeffs {
    double k;
    RecurrenceCoeffs operator()(const JacobiParams& j) const {
      const double al = j.alpha;
      const double be = j.beta;
      const double s = al + be;
      const double t = 2.0 * k + s;
      const double a = (be * be - al * al) / (t * (t + 2.0));
      double b2;
      if (k == 1.0) {
        // (l + alpha + beta) cancels against (2l + alpha + beta - 1) at l = 1
        b2 = 4.0 * (1.0 + al) * (1.0 + be) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
      } else {
        b2 = 4.0 * k * (k + al) * (k + be) * (k + s) / (t * t * (t + 1.0) * (t - 1.0));
      }
      return {a, std::sqrt(b2)};
    }
    RecurrenceCoeffs operator()(const LaguerreParams& p) const {
      return {2.0 * k + p.alpha + 1.0, std::sqrt(k * (k + p.alpha))};
    }
    RecurrenceCoeffs operator()(const HermiteParams&) const { return {0.0, std::sqrt(0.5 * k)}; }
  };
  return std::visit(Coeffs{k}, kind_);
}

double Family::weight(double x) const {
  struct W {
    double x;
    double operator()(const JacobiParams& j) const {
      if (x < -1.0 || x > 1.0) return 0.0;
      return std::pow(1.0 - x, j.alpha) * std::pow(1.0 + x, j.beta);
    }
    double operator()(const LaguerreParams& p) const {
      if (x < 0.0) return 0.0;
      return std::pow(x, p.alpha) * std::exp(-x);
    }
    double operator()(const HermiteParams&) const { return std::exp(-x * x); }
  };
  return std::visit(W{x}, kind_);
}

std::string Family::name() const {
  struct N {
    std::string operator()(const JacobiParams& j) const {
      return "jacobi:" + format_double(j.alpha) + "," + format_double(j.beta);
    }
    std::string operator()(const LaguerreParams& p) const {
      return "laguerre:" + format_double(p.alpha);
    }
    std::string operator()(const HermiteParams&) const { return "hermite"; }
  };
  return std::visit(N{}, kind_);
}

bool operator==(const Family& lhs, const Family& rhs) {
  if (lhs.kind_.index() != rhs.kind_.index()) return false;
  if (const auto* j = std::get_if<JacobiParams>(&lhs.kind_)) {
    const auto& k = std::get<JacobiParams>(rhs.kind_);
    return j->alpha == k.alpha && j->beta == k.beta;
  }
  if (const auto* l = std::get_if<LaguerreParams>(&lhs.kind_)) {
    return l->alpha == std::get<LaguerreParams>(rhs.kind_).alpha;
  }
  return true;
}

Family parse_family(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? std::string() : text.substr(colon + 1);
  if (head == "hermite" && tail.empty()) return Family::hermite();
  if (head == "legendre" && tail.empty()) return Family::legendre();
  if (head == "chebyshev" && tail.empty()) return Family::chebyshev_first();
  if (head == "laguerre" && !tail.empty()) return Family::laguerre(parse_double(tail, text));
  if (head == "jacobi") {
    const auto comma = tail.find(',');
    if (comma != std::string::npos) {
      return Family::jacobi(parse_double(tail.substr(0, comma), text),
                            parse_double(tail.substr(comma + 1), text));
    }
  }
  throw ParameterError("unrecognized family '" + text +
                       "' (expected jacobi:ALPHA,BETA | laguerre:ALPHA | hermite)");
}

RecurrenceCoeffs recurrence_coeffs(const Family& family, std::size_t l) { return family.coeffs(l); }

std::vector<double> eval_orthonormal(const Family& family, std::size_t n, double x) {
  std::vector<double> p(n + 1);
  const RecurrenceCoeffs c0 = family.coeffs(0);
  p[0] = 1.0 / c0.b;
  double prev = 0.0;
  double b_l = c0.b;
  double a_l = c0.a;
  for (std::size_t l = 0; l < n; ++l) {
    const RecurrenceCoeffs next = family.coeffs(l + 1);
    // b_0 p_{-1} vanishes, so the first step does not use b_0
    const double lower = l == 0 ? 0.0 : b_l * prev;
    p[l + 1] = ((x - a_l) * p[l] - lower) / next.b;
    prev = p[l];
    a_l = next.a;
    b_l = next.b;
  }
  return p;
}

std::vector<double> associated_sequence(const Family& family, std::size_t count, std::size_t m,
                                        double x) {
  return corecursive_sequence(family, count, m, 0.0, 1.0, x);
}

double eval_associated(const Family& family, int l, std::size_t m, double x) {
  if (l < 0) return 0.0;
  return associated_sequence(family, static_cast<std::size_t>(l) + 1, m, x).back();
}

std::vector<double> corecursive_sequence(const Family& family, std::size_t count, std::size_t m,
                                         double gamma, double delta, double x) {
  if (delta < 0.0) {
    throw ParameterError("co-recursive scaling delta must be >= 0");
  }
  std::vector<double> p(count);
  if (count == 0) return p;
  p[0] = 1.0;
  if (count == 1) return p;
  const RecurrenceCoeffs cm = family.coeffs(m);
  RecurrenceCoeffs cur = family.coeffs(m + 1);
  p[1] = (delta * x - cm.a - gamma) / cur.b;
  for (std::size_t l = 1; l + 1 < count; ++l) {
    const RecurrenceCoeffs next = family.coeffs(m + l + 1);
    p[l + 1] = ((x - cur.a) * p[l] - cur.b * p[l - 1]) / next.b;
    cur = next;
  }
  return p;
}

double eval_corecursive(const Family& family, int l, std::size_t m, double gamma, double delta,
                        double x) {
  if (l < 0) return 0.0;
  return corecursive_sequence(family, static_cast<std::size_t>(l) + 1, m, gamma, delta, x).back();
}

} // namespace polyloc
