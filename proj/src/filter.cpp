#include "polyloc/filter.hpp"

#include "polyloc/error.hpp"
#include "polyloc/localize.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace polyloc {

namespace {

constexpr double kPi = std::numbers::pi;

// Cosine coefficients d_0..d_degree of an even trigonometric polynomial from
// M = 8 (degree + 2) uniform samples; exact for degree < M / 2.
std::vector<double> cosine_coeffs_from_samples(const std::function<double(double)>& g,
                                               std::size_t degree) {
  const std::size_t count = 8 * (degree + 2);
  std::vector<double> values(count);
  for (std::size_t j = 0; j < count; ++j) {
    values[j] = g(2.0 * kPi * static_cast<double>(j) / static_cast<double>(count));
  }
  std::vector<double> d(degree + 1);
  for (std::size_t k = 0; k <= degree; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      // index reduction keeps the angle argument exact
      const std::size_t r = (k * j) % count;
      s += values[j] * std::cos(2.0 * kPi * static_cast<double>(r) / static_cast<double>(count));
    }
    d[k] = (k == 0 ? 1.0 : 2.0) * s / static_cast<double>(count);
  }
  return d;
}

TrigFilter normalized(FilterKind kind, std::size_t m, std::vector<double> d) {
  TrigFilter h;
  h.kind = kind;
  h.band_start = m;
  h.degree = m + d.size() - 1;
  h.cos_coeffs = std::move(d);
  const double scale = 1.0 / std::sqrt(h.l2_norm_squared());
  const double sign = h(0.0) < 0.0 ? -1.0 : 1.0;
  for (double& c : h.cos_coeffs) c *= sign * scale;
  return h;
}

// Chebyshev first kind: t_0 = 1/sqrt(pi), t_k = sqrt(2/pi) cos(k t).
TrigFilter from_chebyshev(FilterKind kind, const LocalizedPolynomial& p) {
  std::vector<double> d(p.coeffs.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::size_t k = p.band.m + i;
    d[i] = p.coeffs[i] * (k == 0 ? 1.0 / std::sqrt(kPi) : std::sqrt(2.0 / kPi));
  }
  return normalized(kind, p.band.m, std::move(d));
}

} // namespace

std::string filter_label(FilterKind kind) {
  switch (kind) {
  case FilterKind::Rogosinski:
    return "h1";
  case FilterKind::Cheb3:
    return "h2";
  case FilterKind::JacobiWindow:
    return "h3";
  case FilterKind::Hann:
    return "h4";
  case FilterKind::Band:
    return "band";
  }
  return "unknown";
}

FilterKind parse_filter_label(const std::string& label) {
  if (label == "h1") return FilterKind::Rogosinski;
  if (label == "h2") return FilterKind::Cheb3;
  if (label == "h3") return FilterKind::JacobiWindow;
  if (label == "h4") return FilterKind::Hann;
  if (label == "band") return FilterKind::Band;
  throw ParameterError("unknown filter label '" + label + "' (expected h1|h2|h3|h4|band)");
}

double TrigFilter::operator()(double t) const {
  double s = 0.0;
  for (std::size_t i = 0; i < cos_coeffs.size(); ++i) {
    s += cos_coeffs[i] * std::cos(static_cast<double>(band_start + i) * t);
  }
  return s;
}

double TrigFilter::cos_coeff(std::size_t k) const {
  if (k < band_start || k > degree) return 0.0;
  return cos_coeffs[k - band_start];
}

double TrigFilter::l2_norm_squared() const {
  double s = 0.0;
  for (std::size_t i = 0; i < cos_coeffs.size(); ++i) {
    const double w = band_start + i == 0 ? 2.0 * kPi : kPi;
    s += w * cos_coeffs[i] * cos_coeffs[i];
  }
  return s;
}

TrigFilter make_jacobi_window(std::size_t inner_degree) {
  const LocalizedPolynomial p = optimal_full(Family::jacobi(-0.5, 1.5), inner_degree);
  auto g = [&p](double t) { return eval_sum(p, std::cos(t)) * (1.0 + std::cos(t)); };
  return normalized(FilterKind::JacobiWindow, 0, cosine_coeffs_from_samples(g, inner_degree + 1));
}

TrigFilter make_filter(FilterKind kind, std::size_t n, std::size_t m) {
  if (n == 0) {
    throw ParameterError("filter degree must be >= 1");
  }
  switch (kind) {
  case FilterKind::Rogosinski:
    return from_chebyshev(kind, optimal_full(Family::chebyshev_first(), n));
  case FilterKind::Band:
    validate_band(Band{m, n});
    return from_chebyshev(kind, optimal_band(Family::chebyshev_first(), m, n));
  case FilterKind::Cheb3: {
    const LocalizedPolynomial p = optimal_full(Family::jacobi(0.5, -0.5), n);
    auto g = [&p](double t) { return eval_sum(p, std::cos(t)); };
    return normalized(kind, 0, cosine_coeffs_from_samples(g, n));
  }
  case FilterKind::JacobiWindow:
    return make_jacobi_window(n - 1);
  case FilterKind::Hann: {
    std::vector<double> d(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      const double c = std::cos(kPi * static_cast<double>(k) / (2.0 * static_cast<double>(n) + 2.0));
      d[k] = (k == 0 ? 1.0 : 2.0) * c * c;
    }
    return normalized(kind, 0, std::move(d));
  }
  }
  throw ParameterError("unknown filter kind");
}

std::vector<double> filter_fourier_coeffs(const TrigFilter& h) {
  std::vector<double> out(h.degree + 1, 0.0);
  for (std::size_t k = h.band_start; k <= h.degree; ++k) {
    const double d = h.cos_coeff(k);
    out[k] = k == 0 ? d : 0.5 * d;
  }
  return out;
}

} // namespace polyloc
