#ifndef POLYLOC_FILTER_HPP
#define POLYLOC_FILTER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyloc {

/// Filter kernels; the short labels h1..h4 and band are used on the wire.
enum class FilterKind {
  Rogosinski,   // h1: optimal_full over Chebyshev first kind
  Cheb3,        // h2: optimal_full over Jacobi(1/2, -1/2)
  JacobiWindow, // h3: optimal_full over Jacobi(-1/2, 3/2) times (1 + cos t)
  Hann,         // h4: Fourier coefficients ~ cos^2(pi j / (2n + 2))
  Band,         // h1nm: optimal_band over Chebyshev first kind
};

std::string filter_label(FilterKind kind);
/// Accepts h1|h2|h3|h4|band; throws ParameterError otherwise.
FilterKind parse_filter_label(const std::string& label);

/**
 * Even trigonometric polynomial h(t) = sum_{k=m}^{n} d_k cos(k t), normalized
 * so that int_{-pi}^{pi} h(t)^2 dt = 1 and h(0) > 0.
 */
struct TrigFilter {
  FilterKind kind = FilterKind::Rogosinski;
  std::size_t degree = 0;     // n
  std::size_t band_start = 0; // m
  std::vector<double> cos_coeffs; // d_m..d_n

  double operator()(double t) const;
  double cos_coeff(std::size_t k) const;
  double l2_norm_squared() const;
};

/// m is only read for FilterKind::Band. Throws ParameterError for n = 0 and
/// BandError for m > n.
TrigFilter make_filter(FilterKind kind, std::size_t n, std::size_t m = 0);

/// (1 + cos t) P(cos t) with P = optimal_full(Jacobi(-1/2, 3/2), inner_degree);
/// make_filter(JacobiWindow, n) uses inner_degree = n - 1.
TrigFilter make_jacobi_window(std::size_t inner_degree);

/// Exact Fourier coefficients h^(k) = (1/2pi) int h(t) e^{-ikt} dt, k = 0..n.
std::vector<double> filter_fourier_coeffs(const TrigFilter& h);

/// N samples f(t_j), t_j = -pi + 2 pi j / N.
struct Signal {
  std::vector<double> samples;

  std::size_t size() const noexcept { return samples.size(); }
  double t(std::size_t j) const;
  static double grid_point(std::size_t j, std::size_t n);
};

/// Circular convolution (1/2pi) int f(s) h(t - s) ds evaluated in the frequency
/// domain. Throws SamplingError unless N > 2 deg(h).
Signal apply_filter(const Signal& f, const TrigFilter& h);

struct PeakSpec {
  double position;  // in [-pi, pi)
  double width;     // Gaussian standard deviation
  double amplitude;
};

struct CarrierTerm {
  std::size_t frequency;
  double amplitude;
  double phase;
};

struct SynthOptions {
  std::vector<PeakSpec> peaks;
  std::vector<CarrierTerm> carrier;
  double noise_stddev = 0.0;
  std::uint64_t seed = 0;
  std::size_t samples = 512;
};

/**
 * Periodized Gaussian bumps plus cosine carrier plus white Gaussian noise.
 * Noise: std::mt19937_64(seed); each 64-bit draw x maps to the open-interval
 * uniform ((x >> 11) + 0.5) / 2^53; consecutive uniforms (u1, u2) give the
 * Box-Muller pair sqrt(-2 ln u1) (cos 2 pi u2, sin 2 pi u2), consumed in order.
 */
Signal synth_signal(const SynthOptions& options);

/// Strict circular local maxima >= threshold, thinned greedily (largest
/// first, ties to the lower index) to a circular spacing of at least
/// min_separation, returned in ascending order.
std::vector<std::size_t> detect_peaks(const Signal& f, double threshold,
                                      std::size_t min_separation);

} // namespace polyloc

#endif // POLYLOC_FILTER_HPP
