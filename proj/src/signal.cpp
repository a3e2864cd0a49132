#include "polyloc/error.hpp"
#include "polyloc/filter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace polyloc {

namespace {

constexpr double kPi = std::numbers::pi;

class NormalStream {
public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (cached_) {
      cached_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    cached_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

private:
  double uniform() {
    const std::uint64_t x = engine_();
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool cached_ = false;
};

std::size_t circular_distance(std::size_t i, std::size_t j, std::size_t n) {
  const std::size_t d = i > j ? i - j : j - i;
  return std::min(d, n - d);
}

} // namespace

double Signal::grid_point(std::size_t j, std::size_t n) {
  return -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
}

double Signal::t(std::size_t j) const { return grid_point(j, samples.size()); }

Signal apply_filter(const Signal& f, const TrigFilter& h) {
  const std::size_t count = f.size();
  if (count <= 2 * h.degree) {
    throw SamplingError("Nyquist violation: signal with N=" + std::to_string(count) +
                        " samples cannot carry a degree-" + std::to_string(h.degree) +
                        " filter (need N > " + std::to_string(2 * h.degree) + ")");
  }
  const std::vector<double> gain = filter_fourier_coeffs(h);
  const double inv = 1.0 / static_cast<double>(count);

  // cos/sin tables of 2 pi r / N; t_j = -pi + 2 pi j / N gives k t_j = 2 pi (k j) / N - k pi.
  std::vector<double> ctab(count), stab(count);
  for (std::size_t r = 0; r < count; ++r) {
    const double ang = 2.0 * kPi * static_cast<double>(r) * inv;
    ctab[r] = std::cos(ang);
    stab[r] = std::sin(ang);
  }
  std::vector<double> acos(h.degree + 1, 0.0), asin(h.degree + 1, 0.0);
  for (std::size_t k = h.band_start; k <= h.degree; ++k) {
    if (gain[k] == 0.0) continue;
    double sc = 0.0;
    double ss = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      const std::size_t r = (k * j) % count;
      sc += f.samples[j] * ctab[r];
      ss += f.samples[j] * stab[r];
    }
    // the (-1)^k phase of the shifted grid cancels between analysis and synthesis
    const double weight = (k == 0 ? 1.0 : 2.0) * gain[k] * inv;
    acos[k] = weight * sc;
    asin[k] = weight * ss;
  }
  Signal out;
  out.samples.assign(count, 0.0);
  for (std::size_t j = 0; j < count; ++j) {
    double s = 0.0;
    for (std::size_t k = h.band_start; k <= h.degree; ++k) {
      const std::size_t r = (k * j) % count;
      s += acos[k] * ctab[r] + asin[k] * stab[r];
    }
    out.samples[j] = s;
  }
  return out;
}

Signal synth_signal(const SynthOptions& options) {
  if (options.samples < 2) {
    throw ParameterError("signal needs at least 2 samples");
  }
  if (options.noise_stddev < 0.0) {
    throw ParameterError("noise standard deviation must be >= 0");
  }
  Signal s;
  s.samples.assign(options.samples, 0.0);
  for (const PeakSpec& p : options.peaks) {
    if (!(p.width > 0.0)) {
      throw ParameterError("peak width must be positive");
    }
  }
  NormalStream noise(options.seed);
  for (std::size_t j = 0; j < options.samples; ++j) {
    const double t = s.t(j);
    double v = 0.0;
    for (const PeakSpec& p : options.peaks) {
      for (int wrap = -3; wrap <= 3; ++wrap) {
        const double d = t - p.position + 2.0 * kPi * wrap;
        v += p.amplitude * std::exp(-0.5 * d * d / (p.width * p.width));
      }
    }
    for (const CarrierTerm& c : options.carrier) {
      v += c.amplitude * std::cos(static_cast<double>(c.frequency) * t + c.phase);
    }
    if (options.noise_stddev > 0.0) {
      v += options.noise_stddev * noise.next();
    }
    s.samples[j] = v;
  }
  return s;
}

std::vector<std::size_t> detect_peaks(const Signal& f, double threshold,
                                      std::size_t min_separation) {
  if (min_separation < 1) {
    throw ParameterError("min_separation must be >= 1");
  }
  const std::size_t n = f.size();
  std::vector<std::size_t> candidates;
  if (n < 3) return candidates;
  for (std::size_t j = 0; j < n; ++j) {
    const double v = f.samples[j];
    const double left = f.samples[(j + n - 1) % n];
    const double right = f.samples[(j + 1) % n];
    if (v > left && v > right && v >= threshold) candidates.push_back(j);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&f](std::size_t a, std::size_t b) {
    return f.samples[a] > f.samples[b];
  });
  std::vector<std::size_t> kept;
  for (std::size_t c : candidates) {
    const bool clear = std::all_of(kept.begin(), kept.end(), [&](std::size_t k) {
      return circular_distance(c, k, n) >= min_separation;
    });
    if (clear) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

} // namespace polyloc
