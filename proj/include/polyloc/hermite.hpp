#ifndef POLYLOC_HERMITE_HPP
#define POLYLOC_HERMITE_HPP

#include "polyloc/localize.hpp"

#include <optional>
#include <span>
#include <vector>

namespace polyloc {

/**
 * Minimizer of the Hermite position variance var_S(P) = int x^2 |P|^2 e^{-x^2}
 * over the unit sphere of span{h_m, ..., h_n}, m and n even. coeffs holds
 * c_m..c_n in the orthonormal Hermite basis; every odd-degree entry is zero.
 */
struct HermiteOptimal {
  Band band;
  std::vector<double> coeffs;
  double lambda = 0.0;
};

/// Throws ParityError for odd m or n, BandError for m > n.
void validate_hermite_band(Band band);

/// var_S through the two Laguerre blocks: (-1/2) on even degrees, (+1/2) on odd.
double var_s_hermite(Band band, std::span<const double> coeffs);

/// Smallest eigenvalues of the even and odd blocks over [m, n].
struct HermiteBlockMinima {
  double even;
  std::optional<double> odd; // empty when m == n
};
HermiteBlockMinima hermite_block_minima(Band band);

HermiteOptimal optimal_hermite_full(std::size_t n);
HermiteOptimal optimal_hermite_band(std::size_t m, std::size_t n);

double eval_sum_hermite(const HermiteOptimal& h, double x);

/// Closed form through h_{n+2}, h_n and h_{m-2}; falls back to the series near x^2 = lambda.
double eval_explicit_hermite(const HermiteOptimal& h, double x);

} // namespace polyloc

#endif // POLYLOC_HERMITE_HPP
