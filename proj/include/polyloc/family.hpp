#ifndef POLYLOC_FAMILY_HPP
#define POLYLOC_FAMILY_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace polyloc {

struct JacobiParams {
  double alpha;
  double beta;
};

struct LaguerreParams {
  double alpha;
};

struct HermiteParams {};

/// Coefficients of b_{l+1} p_{l+1}(x) = (x - a_l) p_l(x) - b_l p_{l-1}(x).
struct RecurrenceCoeffs {
  double a;
  double b;
};

/**
 * An orthonormal polynomial system given by its weight:
 *
 *   Jacobi(alpha, beta)  (1-x)^alpha (1+x)^beta on [-1, 1], alpha, beta >= -1/2
 *   Laguerre(alpha)      x^alpha e^{-x} on [0, inf), alpha > -1
 *   Hermite              e^{-x^2} on the real line
 *
 * The polynomials p_l have positive leading coefficient and p_0 = 1/b_0 with
 * b_0 = (integral of the weight)^{1/2}. Construction validates the parameters,
 * so every Family value is usable.
 */
class Family {
public:
  using Kind = std::variant<JacobiParams, LaguerreParams, HermiteParams>;

  static Family jacobi(double alpha, double beta);
  static Family laguerre(double alpha);
  static Family hermite();

  static Family chebyshev_first() { return jacobi(-0.5, -0.5); }
  static Family legendre() { return jacobi(0.0, 0.0); }

  const Kind& kind() const noexcept { return kind_; }
  bool is_jacobi() const noexcept { return std::holds_alternative<JacobiParams>(kind_); }
  bool is_hermite() const noexcept { return std::holds_alternative<HermiteParams>(kind_); }
  bool is_laguerre() const noexcept { return std::holds_alternative<LaguerreParams>(kind_); }

  /// Throws ParameterError when the family is not Jacobi.
  const JacobiParams& jacobi_params() const;

  RecurrenceCoeffs coeffs(std::size_t l) const;
  double a(std::size_t l) const { return coeffs(l).a; }
  double b(std::size_t l) const { return coeffs(l).b; }

  /// Weight function value; x outside the support gives 0.
  double weight(double x) const;

  /// Short textual form, e.g. "jacobi:-0.5,-0.5", "laguerre:0.5", "hermite".
  std::string name() const;

  friend bool operator==(const Family& lhs, const Family& rhs);

private:
  explicit Family(Kind kind) : kind_(kind) {}
  Kind kind_;
  double b0_ = 1.0;
};

/// Parses the textual form produced by Family::name().
Family parse_family(const std::string& text);

RecurrenceCoeffs recurrence_coeffs(const Family& family, std::size_t l);

/// (p_0(x), ..., p_n(x)) by forward recurrence.
std::vector<double> eval_orthonormal(const Family& family, std::size_t n, double x);

/// Associated polynomial p_l(x, m); l = -1 gives 0.
double eval_associated(const Family& family, int l, std::size_t m, double x);

/// (p_0(x,m), ..., p_count-1(x,m)).
std::vector<double> associated_sequence(const Family& family, std::size_t count, std::size_t m,
                                        double x);

/// Scaled co-recursive associated polynomial p_l(x, m, gamma, delta); l = -1 gives 0.
double eval_corecursive(const Family& family, int l, std::size_t m, double gamma, double delta,
                        double x);

std::vector<double> corecursive_sequence(const Family& family, std::size_t count, std::size_t m,
                                         double gamma, double delta, double x);

} // namespace polyloc

#endif // POLYLOC_FAMILY_HPP
