#ifndef POLYLOC_VERIFY_HPP
#define POLYLOC_VERIFY_HPP

#include <string>
#include <vector>

namespace polyloc {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

enum class VerifySuite { Quick, Full };

/// Runs the built-in invariant checks (closed-form eigenvalues, quadrature
/// cross-checks, maximality, closed-form/series agreement, filters).
std::vector<CheckResult> run_verification(VerifySuite suite);

} // namespace polyloc

#endif // POLYLOC_VERIFY_HPP
