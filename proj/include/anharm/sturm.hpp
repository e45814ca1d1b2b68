#pragma once

#include <span>
#include <utility>
#include <vector>

namespace anharm {

double poly_eval(std::span<const double> coeffs, double x);
std::vector<double> poly_deriv(std::span<const double> coeffs);

/// Sign variations in the coefficient list (Descartes). For a polynomial
/// known to have only real roots this equals the number of positive roots.
int descartes_positive(std::span<const double> coeffs);
int descartes_negative(std::span<const double> coeffs);

/// Sturm chain of a real polynomial with (numerically) simple real roots.
/// Coefficients ascending by degree.
class SturmChain {
 public:
  explicit SturmChain(std::vector<double> coeffs);

  int variations(double x) const;
  int count_roots(double a, double b) const;  // roots in (a, b]
  double root_bound() const;                  // Cauchy bound
  int degree() const { return static_cast<int>(chain_.front().size()) - 1; }

  /// Disjoint intervals (a, b], each containing exactly one real root,
  /// covering all real roots.
  std::vector<std::pair<double, double>> isolate() const;

  /// All real roots, isolated then refined by bisection and Newton.
  std::vector<double> roots(double tol) const;

 private:
  std::vector<std::vector<double>> chain_;
};

}  // namespace anharm
