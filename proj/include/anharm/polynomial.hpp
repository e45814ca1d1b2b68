#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace anharm {

/// Angle stored as an exact rational multiple of pi, normalized to [0, 2).
/// Keeps axis-membership tests exact instead of comparing floating radians.
struct PiRational {
  long long num = 0;  // angle = pi * num / den, 0 <= num < 2*den
  long long den = 1;

  static PiRational make(long long num, long long den);
  double radians() const;
  bool on_real_axis() const;       // multiple of pi
  bool on_imaginary_axis() const;  // odd multiple of pi/2
  bool operator==(const PiRational&) const = default;
  bool operator<(const PiRational& o) const { return num * o.den < o.num * den; }
};

/// Real even polynomial P(z) = sum c_j z^{2j} with positive leading
/// coefficient. Odd coefficients are structurally impossible: only the even
/// ones are stored, so P(-z) = P(z) and P(conj z) = conj P(z) hold by
/// construction, with identical floating operations.
class EvenPolynomial {
 public:
  /// c[j] multiplies z^{2j}; trailing zeros are trimmed. Requires the
  /// resulting leading coefficient to be positive and degree >= 2.
  explicit EvenPolynomial(std::vector<double> even_coeffs);

  int degree() const { return 2 * (static_cast<int>(c_.size()) - 1); }
  std::span<const double> even_coeffs() const { return c_; }

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> z) const;

  std::string to_json() const;                    // {"even_coeffs":[...],"degree":d}
  static EvenPolynomial from_json(const std::string& text);

  bool operator==(const EvenPolynomial&) const = default;

 private:
  std::vector<double> c_;
};

/// Evaluate an even-coefficient list (no sign constraint on the leading
/// coefficient; used for axis restrictions of potentials).
double eval_even(std::span<const double> even_coeffs, double x);
std::complex<double> eval_even(std::span<const double> even_coeffs,
                               std::complex<double> z);

/// Stokes rays and sectors for degree d. Ray j sits at angle
/// pi(2j-1)/(d+2); sector S_j lies between rays j and j+1 and is bisected
/// by angle 2 pi j / (d+2), so S_0 is bisected by the positive real axis.
struct StokesGeometry {
  int d = 0;
  std::vector<PiRational> ray_angles;        // j = 0..d+1
  std::vector<PiRational> sector_bisectors;  // j = 0..d+1
};

StokesGeometry stokes(int d);

/// The quasi-exactly-solvable sextic family
/// P(z) = z^6 + 2 b z^4 + (b^2 - 4m - 2p - 3) z^2,  p in {0,1}, m >= 0.
EvenPolynomial qes_potential(int m, int p, double b);

/// Parses "z^6-7z^2", "z^4 + 2.5z^2 + 1", ... Odd powers are rejected.
EvenPolynomial parse_potential(const std::string& text);

}  // namespace anharm
