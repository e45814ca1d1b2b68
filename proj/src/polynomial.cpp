#include "anharm/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "anharm/jsonw.hpp"

namespace anharm {

PiRational PiRational::make(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("PiRational: denominator must be positive");
  long long two_den = 2 * den;
  num %= two_den;
  if (num < 0) num += two_den;
  long long g = std::gcd(num == 0 ? two_den : num, den);
  return PiRational{num / g, den / g};
}

double PiRational::radians() const {
  return std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
}

bool PiRational::on_real_axis() const { return num % den == 0; }

bool PiRational::on_imaginary_axis() const {
  // angle = pi n/d is an odd multiple of pi/2 iff 2n/d is an odd integer
  return (2 * num) % den == 0 && ((2 * num) / den) % 2 == 1;
}

EvenPolynomial::EvenPolynomial(std::vector<double> even_coeffs) : c_(std::move(even_coeffs)) {
  while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
  if (c_.size() < 2)
    throw std::invalid_argument("EvenPolynomial: degree must be at least 2");
  if (!(c_.back() > 0.0))
    throw std::invalid_argument("EvenPolynomial: leading coefficient must be positive");
  for (double v : c_)
    if (!std::isfinite(v)) throw std::invalid_argument("EvenPolynomial: non-finite coefficient");
}

double eval_even(std::span<const double> c, double x) {
  double u = x * x;
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * u + c[i];
  return acc;
}

std::complex<double> eval_even(std::span<const double> c, std::complex<double> z) {
  std::complex<double> u = z * z;
  std::complex<double> acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * u + c[i];
  return acc;
}

double EvenPolynomial::operator()(double x) const { return eval_even(c_, x); }

std::complex<double> EvenPolynomial::operator()(std::complex<double> z) const {
  return eval_even(c_, z);
}

std::string EvenPolynomial::to_json() const {
  jsonw::Object o;
  o.put("even_coeffs", jsonw::Array::of(c_));
  o.put("degree", degree());
  return o.dump();
}

EvenPolynomial EvenPolynomial::from_json(const std::string& text) {
  // Tolerant scan for the even_coeffs array; degree is implied by length.
  auto pos = text.find("even_coeffs");
  if (pos == std::string::npos)
    throw std::invalid_argument("potential JSON: missing even_coeffs");
  pos = text.find('[', pos);
  auto end = text.find(']', pos);
  if (pos == std::string::npos || end == std::string::npos)
    throw std::invalid_argument("potential JSON: malformed even_coeffs");
  std::vector<double> coeffs;
  std::string body = text.substr(pos + 1, end - pos - 1);
  std::size_t i = 0;
  while (i < body.size()) {
    std::size_t used = 0;
    coeffs.push_back(std::stod(body.substr(i), &used));
    i += used;
    while (i < body.size() && (body[i] == ',' || std::isspace(static_cast<unsigned char>(body[i])))) ++i;
  }
  return EvenPolynomial(std::move(coeffs));
}

StokesGeometry stokes(int d) {
  if (d < 2 || d % 2 != 0)
    throw std::invalid_argument("stokes: degree must be a positive even integer");
  StokesGeometry g;
  g.d = d;
  for (int j = 0; j <= d + 1; ++j) {
    g.ray_angles.push_back(PiRational::make(2 * j - 1, d + 2));
    g.sector_bisectors.push_back(PiRational::make(2 * j, d + 2));
  }
  return g;
}

EvenPolynomial qes_potential(int m, int p, double b) {
  if (p != 0 && p != 1) throw std::invalid_argument("qes_potential: p must be 0 or 1");
  if (m < 0) throw std::invalid_argument("qes_potential: m must be non-negative");
  return EvenPolynomial({0.0, b * b - 4.0 * m - 2.0 * p - 3.0, 2.0 * b, 1.0});
}

namespace {

// One term of the shorthand: [sign][coefficient][z[^power]]
struct Term {
  double coeff;
  int power;
};

Term parse_term(const std::string& s, std::size_t& i) {
  double sign = 1.0;
  if (s[i] == '+' || s[i] == '-') {
    if (s[i] == '-') sign = -1.0;
    ++i;
  }
  double coeff = 1.0;
  bool have_coeff = false;
  if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
    std::size_t used = 0;
    coeff = std::stod(s.substr(i), &used);
    i += used;
    have_coeff = true;
  }
  if (i < s.size() && s[i] == '*') ++i;
  int power = 0;
  if (i < s.size() && (s[i] == 'z' || s[i] == 'x')) {
    ++i;
    power = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t used = 0;
      power = std::stoi(s.substr(i), &used);
      i += used;
    }
  } else if (!have_coeff) {
    throw std::invalid_argument("potential: expected coefficient or z at '" + s.substr(i) + "'");
  }
  return {sign * coeff, power};
}

}  // namespace

EvenPolynomial parse_potential(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("potential: empty expression");
  std::vector<double> coeffs;
  std::size_t i = 0;
  while (i < s.size()) {
    Term t = parse_term(s, i);
    if (t.power % 2 != 0)
      throw std::invalid_argument("potential: odd power z^" + std::to_string(t.power) +
                                  " not allowed (potentials are even)");
    std::size_t idx = static_cast<std::size_t>(t.power / 2);
    if (coeffs.size() <= idx) coeffs.resize(idx + 1, 0.0);
    coeffs[idx] += t.coeff;
  }
  return EvenPolynomial(std::move(coeffs));
}

}  // namespace anharm
