#include "anharm/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anharm {

double poly_eval(std::span<const double> c, double x) {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::vector<double> poly_deriv(std::span<const double> c) {
  if (c.size() <= 1) return {0.0};
  std::vector<double> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
  return d;
}

namespace {

int sign_of(double v, double scale) {
  if (std::abs(v) <= 1e-14 * scale) return 0;
  return v > 0 ? 1 : -1;
}

int variations_in(const std::vector<int>& signs) {
  int var = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

double max_abs_coeff(std::span<const double> c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

// Remainder of a by b, coefficients ascending; quotient discarded.
std::vector<double> poly_rem(std::vector<double> a, const std::vector<double>& b) {
  const std::size_t nb = b.size();
  while (a.size() >= nb && !a.empty()) {
    double q = a.back() / b.back();
    for (std::size_t i = 0; i < nb; ++i) a[a.size() - nb + i] -= q * b[i];
    a.pop_back();
  }
  return a;
}

void trim(std::vector<double>& p, double scale) {
  while (p.size() > 1 && std::abs(p.back()) <= 1e-13 * scale) p.pop_back();
  if (p.size() == 1 && std::abs(p[0]) <= 1e-13 * scale) p[0] = 0.0;
}

}  // namespace

int descartes_positive(std::span<const double> c) {
  std::vector<int> signs;
  double scale = max_abs_coeff(c);
  for (double v : c) signs.push_back(sign_of(v, scale));
  return variations_in(signs);
}

int descartes_negative(std::span<const double> c) {
  std::vector<int> signs;
  double scale = max_abs_coeff(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    int s = sign_of(c[i], scale);
    signs.push_back(i % 2 ? -s : s);
  }
  return variations_in(signs);
}

SturmChain::SturmChain(std::vector<double> coeffs) {
  double scale = max_abs_coeff(coeffs);
  if (scale == 0.0) throw std::invalid_argument("SturmChain: zero polynomial");
  for (double& v : coeffs) v /= scale;
  trim(coeffs, 1.0);
  chain_.push_back(coeffs);
  if (coeffs.size() > 1) {
    chain_.push_back(poly_deriv(coeffs));
    while (chain_.back().size() > 1) {
      std::vector<double> r = poly_rem(chain_[chain_.size() - 2], chain_.back());
      double rs = max_abs_coeff(r);
      trim(r, std::max(rs, 1e-30));
      if (r.size() == 1 && r[0] == 0.0) break;  // gcd hit (repeated root to tolerance)
      for (double& v : r) v = -v / rs;
      chain_.push_back(std::move(r));
    }
  }
}

int SturmChain::variations(double x) const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    double v = poly_eval(p, x);
    signs.push_back(sign_of(v, max_abs_coeff(p) * std::max(1.0, std::pow(std::abs(x), static_cast<double>(p.size() - 1)))));
  }
  return variations_in(signs);
}

int SturmChain::count_roots(double a, double b) const {
  if (a >= b) return 0;
  return variations(a) - variations(b);
}

double SturmChain::root_bound() const {
  const auto& p = chain_.front();
  double lead = std::abs(p.back());
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, std::abs(p[i]));
  return 1.0 + m / lead;
}

std::vector<std::pair<double, double>> SturmChain::isolate() const {
  double B = root_bound() * (1.0 + 1e-9);
  std::vector<std::pair<double, double>> work{{-B, B}}, out;
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int n = count_roots(a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(a, b);
      continue;
    }
    double m = 0.5 * (a + b);
    if (!(m > a && m < b))
      throw std::runtime_error("SturmChain: cannot separate clustered roots");
    work.emplace_back(a, m);
    work.emplace_back(m, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> SturmChain::roots(double tol) const {
  const auto& p = chain_.front();
  std::vector<double> out;
  for (auto [a, b] : isolate()) {
    // Bisect on the Sturm count, then polish with Newton.
    for (int it = 0; it < 80 && (b - a) > 0.25 * tol; ++it) {
      double m = 0.5 * (a + b);
      if (count_roots(a, m) == 1)
        b = m;
      else
        a = m;
    }
    double x = 0.5 * (a + b);
    auto dp = poly_deriv(p);
    for (int it = 0; it < 4; ++it) {
      double f = poly_eval(p, x);
      double df = poly_eval(dp, x);
      if (df == 0.0) break;
      double nx = x - f / df;
      if (nx < a || nx > b) break;
      x = nx;
    }
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace anharm
