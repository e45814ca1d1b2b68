#pragma once

#include <vector>

namespace anharm::polyops {

// Dense univariate polynomial arithmetic over any field-like scalar,
// coefficients ascending. Shared by the QES residual evaluation and the
// exact-rational identity tests.

template <typename T>
std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

template <typename T>
std::vector<T> scale(std::vector<T> a, const T& s) {
  for (auto& v : a) v *= s;
  return a;
}

template <typename T>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

template <typename T>
std::vector<T> deriv(const std::vector<T>& a) {
  if (a.size() <= 1) return {T(0)};
  std::vector<T> out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * T(static_cast<int>(i));
  return out;
}

template <typename T>
T eval(const std::vector<T>& a, const T& x) {
  T acc(0);
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

/// Coefficients in z of -y'' + (P - lambda) y with the exponential factor
/// divided out, for y = z^p Q(z^2) exp(-z^4/4 - b z^2/2) and
/// P = z^6 + 2b z^4 + (b^2 - 4m - 2p - 3) z^2. Zero polynomial exactly when
/// (lambda, Q) is an eigenpair of the QES coefficient matrix.
template <typename T>
std::vector<T> qes_residual_poly(const std::vector<T>& q_coeffs, int m, int p, const T& b,
                                 const T& lambda) {
  // A(z) = z^p Q(z^2)
  std::vector<T> A(2 * (q_coeffs.size() - 1) + p + 1, T(0));
  for (std::size_t j = 0; j < q_coeffs.size(); ++j) A[2 * j + p] = q_coeffs[j];

  // T'(z) = -z^3 - b z, T''(z) = -3 z^2 - b
  std::vector<T> Tp = {T(0), -b, T(0), T(-1)};
  std::vector<T> Tpp = {-b, T(0), T(-3)};

  std::vector<T> Ap = deriv(A);
  std::vector<T> App = deriv(Ap);

  // y''/e^T = A'' + 2 A' T' + A (T'' + T'^2)
  std::vector<T> ypp = add(App, add(scale(mul(Ap, Tp), T(2)), mul(A, add(Tpp, mul(Tp, Tp)))));

  // (P - lambda) A
  std::vector<T> P = {-lambda, b * b - T(4 * m + 2 * p + 3), T(0), b * T(2), T(0), T(0), T(1)};
  // ascending in z^2? No: P in z: coefficients at z^0..z^6
  // z^2 coefficient: b^2 - 4m - 2p - 3 -> index 2; rebuild explicitly:
  P.assign(7, T(0));
  P[0] = -lambda;
  P[2] = b * b - T(4 * m + 2 * p + 3);
  P[4] = b * T(2);
  P[6] = T(1);

  return add(scale(ypp, T(-1)), mul(P, A));
}

}  // namespace anharm::polyops
