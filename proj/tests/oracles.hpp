#pragma once

// Reference evaluations written directly from the closed forms, sharing no
// code with the library beyond plain types.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace oracle {

using cplx = std::complex<double>;
using Mat4 = std::array<std::array<cplx, 4>, 4>;

// M(R,b;r,s) with b, r, s in {0 = R, 1 = L}.
inline double amplitude(int b, int r, int s, double theta, double mu) {
  const double m2 = mu * mu;
  const double c = std::cos(theta);
  const double cot = 1.0 / std::tan(theta / 2.0);
  const double csc2 = 1.0 / (std::sin(theta / 2.0) * std::sin(theta / 2.0));
  const double root = std::sqrt(1.0 + m2);
  const double cross = (1.0 + m2 * c) * cot / (m2 * root);
  if (b == 0) {
    if (r == 0 && s == 0) return (2.0 + 11.0 * m2 + 8.0 * m2 * m2 + 2.0 * c + m2 * std::cos(2.0 * theta)) * csc2 / (4.0 * m2 * (1.0 + m2));
    if (r != s) return -cross;
    return (1.0 + m2 * (1.0 + c)) / (m2 * (1.0 + m2));
  }
  if (r == 0 && s == 0) return cross;
  if (r == 1 && s == 1) return -cross;
  if (r == 0) return (1.0 + m2 * (1.0 + c)) * cot * cot / m2;
  return 1.0 - c - 1.0 / m2;
}

// Normalized final state, index 4r + 2s + c.
inline std::array<cplx, 8> final_state(double theta, double eta, double beta, double mu) {
  std::array<cplx, 8> psi{};
  const cplx w[2] = {std::cos(eta), std::polar(std::sin(eta), beta)};
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s)
      for (int c = 0; c < 2; ++c) psi[4 * r + 2 * s + c] = w[c] * amplitude(c, r, s, theta, mu);
  double n2 = 0.0;
  for (auto a : psi) n2 += std::norm(a);
  for (auto &a : psi) a /= std::sqrt(n2);
  return psi;
}

inline Mat4 normalize(Mat4 m) {
  cplx tr = 0.0;
  for (int i = 0; i < 4; ++i) tr += m[i][i];
  for (auto &row : m)
    for (auto &x : row) x /= tr;
  return m;
}

// Unnormalized sums of the two-party marginals, rescaled to unit trace.
inline Mat4 rho_ab(double theta, double eta, double mu) {
  Mat4 m{};
  const double w[2] = {std::cos(eta) * std::cos(eta), std::sin(eta) * std::sin(eta)};
  for (int b = 0; b < 2; ++b)
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s)
        for (int r2 = 0; r2 < 2; ++r2)
          for (int s2 = 0; s2 < 2; ++s2)
            m[2 * r + s][2 * r2 + s2] += w[b] * amplitude(b, r, s, theta, mu) * amplitude(b, r2, s2, theta, mu);
  return normalize(m);
}

// Spectator rows/columns carry e^{+-i beta} sin eta cos eta cross terms.
inline Mat4 rho_xc(bool keep_a, double theta, double eta, double beta, double mu) {
  Mat4 m{};
  const cplx w[2] = {std::cos(eta), std::polar(std::sin(eta), beta)};
  for (int c = 0; c < 2; ++c)
    for (int c2 = 0; c2 < 2; ++c2)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
          for (int x2 = 0; x2 < 2; ++x2) {
            const int x = keep_a ? r : s;
            const double m1 = amplitude(c, r, s, theta, mu);
            const double m2 = keep_a ? amplitude(c2, x2, s, theta, mu) : amplitude(c2, r, x2, theta, mu);
            m[2 * x + c][2 * x2 + c2] += w[c] * std::conj(w[c2]) * m1 * m2;
          }
  return normalize(m);
}

inline Mat4 rho_ac(double theta, double eta, double beta, double mu) { return rho_xc(true, theta, eta, beta, mu); }
inline Mat4 rho_bc(double theta, double eta, double beta, double mu) { return rho_xc(false, theta, eta, beta, mu); }

inline double binary_entropy(double x) { return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x); }

struct Point {
  double theta, eta, beta, mu;
};

// Fixed-seed sampler over the physical domain; mu log-uniform in [1e-2, 1e2].
class Sampler {
 public:
  explicit Sampler(unsigned long seed) : rng_(seed) {}

  Point next() {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Point p;
    p.theta = 0.01 + (std::numbers::pi - 0.01) * u(rng_);
    p.eta = 0.5 * std::numbers::pi * u(rng_);
    p.beta = 2.0 * std::numbers::pi * u(rng_);
    p.mu = std::pow(10.0, -2.0 + 4.0 * u(rng_));
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
