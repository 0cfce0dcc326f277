#include "bqc/amplitudes.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace bqc {

namespace {

struct Trig {
  double cos_theta;
  double cos_2theta;
  double cot_half;
  double csc2_half;
};

Trig trig(double theta) {
  const double sin_half = std::sin(0.5 * theta);
  // cos(theta/2) written as sin((pi - theta)/2) so it vanishes exactly at
  // theta = pi and the cot(theta/2) factors drop out of backscattering.
  const double cos_half = std::sin(0.5 * (std::numbers::pi - theta));
  return {std::cos(theta), std::cos(2.0 * theta), cos_half / sin_half, 1.0 / (sin_half * sin_half)};
}

// The six printed closed forms.
double m_rr_rr(const Trig &t, double mu2) {
  return (2.0 + 11.0 * mu2 + 8.0 * mu2 * mu2 + 2.0 * t.cos_theta + mu2 * t.cos_2theta) * t.csc2_half /
         (4.0 * mu2 * (1.0 + mu2));
}

double m_rr_rl(const Trig &t, double mu2) {
  return -(1.0 + mu2 * t.cos_theta) * t.cot_half / (mu2 * std::sqrt(1.0 + mu2));
}

double m_rr_ll(const Trig &t, double mu2) { return (1.0 + mu2 * (1.0 + t.cos_theta)) / (mu2 * (1.0 + mu2)); }

double m_rl_rr(const Trig &t, double mu2) {
  return (1.0 + mu2 * t.cos_theta) * t.cot_half / (mu2 * std::sqrt(1.0 + mu2));
}

double m_rl_rl(const Trig &t, double mu2) {
  return (1.0 + mu2 * (1.0 + t.cos_theta)) * t.cot_half * t.cot_half / mu2;
}

double m_rl_lr(const Trig &t, double mu2) { return 1.0 - t.cos_theta - 1.0 / mu2; }

}  // namespace

const char *to_string(Spin s) { return s == Spin::R ? "R" : "L"; }

Kinematics::Kinematics(double theta, double mu) : theta_(theta), mu_(mu) {
  if (!(theta >= kThetaMin && theta <= std::numbers::pi)) {
    std::ostringstream os;
    os << "theta=" << theta << " outside [" << kThetaMin << ", pi]";
    throw DomainError("theta", os.str());
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    std::ostringstream os;
    os << "mu=" << mu << " must be a positive finite number";
    throw DomainError("mu", os.str());
  }
}

std::array<double, 4> amplitude_row(Spin b, const Kinematics &k) {
  const Trig t = trig(k.theta());
  const double mu2 = k.mu() * k.mu();
  if (b == Spin::R) {
    const double off = m_rr_rl(t, mu2);  // RL and LR share one value
    return {m_rr_rr(t, mu2), off, off, m_rr_ll(t, mu2)};
  }
  const double rr = m_rl_rr(t, mu2);
  return {rr, m_rl_rl(t, mu2), m_rl_lr(t, mu2), -rr};
}

double amplitude(Spin b, Spin r, Spin s, const Kinematics &k) {
  const auto row = amplitude_row(b, k);
  return row[2 * static_cast<int>(r) + static_cast<int>(s)];
}

}  // namespace bqc
