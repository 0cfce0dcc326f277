#pragma once

// Tree-level Bhabha helicity amplitudes for an incoming electron of helicity R.
//
// The amplitudes are real functions of the CM scattering angle theta and the
// dimensionless momentum mu = |p| / m_e. The common e^2 coupling is dropped:
// the scattered state is renormalized to unit norm, so any global factor
// cancels from every downstream quantity.

#include <array>
#include <stdexcept>
#include <string>

namespace bqc {

class DomainError : public std::domain_error {
 public:
  DomainError(const std::string &param, const std::string &what) : std::domain_error(what), param_(param) {}
  /// Name of the offending parameter ("theta", "eta", "beta", "mu").
  const std::string &param() const { return param_; }

 private:
  std::string param_;
};

enum class Spin { R = 0, L = 1 };

constexpr Spin flip(Spin s) { return s == Spin::R ? Spin::L : Spin::R; }
const char *to_string(Spin s);

/// Smallest admissible scattering angle; the forward beam is excluded.
inline constexpr double kThetaMin = 1e-6;

/// Outgoing kinematics in the CM frame. p1, p2 run along the z axis and
/// p3, p4 are fixed by (theta, mu), so nothing else needs storing.
class Kinematics {
 public:
  /// Throws DomainError for theta outside [kThetaMin, pi] or mu <= 0.
  Kinematics(double theta, double mu);

  double theta() const { return theta_; }
  double mu() const { return mu_; }

 private:
  double theta_;
  double mu_;
};

/// M(a=R, b; r, s).
double amplitude(Spin b, Spin r, Spin s, const Kinematics &k);

/// The four amplitudes for fixed b, ordered (r,s) = RR, RL, LR, LL.
std::array<double, 4> amplitude_row(Spin b, const Kinematics &k);

}  // namespace bqc
