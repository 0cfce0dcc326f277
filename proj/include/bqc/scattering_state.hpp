#pragma once

// Spin state of the electron (A), positron (B) and spectator (C).
//
// Before scattering: |R>_A (cos eta |RR>_BC + e^{i beta} sin eta |LL>_BC).
// After scattering, restricted to the interaction part at fixed outgoing
// kinematics, the unnormalized vector is
//
//   cos eta  sum_rs M(R,R;rs) |r s R> + e^{i beta} sin eta sum_rs M(R,L;rs) |r s L>
//
// which is rescaled to unit norm. Its outer product is the post-scattering
// density matrix; the box-normalization constants only contribute a global
// factor and are not modelled.

#include <array>
#include <utility>
#include <vector>

#include "bqc/amplitudes.hpp"
#include "bqc/qmat.hpp"

namespace bqc {

struct ScatterParams {
  double theta = 0.0;  // rad, [kThetaMin, pi]
  double eta = 0.0;    // rad, [0, pi/2]
  double beta = 0.0;   // rad, [0, 2 pi)
  double mu = 1.0;     // |p| / m_e, > 0

  /// Throws DomainError naming the first offending field.
  void validate() const;
  Kinematics kinematics() const { return Kinematics(theta, mu); }
};

class ZeroNorm : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Normalized amplitudes over |a b c>, index 4a + 2b + c (R=0, L=1).
class PureState3Q {
 public:
  static constexpr double kNormTol = 1e-12;

  /// Rescales `amps` to unit norm. Throws ZeroNorm for the zero vector.
  static PureState3Q normalized(const std::array<cplx, 8> &amps);
  /// Requires |amps| = 1 within kNormTol.
  explicit PureState3Q(const std::array<cplx, 8> &amps);

  const std::array<cplx, 8> &amps() const { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[i]; }
  double norm() const;

  /// Two-qubit vector obtained by fixing qubit `fixed` to basis value `value`,
  /// ordered over the remaining qubits in A, B, C order. Unnormalized.
  std::array<cplx, 4> slice(QubitLabel fixed, int value) const;

  /// |psi> -> (U_A (x) U_B (x) U_C) |psi>; each U is 2x2.
  PureState3Q apply_local(const ComplexMatrix &ua, const ComplexMatrix &ub, const ComplexMatrix &uc) const;

 private:
  struct Unchecked {};
  PureState3Q(const std::array<cplx, 8> &amps, Unchecked) : amps_(amps) {}
  std::array<cplx, 8> amps_{};
};

constexpr std::size_t basis_index(Spin a, Spin b, Spin c) {
  return 4 * static_cast<std::size_t>(a) + 2 * static_cast<std::size_t>(b) + static_cast<std::size_t>(c);
}

/// cos(eta) and sin(eta), exact at eta = 0 and eta = pi/2.
std::pair<double, double> cos_sin_eta(double eta);

PureState3Q initial_state(const ScatterParams &p);
PureState3Q final_state(const ScatterParams &p);

DensityMatrix density(const PureState3Q &s);

/// Reduced state on `keep` (nonempty proper subset), qubits in A, B, C order.
DensityMatrix reduced(const PureState3Q &s, QubitSet keep);

}  // namespace bqc
