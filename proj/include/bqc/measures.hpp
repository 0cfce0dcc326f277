#pragma once

// Bipartite and tripartite correlation measures for three-qubit pure states
// and their two-qubit marginals.

#include <array>
#include <stdexcept>

#include "bqc/qmat.hpp"
#include "bqc/scattering_state.hpp"

namespace bqc {

class SameParty : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pairwise negativities. N_ij uses rho_ij with the transpose taken on i;
/// the value does not depend on which factor is transposed.
struct Negativities {
  double ab = 0.0, ac = 0.0, ba = 0.0, bc = 0.0, ca = 0.0, cb = 0.0;
};

struct ThreePi {
  double value = 0.0;                // (pi_A + pi_B + pi_C) / 3
  std::array<double, 3> components;  // pi_A, pi_B, pi_C
  Negativities negativities;
};

struct MeasureReport {
  double ggm = 0.0;
  double three_pi = 0.0;
  /// min_i 2(1 - Tr rho_i^2), i.e. the smallest squared one-vs-rest concurrence.
  double gmc = 0.0;
  /// min_i sqrt(2(1 - Tr rho_i^2)); kept for comparison with `gmc`.
  double gmc_rooted = 0.0;
  double fill = 0.0;
  std::array<double, 3> c_one_vs_rest{};  // C_A(BC), C_B(AC), C_C(AB)
  std::array<double, 3> pi_components{};
  Negativities negativities;
};

/// C_i(jk) = 2 sqrt(det rho_i). Also evaluates sqrt(2(1 - Tr rho_i^2)) and
/// throws std::logic_error if the two disagree by more than 1e-10 in C^2.
double concurrence_one_vs_rest(const PureState3Q &s, QubitLabel i);
/// sqrt(2(1 - Tr rho_i^2)), the purity form of the same quantity.
double concurrence_one_vs_rest_purity(const PureState3Q &s, QubitLabel i);
std::array<double, 3> concurrences_one_vs_rest(const PureState3Q &s);

/// 1 - max over cuts of the largest marginal eigenvalue.
double ggm(const PureState3Q &s);

/// ||rho^Gamma||_1 - 1 = 2 * sum |negative eigenvalues of rho^Gamma|.
double negativity(const DensityMatrix &rho);

ThreePi three_pi(const PureState3Q &s);

double gmc_pure(const PureState3Q &s);
double gmc_rooted(const PureState3Q &s);

/// Normalized Heron area of the triangle with sides C_A^2, C_B^2, C_C^2.
double concurrence_fill(const PureState3Q &s);
double concurrence_fill(const std::array<double, 3> &one_vs_rest);

/// Wootters concurrence via the spectrum of sqrt(rho) rho~ sqrt(rho).
double wootters_concurrence(const DensityMatrix &rho);

/// Wootters concurrence of rho_ij for a pure global state, from the
/// singular values of tau_ab = v_a^T (sy x sy) v_b where v_b are the slices of
/// the state at fixed value b of the third qubit.
double pair_concurrence(const PureState3Q &s, QubitLabel i, QubitLabel j);

/// H(x) in bits, 0 log 0 = 0.
double binary_entropy(double x);
double eof_from_concurrence(double c);
double eof(const DensityMatrix &rho);
double eof_pair(const PureState3Q &s, QubitLabel i, QubitLabel j);
double eof_one_vs_rest(const PureState3Q &s, QubitLabel i);

/// D(rho_{i measured}) with the measurement on `measured`, by the
/// Koashi-Winter identity: E_f(rho_ij) - S(rho_i | rho_measured).
double discord_kw(const PureState3Q &s, QubitLabel i, QubitLabel measured);
/// D(rho_{i|jk}) = S(rho_i) for a pure global state.
double discord_one_vs_rest(const PureState3Q &s, QubitLabel i);

/// Discord of a two-qubit state by direct minimization over projective
/// measurements on `measured`: an n_grid x n_grid Bloch-sphere lattice
/// followed by simplex refinement. n_grid must be at least 32.
double discord_brute(const DensityMatrix &rho, Party measured = Party::Second, int n_grid = 32);

MeasureReport measure_report(const PureState3Q &s);

}  // namespace bqc
