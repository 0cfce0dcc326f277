#include "bqc/scattering_state.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace bqc {

namespace {

std::string describe(const char *name, double v, const char *range) {
  std::ostringstream os;
  os << name << "=" << v << " outside " << range;
  return os.str();
}

}  // namespace

void ScatterParams::validate() const {
  if (!(theta >= kThetaMin && theta <= std::numbers::pi)) throw DomainError("theta", describe("theta", theta, "[1e-06, pi]"));
  if (!(eta >= 0.0 && eta <= 0.5 * std::numbers::pi)) throw DomainError("eta", describe("eta", eta, "[0, pi/2]"));
  if (!(beta >= 0.0 && beta < 2.0 * std::numbers::pi)) throw DomainError("beta", describe("beta", beta, "[0, 2 pi)"));
  if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("mu", describe("mu", mu, "(0, inf)"));
}

PureState3Q PureState3Q::normalized(const std::array<cplx, 8> &amps) {
  double n2 = 0.0;
  for (const auto &a : amps) n2 += std::norm(a);
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw ZeroNorm("state vector has zero or non-finite norm");
  const double inv = 1.0 / std::sqrt(n2);
  std::array<cplx, 8> out;
  for (std::size_t i = 0; i < 8; ++i) out[i] = amps[i] * inv;
  return PureState3Q(out, Unchecked{});
}

PureState3Q::PureState3Q(const std::array<cplx, 8> &amps) : amps_(amps) {
  if (std::abs(norm() - 1.0) > kNormTol) throw std::invalid_argument("PureState3Q requires a unit-norm vector");
}

double PureState3Q::norm() const {
  double n2 = 0.0;
  for (const auto &a : amps_) n2 += std::norm(a);
  return std::sqrt(n2);
}

std::array<cplx, 4> PureState3Q::slice(QubitLabel fixed, int value) const {
  const unsigned shift = 2u - static_cast<unsigned>(fixed);
  std::array<cplx, 4> out{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 8; ++i)
    if (((i >> shift) & 1u) == static_cast<unsigned>(value)) out[k++] = amps_[i];
  return out;
}

PureState3Q PureState3Q::apply_local(const ComplexMatrix &ua, const ComplexMatrix &ub, const ComplexMatrix &uc) const {
  const ComplexMatrix u = kron(kron(ua, ub), uc);
  std::array<cplx, 8> out{};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) out[i] += u(i, j) * amps_[j];
  return normalized(out);
}

std::pair<double, double> cos_sin_eta(double eta) {
  // cos written as sin of the complement: exactly zero at eta = pi/2.
  return {std::sin(0.5 * std::numbers::pi - eta), std::sin(eta)};
}

PureState3Q initial_state(const ScatterParams &p) {
  p.validate();
  const auto [c, s] = cos_sin_eta(p.eta);
  std::array<cplx, 8> a{};
  a[basis_index(Spin::R, Spin::R, Spin::R)] = c;
  a[basis_index(Spin::R, Spin::L, Spin::L)] = std::polar(s, p.beta);
  return PureState3Q::normalized(a);
}

PureState3Q final_state(const ScatterParams &p) {
  p.validate();
  const Kinematics k = p.kinematics();
  const auto row_r = amplitude_row(Spin::R, k);
  const auto row_l = amplitude_row(Spin::L, k);
  const auto [c, s] = cos_sin_eta(p.eta);
  const cplx weight_l = std::polar(s, p.beta);

  std::array<cplx, 8> a{};
  for (std::size_t rs = 0; rs < 4; ++rs) {
    a[2 * rs + 0] = c * row_r[rs];         // C stays R
    a[2 * rs + 1] = weight_l * row_l[rs];  // C stays L
  }
  return PureState3Q::normalized(a);
}

DensityMatrix density(const PureState3Q &s) {
  return DensityMatrix::trusted(ComplexMatrix::outer(std::vector<cplx>(s.amps().begin(), s.amps().end())));
}

DensityMatrix reduced(const PureState3Q &s, QubitSet keep) {
  if (keep.empty() || keep.size() == 3) throw BadSubsystem("kept set must be a nonempty proper subset of {A,B,C}");
  return partial_trace(density(s), keep.complement());
}

}  // namespace bqc
