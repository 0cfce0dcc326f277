#include "bqc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bqc/nelder_mead.hpp"

namespace bqc {

namespace {

constexpr double kIdentityTol = 1e-10;
constexpr double kHeronClamp = 1e-12;
constexpr double kDiscordClamp = 1e-8;

QubitLabel third_of(QubitLabel i, QubitLabel j) {
  return static_cast<QubitLabel>(3 - static_cast<int>(i) - static_cast<int>(j));
}

ComplexMatrix marginal(const PureState3Q &s, QubitLabel i) { return reduced(s, {i}).matrix(); }

// det rho_i = sum over column pairs of |2x2 minor|^2 of the 2x4 amplitude
// matrix (Cauchy-Binet): a sum of squares, accurate even when rho_i is
// nearly pure.
double marginal_det(const PureState3Q &s, QubitLabel i) {
  const auto m0 = s.slice(i, 0), m1 = s.slice(i, 1);
  double det = 0.0, n2 = 0.0;
  for (std::size_t j = 0; j < 4; ++j) {
    n2 += std::norm(m0[j]) + std::norm(m1[j]);
    for (std::size_t k = j + 1; k < 4; ++k) det += std::norm(m0[j] * m1[k] - m0[k] * m1[j]);
  }
  return det / (n2 * n2);
}

// 1 - Tr rho_i^2 / (Tr rho_i)^2 in extended precision.
// Double-double arithmetic: value = hi + lo with |lo| <= ulp(hi) / 2.
struct DD {
  double hi = 0.0, lo = 0.0;
};

DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DD operator+(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return two_sum(s.hi, s.lo);
}

DD operator-(DD a) { return {-a.hi, -a.lo}; }

DD operator*(DD a, DD b) {
  const double p = a.hi * b.hi;
  const double e = std::fma(a.hi, b.hi, -p) + (a.hi * b.lo + a.lo * b.hi);
  return two_sum(p, e);
}

DD exact_product(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// 1 - Tr rho_i^2 / (Tr rho_i)^2 with rho_i accumulated from the slices in
// double-double, so the subtraction keeps full relative accuracy near purity.
double marginal_mixedness(const PureState3Q &s, QubitLabel i) {
  const auto m0 = s.slice(i, 0), m1 = s.slice(i, 1);
  DD r00, r11, re01, im01;
  for (std::size_t j = 0; j < 4; ++j) {
    const double ar = m0[j].real(), ai = m0[j].imag(), br = m1[j].real(), bi = m1[j].imag();
    r00 = r00 + exact_product(ar, ar) + exact_product(ai, ai);
    r11 = r11 + exact_product(br, br) + exact_product(bi, bi);
    // a conj(b)
    re01 = re01 + exact_product(ar, br) + exact_product(ai, bi);
    im01 = im01 + exact_product(ai, br) + -exact_product(ar, bi);
  }
  const DD tr = r00 + r11;
  const DD sq = r00 * r00 + r11 * r11 + (re01 * re01 + im01 * im01) + (re01 * re01 + im01 * im01);
  const DD gap = tr * tr + -sq;
  const DD tr2 = tr * tr;
  return (gap.hi + gap.lo) / (tr2.hi + tr2.lo);
}

std::pair<double, double> eigen_2x2(const ComplexMatrix &m) {
  const double p = m(0, 0).real();
  const double r = m(1, 1).real();
  const double half = 0.5 * (p + r);
  const double rad = std::sqrt(0.25 * (p - r) * (p - r) + std::norm(m(0, 1)));
  return {half + rad, half - rad};
}

double entropy_2x2(const ComplexMatrix &m) {
  const auto [hi, lo] = eigen_2x2(m);
  return entropy_of_spectrum({hi, lo});
}

// sigma_y (x) sigma_y in the computational basis.
const ComplexMatrix &spin_flip() {
  static const ComplexMatrix yy(4, {0, 0, 0, -1,  //
                                    0, 0, 1, 0,   //
                                    0, 1, 0, 0,   //
                                    -1, 0, 0, 0});
  return yy;
}

double clamp_discord(double d, const char *what) {
  if (d < -kDiscordClamp) {
    std::ostringstream os;
    os << what << " came out negative (" << d << ")";
    throw std::logic_error(os.str());
  }
  return std::max(d, 0.0);
}

}  // namespace

double concurrence_one_vs_rest(const PureState3Q &s, QubitLabel i) {
  const double four_det = 4.0 * marginal_det(s, i);
  const double purity_form = 2.0 * marginal_mixedness(s, i);
  if (std::abs(four_det - purity_form) > kIdentityTol) {
    std::ostringstream os;
    os << "one-vs-rest concurrence forms disagree: 4 det = " << four_det << ", 2(1 - Tr rho^2) = " << purity_form;
    throw std::logic_error(os.str());
  }
  return std::min(1.0, 2.0 * std::sqrt(marginal_det(s, i)));
}

double concurrence_one_vs_rest_purity(const PureState3Q &s, QubitLabel i) {
  return std::min(1.0, std::sqrt(std::max(2.0 * marginal_mixedness(s, i), 0.0)));
}

std::array<double, 3> concurrences_one_vs_rest(const PureState3Q &s) {
  return {concurrence_one_vs_rest(s, QubitLabel::A), concurrence_one_vs_rest(s, QubitLabel::B),
          concurrence_one_vs_rest(s, QubitLabel::C)};
}

double ggm(const PureState3Q &s) {
  double largest = 0.0;
  for (auto q : kAllQubits) largest = std::max(largest, eigen_2x2(marginal(s, q)).first);
  return std::clamp(1.0 - largest, 0.0, 0.5);
}

double negativity(const DensityMatrix &rho) {
  if (rho.dim() != 4) throw std::invalid_argument("negativity expects a two-qubit state");
  double neg = 0.0;
  for (double w : hermitian_eigenvalues(partial_transpose(rho, Party::First)))
    if (w < 0.0) neg -= w;
  return std::min(2.0 * neg, 1.0);
}

ThreePi three_pi(const PureState3Q &s) {
  using Q = QubitLabel;
  const auto c = concurrences_one_vs_rest(s);
  ThreePi out;
  Negativities &n = out.negativities;
  n.ab = negativity(reduced(s, {Q::A, Q::B}));
  n.ac = negativity(reduced(s, {Q::A, Q::C}));
  n.bc = negativity(reduced(s, {Q::B, Q::C}));
  // rho^{T_i} and rho^{T_j} are related by a full transpose: same spectrum.
  n.ba = n.ab;
  n.ca = n.ac;
  n.cb = n.bc;
  out.components = {c[0] * c[0] - n.ab * n.ab - n.ac * n.ac,  //
                    c[1] * c[1] - n.ba * n.ba - n.bc * n.bc,  //
                    c[2] * c[2] - n.ca * n.ca - n.cb * n.cb};
  out.value = std::clamp((out.components[0] + out.components[1] + out.components[2]) / 3.0, 0.0, 1.0);
  return out;
}

double gmc_rooted(const PureState3Q &s) {
  const auto c = concurrences_one_vs_rest(s);
  return *std::min_element(c.begin(), c.end());
}

double gmc_pure(const PureState3Q &s) {
  const double m = gmc_rooted(s);
  return m * m;
}

double concurrence_fill(const std::array<double, 3> &one_vs_rest) {
  std::array<double, 3> side{};
  for (std::size_t k = 0; k < 3; ++k) side[k] = one_vs_rest[k] * one_vs_rest[k];
  std::sort(side.begin(), side.end(), std::greater<>());
  const double a = side[0], b = side[1], c = side[2];
  // (16/3) Q (Q - a)(Q - b)(Q - c) in Kahan's cancellation-free ordering.
  std::array<double, 4> factor{a + (b + c), c - (a - b), c + (a - b), a + (b - c)};
  double prod = 1.0 / 3.0;
  for (double f : factor) {
    if (f < -kHeronClamp) {
      std::ostringstream os;
      os << "squared concurrences " << a << ", " << b << ", " << c << " violate the triangle inequality";
      throw std::domain_error(os.str());
    }
    prod *= std::max(f, 0.0);
  }
  return std::min(1.0, std::pow(prod, 0.25));
}

double concurrence_fill(const PureState3Q &s) { return concurrence_fill(concurrences_one_vs_rest(s)); }

double wootters_concurrence(const DensityMatrix &rho) {
  if (rho.dim() != 4) throw std::invalid_argument("Wootters concurrence expects a two-qubit state");
  const ComplexMatrix &yy = spin_flip();
  const ComplexMatrix tilde = yy * rho.matrix().conjugate() * yy;
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  ComplexMatrix r = root * tilde * root;
  // Product of Hermitian factors in this order is Hermitian up to round-off.
  r = 0.5 * (r + r.adjoint());
  auto ev = hermitian_eigenvalues(r, 1e-8);
  std::array<double, 4> s{};
  for (std::size_t k = 0; k < 4; ++k) s[k] = std::sqrt(std::max(ev[k], 0.0));
  std::sort(s.begin(), s.end(), std::greater<>());
  return std::clamp(s[0] - s[1] - s[2] - s[3], 0.0, 1.0);
}

double pair_concurrence(const PureState3Q &s, QubitLabel i, QubitLabel j) {
  if (i == j) throw SameParty("pair_concurrence needs two distinct qubits");
  const QubitLabel k = third_of(i, j);
  const std::array<std::array<cplx, 4>, 2> v{s.slice(k, 0), s.slice(k, 1)};
  const ComplexMatrix &yy = spin_flip();
  cplx tau[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      cplx t = 0.0;
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y)
          if (yy(x, y) != 0.0) t += v[a][x] * yy(x, y) * v[b][y];
      tau[a][b] = t;
    }
  const double frob2 = std::norm(tau[0][0]) + std::norm(tau[0][1]) + std::norm(tau[1][0]) + std::norm(tau[1][1]);
  const double abs_det = std::abs(tau[0][0] * tau[1][1] - tau[0][1] * tau[1][0]);
  // s1 - s2 from s1^2 + s2^2 = |tau|_F^2 and s1 s2 = |det tau|.
  return std::clamp(std::sqrt(std::max(frob2 - 2.0 * abs_det, 0.0)), 0.0, 1.0);
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(1.0 - c * c, 0.0))));
}

double eof(const DensityMatrix &rho) { return eof_from_concurrence(wootters_concurrence(rho)); }

double eof_pair(const PureState3Q &s, QubitLabel i, QubitLabel j) { return eof_from_concurrence(pair_concurrence(s, i, j)); }

double eof_one_vs_rest(const PureState3Q &s, QubitLabel i) { return eof_from_concurrence(concurrence_one_vs_rest(s, i)); }

double discord_kw(const PureState3Q &s, QubitLabel i, QubitLabel measured) {
  if (i == measured) throw SameParty("discord needs two distinct parties");
  const QubitLabel j = third_of(i, measured);
  const double conditional = von_neumann_entropy(reduced(s, {i, measured})) - entropy_2x2(marginal(s, measured));
  return clamp_discord(eof_pair(s, i, j) - conditional, "Koashi-Winter discord");
}

double discord_one_vs_rest(const PureState3Q &s, QubitLabel i) { return entropy_2x2(marginal(s, i)); }

double discord_brute(const DensityMatrix &rho, Party measured, int n_grid) {
  if (rho.dim() != 4) throw std::invalid_argument("discord_brute expects a two-qubit state");
  if (n_grid < 32) throw std::invalid_argument("discord_brute needs n_grid >= 32");
  const ComplexMatrix m = measured == Party::Second ? rho.matrix() : swap_qubits(rho.matrix());

  // Average entropy of the unmeasured qubit after a projective measurement
  // on the second one along the Bloch direction (polar, azimuth).
  auto conditional_entropy = [&m](double polar, double azimuth) {
    const cplx up[2] = {std::cos(0.5 * polar), std::polar(std::sin(0.5 * polar), azimuth)};
    const cplx down[2] = {-std::conj(up[1]), std::conj(up[0])};
    double total = 0.0;
    for (const cplx *n : {up, down}) {
      ComplexMatrix post(2);
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t a2 = 0; a2 < 2; ++a2) {
          cplx v = 0.0;
          for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t b2 = 0; b2 < 2; ++b2) v += std::conj(n[b]) * m(2 * a + b, 2 * a2 + b2) * n[b2];
          post(a, a2) = v;
        }
      const double p = post.trace().real();
      if (p <= 1e-15) continue;
      post *= 1.0 / p;
      total += p * entropy_2x2(post);
    }
    return total;
  };

  double best = conditional_entropy(0.0, 0.0);
  double best_polar = 0.0, best_azimuth = 0.0;
  for (int i = 0; i < n_grid; ++i) {
    const double polar = std::numbers::pi * i / (n_grid - 1);
    for (int k = 0; k < n_grid; ++k) {
      const double azimuth = 2.0 * std::numbers::pi * k / n_grid;
      const double v = conditional_entropy(polar, azimuth);
      if (v < best) {
        best = v;
        best_polar = polar;
        best_azimuth = azimuth;
      }
    }
  }

  NelderMeadOptions opt;
  opt.step = {std::numbers::pi / n_grid, 2.0 * std::numbers::pi / n_grid};
  opt.lower = {0.0, best_azimuth - std::numbers::pi};
  opt.upper = {std::numbers::pi, best_azimuth + std::numbers::pi};
  opt.xtol = 1e-9;
  const auto refined = nelder_mead_minimize(
      [&](std::span<const double> x) { return conditional_entropy(x[0], x[1]); }, {best_polar, best_azimuth}, opt);
  best = std::min(best, refined.value);

  const double s_measured = entropy_2x2(partial_trace_positions(m, 0b01u));
  const double s_joint = von_neumann_entropy(DensityMatrix::trusted(m));
  return std::max(0.0, s_measured - s_joint + best);
}

MeasureReport measure_report(const PureState3Q &s) {
  MeasureReport r;
  r.c_one_vs_rest = concurrences_one_vs_rest(s);
  r.ggm = ggm(s);
  const ThreePi tp = three_pi(s);
  r.three_pi = tp.value;
  r.pi_components = tp.components;
  r.negativities = tp.negativities;
  r.gmc = gmc_pure(s);
  r.gmc_rooted = gmc_rooted(s);
  r.fill = concurrence_fill(r.c_one_vs_rest);
  return r;
}

}  // namespace bqc
