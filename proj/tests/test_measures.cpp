#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bqc/measures.hpp"
#include "oracles.hpp"

using namespace bqc;
using std::numbers::pi;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

PureState3Q ghz() { return PureState3Q({kH, 0, 0, 0, 0, 0, 0, kH}); }
PureState3Q w_state() {
  const double t = 1.0 / std::sqrt(3.0);
  return PureState3Q({0, t, t, 0, t, 0, 0, 0});
}
PureState3Q product() { return PureState3Q::normalized({1.0, 2.0, cplx(0, 1), cplx(0, 2), 2.0, 4.0, cplx(0, 2), cplx(0, 4)}); }
// (|00> + |11>)/sqrt2 on AB, |0> on C.
PureState3Q biseparable() { return PureState3Q({kH, 0, 0, 0, 0, 0, kH, 0}); }

ComplexMatrix bell() { return ComplexMatrix::outer({kH, 0.0, 0.0, kH}); }

ComplexMatrix random_unitary(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
  const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
  const cplx e1 = std::polar(1.0, b), e2 = std::polar(1.0, c), ph = std::polar(1.0, d);
  return ComplexMatrix(2, {ph * e1 * std::cos(a), ph * e2 * std::sin(a), -ph * std::conj(e2) * std::sin(a),
                           ph * std::conj(e1) * std::cos(a)});
}

PureState3Q scattering(const oracle::Point &p) { return final_state({p.theta, p.eta, p.beta, p.mu}); }

}  // namespace

TEST_SUITE("measures") {
  TEST_CASE("GHZ values") {
    const auto s = ghz();
    for (auto q : kAllQubits) {
      CHECK(std::abs(concurrence_one_vs_rest(s, q) - 1.0) < 1e-12);
      CHECK(std::abs(eof_one_vs_rest(s, q) - 1.0) < 1e-12);
    }
    const auto r = measure_report(s);
    CHECK(std::abs(r.ggm - 0.5) < 1e-12);
    CHECK(std::abs(r.fill - 1.0) < 1e-12);
    CHECK(std::abs(r.gmc - 1.0) < 1e-12);
    CHECK(std::abs(r.gmc_rooted - 1.0) < 1e-12);
    CHECK(std::abs(r.three_pi - 1.0) < 1e-12);
    for (double pi_i : r.pi_components) CHECK(std::abs(pi_i - 1.0) < 1e-12);
    CHECK(r.negativities.ab < 1e-12);
  }

  TEST_CASE("W values") {
    const auto s = w_state();
    for (auto q : kAllQubits) {
      CHECK(std::abs(concurrence_one_vs_rest(s, q) - 2.0 * std::sqrt(2.0) / 3.0) < 1e-12);
      CHECK(std::abs(eof_one_vs_rest(s, q) - 0.9182958340544895) < 1e-12);
    }
    const auto r = measure_report(s);
    CHECK(std::abs(r.ggm - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(r.fill - 8.0 / 9.0) < 1e-12);
    CHECK(std::abs(r.gmc - 8.0 / 9.0) < 1e-12);
  }

  TEST_CASE("product and biseparable states carry no tripartite entanglement") {
    const auto r = measure_report(product());
    CHECK(r.ggm < 1e-12);
    CHECK(r.fill < 1e-12);
    CHECK(r.gmc < 1e-12);
    CHECK(r.three_pi < 1e-12);
    for (auto q : kAllQubits) CHECK(concurrence_one_vs_rest(product(), q) < 1e-7);

    const auto b = measure_report(biseparable());
    CHECK(b.gmc < 1e-12);
    CHECK(b.fill < 1e-12);
    CHECK(b.ggm < 1e-12);
    CHECK(b.three_pi < 1e-12);
  }

  TEST_CASE("negativity") {
    CHECK(std::abs(negativity(DensityMatrix(bell())) - 1.0) < 1e-12);
    CHECK(negativity(DensityMatrix(ComplexMatrix::diagonal({0.1, 0.2, 0.3, 0.4}))) < 1e-14);
    const ComplexMatrix pure = ComplexMatrix::outer({std::sqrt(0.9), 0.0, 0.0, std::sqrt(0.1)});
    CHECK(std::abs(negativity(DensityMatrix(pure)) - 0.6) < 1e-12);
  }

  TEST_CASE("Wootters concurrence") {
    CHECK(std::abs(wootters_concurrence(DensityMatrix(bell())) - 1.0) < 1e-7);
    CHECK(wootters_concurrence(DensityMatrix(ComplexMatrix::diagonal({0.25, 0.25, 0.25, 0.25}))) < 1e-12);
    auto werner = [](double p) {
      ComplexMatrix m = p * bell() + (1.0 - p) * 0.25 * ComplexMatrix::identity(4);
      return DensityMatrix(m);
    };
    CHECK(std::abs(wootters_concurrence(werner(0.8)) - 0.7) < 1e-10);
    CHECK(wootters_concurrence(werner(1.0 / 3.0)) < 1e-10);
    CHECK(std::abs(wootters_concurrence(werner(1.0)) - 1.0) < 1e-7);
  }

  TEST_CASE("pairwise concurrence routes agree") {
    oracle::Sampler rng(201);
    using Q = QubitLabel;
    for (int t = 0; t < 300; ++t) {
      const auto s = scattering(rng.next());
      for (auto [i, j] : {std::pair{Q::A, Q::B}, {Q::A, Q::C}, {Q::B, Q::C}}) {
        const double fast = pair_concurrence(s, i, j);
        CHECK(std::abs(fast - pair_concurrence(s, j, i)) < 1e-14);
        CHECK(std::abs(fast - wootters_concurrence(reduced(s, {i, j}))) < 1e-6);
      }
    }
    CHECK_THROWS_AS(pair_concurrence(ghz(), Q::A, Q::A), SameParty);
  }

  TEST_CASE("entanglement of formation") {
    CHECK(eof_from_concurrence(1.0) == doctest::Approx(1.0));
    CHECK(eof_from_concurrence(0.0) == 0.0);
    CHECK(std::abs(eof_from_concurrence(0.6) - 0.4689955935892812) < 1e-14);
    CHECK(std::abs(binary_entropy(0.25) - oracle::binary_entropy(0.25)) < 1e-15);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    double prev = -1.0;
    for (int k = 0; k <= 100; ++k) {
      const double e = eof_from_concurrence(k / 100.0);
      CHECK(e >= prev);
      prev = e;
    }
    CHECK(std::abs(eof(DensityMatrix(bell())) - 1.0) < 1e-6);
  }

  TEST_CASE("one-vs-rest concurrence forms agree") {
    oracle::Sampler rng(203);
    for (int t = 0; t < 1000; ++t) {
      const auto s = scattering(rng.next());
      for (auto q : kAllQubits) CHECK(std::abs(concurrence_one_vs_rest(s, q) - concurrence_one_vs_rest_purity(s, q)) < 1e-10);
    }
  }

  TEST_CASE("GMC is the smallest one-vs-rest concurrence") {
    oracle::Sampler rng(205);
    for (int t = 0; t < 300; ++t) {
      const auto s = scattering(rng.next());
      const auto c = concurrences_one_vs_rest(s);
      const double m = *std::min_element(c.begin(), c.end());
      CHECK(std::abs(gmc_rooted(s) - m) < 1e-12);
      CHECK(std::abs(gmc_pure(s) - m * m) < 1e-12);
    }
  }

  TEST_CASE("report fields stay in range and the negativity residuals are monogamous") {
    oracle::Sampler rng(207);
    for (int t = 0; t < 1000; ++t) {
      const auto r = measure_report(scattering(rng.next()));
      for (double v : {r.ggm, r.three_pi, r.gmc, r.gmc_rooted, r.fill}) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
      CHECK(r.ggm <= 0.5);
      for (double p : r.pi_components) CHECK(p >= -1e-9);
      CHECK(r.gmc >= r.three_pi - 1e-9);
    }
  }

  TEST_CASE("measures vanish when the spectator factorizes") {
    for (double th : {0.2, 1.0, 2.21, pi})
      for (double mu : {0.01, 0.913, 1e3})
        for (double et : {0.0, pi / 2}) {
          const auto r = measure_report(final_state({th, et, 0.0, mu}));
          CHECK(r.ggm < 1e-8);
          CHECK(r.three_pi < 1e-8);
          CHECK(r.gmc < 1e-8);
          CHECK(r.fill < 1e-8);
        }
  }

  TEST_CASE("local unitary invariance") {
    std::mt19937_64 rng(209);
    oracle::Sampler pts(211);
    for (int t = 0; t < 50; ++t) {
      const auto s = scattering(pts.next());
      const auto u = s.apply_local(random_unitary(rng), random_unitary(rng), random_unitary(rng));
      const auto a = measure_report(s), b = measure_report(u);
      CHECK(std::abs(a.ggm - b.ggm) < 1e-9);
      CHECK(std::abs(a.three_pi - b.three_pi) < 1e-9);
      CHECK(std::abs(a.gmc - b.gmc) < 1e-9);
      CHECK(std::abs(a.fill - b.fill) < 1e-9);
    }
  }

  TEST_CASE("fill of explicit triangles") {
    CHECK(concurrence_fill(std::array<double, 3>{1.0, 1.0, 0.0}) == 0.0);
    CHECK(std::abs(concurrence_fill(std::array<double, 3>{1.0, 1.0, 1.0}) - 1.0) < 1e-15);
    CHECK_THROWS_AS(concurrence_fill(std::array<double, 3>{1.0, 0.1, 0.1}), std::domain_error);
    // Squared concurrences 3s, 4s, 5s against the textbook semiperimeter form.
    const double s = 0.2;
    const std::array<double, 3> c{std::sqrt(3 * s), std::sqrt(4 * s), std::sqrt(5 * s)};
    const double a = 3 * s, b = 4 * s, cc = 5 * s, q = 0.5 * (a + b + cc);
    const double direct = std::pow(16.0 / 3.0 * q * (q - a) * (q - b) * (q - cc), 0.25);
    CHECK(std::abs(concurrence_fill(c) - direct) < 1e-14);
  }

  TEST_CASE("Koashi-Winter discord") {
    using Q = QubitLabel;
    for (auto i : kAllQubits)
      for (auto k : kAllQubits) {
        if (i == k) {
          CHECK_THROWS_AS(discord_kw(product(), i, k), SameParty);
          continue;
        }
        CHECK(discord_kw(product(), i, k) < 1e-7);
        CHECK(discord_kw(ghz(), i, k) < 1e-12);
      }
    const auto s = final_state({1.7, 0.9, 0.3, 0.6});
    CHECK(std::abs(discord_one_vs_rest(s, Q::A) - von_neumann_entropy(reduced(s, {Q::A}))) < 1e-12);
    CHECK(std::abs(discord_one_vs_rest(ghz(), Q::A) - 1.0) < 1e-12);
  }

  TEST_CASE("brute-force discord") {
    const ComplexMatrix prod = kron(ComplexMatrix::outer({0.6, 0.8}), ComplexMatrix::outer({kH, cplx(0, kH)}));
    CHECK(discord_brute(DensityMatrix(prod)) < 1e-6);
    CHECK(std::abs(discord_brute(DensityMatrix(bell())) - 1.0) < 1e-4);
    CHECK_THROWS_AS(discord_brute(DensityMatrix(bell()), Party::Second, 16), std::invalid_argument);

    using Q = QubitLabel;
    const auto s = final_state({pi / 2, pi / 4, 0.0, 1.0});
    CHECK(std::abs(discord_brute(reduced(s, {Q::A, Q::B})) - discord_kw(s, Q::A, Q::B)) < 2e-3);
    CHECK(std::abs(discord_brute(reduced(s, {Q::A, Q::B}), Party::First) - discord_kw(s, Q::B, Q::A)) < 2e-3);
  }

  TEST_CASE("discord oracles agree on a 4x4x3 grid") {
    using Q = QubitLabel;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (double mu : {0.3, 1.0, 10.0}) {
          const double th = i == 3 ? pi : 0.3 + (pi - 0.3) * i / 3.0, et = 0.1 + 1.3 * j / 3.0;
          const auto s = final_state({th, et, 0.7, mu});
          const double kw = discord_kw(s, Q::A, Q::B);
          CHECK(kw >= 0.0);
          CHECK(std::abs(discord_brute(reduced(s, {Q::A, Q::B})) - kw) < 2e-3);
          CHECK(std::abs(discord_brute(reduced(s, {Q::A, Q::C})) - discord_kw(s, Q::A, Q::C)) < 2e-3);
        }
  }

  TEST_CASE("reference point values") {
    const auto r = measure_report(final_state({2.21, 1.42, 0.0, 0.913}));
    CHECK(r.fill == doctest::Approx(0.902).epsilon(0.005 / 0.902));
    CHECK(r.three_pi == doctest::Approx(0.648).epsilon(0.005 / 0.648));
  }
}
