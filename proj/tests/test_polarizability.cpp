#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "thermofriction/errors.hpp"
#include "thermofriction/polarizability.hpp"
#include "thermofriction/units.hpp"

using namespace thermofriction;
using std::numbers::pi;
using test::bundled_atom;
using test::rel_diff;

namespace {

const AtomSpecies& toy() {
  static const AtomSpecies s("T", "g", 1.0, 1, {{0.5, 1.0}});
  return s;
}

}  // namespace

TEST_CASE("alpha at zero frequency is the static polarizability") {
  for (const char* name : {"h_1s", "h_2s", "he_1s1", "he_2s3"}) {
    const auto s = bundled_atom(name);
    CHECK(alpha(s, 0.0) == doctest::Approx(static_polarizability(s)).epsilon(1e-14));
  }
}

TEST_CASE("two-level toy atom") {
  // f / (dE^2 - w^2) = 1 / (0.25 - 0.09)
  CHECK(alpha(toy(), 0.3) == doctest::Approx(6.25).epsilon(1e-14));
}

TEST_CASE("high-frequency asymptote follows the TRK sum") {
  const auto h = bundled_atom("h_1s");
  const double w = 100.0;
  CHECK(rel_diff(alpha(h, w), -trk_sum(h) / (w * w)) < 1e-3);
}

TEST_CASE("alpha is even in omega") {
  const auto& lines = bundled_atom("he_2s3").lines();
  for (double w : {0.001, 0.02, 0.3, 2.0}) {
    CHECK(sum_over_states(lines, w) == sum_over_states(lines, -w));
  }
}

TEST_CASE("pole proximity is refused without broadening") {
  const auto h = bundled_atom("h_1s");
  CHECK_THROWS_AS(alpha(h, 0.375), PoleProximityError);
  try {
    im_alpha_oneloop(h, 0.375 + 1e-10);
    FAIL("expected a pole-proximity error");
  } catch (const PoleProximityError& e) {
    CHECK(e.omega() == doctest::Approx(0.375));
  }
  const auto policy = BroadeningPolicy::lorentzian();
  CHECK(std::isfinite(alpha(h, 0.375, policy)));
  CHECK_THROWS_AS(BroadeningPolicy::lorentzian(0.0), DomainError);
  CHECK_THROWS_AS(alpha(h, -1.0), DomainError);
}

TEST_CASE("lorentzian broadening reproduces the bare sum away from resonances") {
  const auto h = bundled_atom("h_1s");
  const auto policy = BroadeningPolicy::lorentzian(1e-6);
  CHECK(rel_diff(alpha(h, 0.1, policy), alpha(h, 0.1)) < 1e-9);
}

TEST_CASE("one-loop density") {
  const auto h = bundled_atom("h_1s");
  CHECK(im_alpha_oneloop(h, 0.0) == 0.0);

  // alpha == 1 at omega == 1 gives (2/3) alpha_fs^3.
  const double afs = 7.2973525693e-3;
  CHECK(constant_alpha_measure(1.0).smooth(1.0) == doctest::Approx(2.0 / 3.0 * afs * afs * afs).epsilon(1e-12));
  CHECK(constant_alpha_measure(1.0).smooth(1.0) == doctest::Approx(2.590e-7).epsilon(1e-3));

  const double limit = 2.0 / 3.0 * 4.5 * 4.5 * afs * afs * afs;
  for (double w : {1e-6, 1e-5, 1e-4, 1e-3}) {
    CHECK(rel_diff(im_alpha_oneloop(h, w) / (w * w * w), limit) < 1e-3);
  }
}

TEST_CASE("low-frequency correction to the one-loop density is second order") {
  const auto h = bundled_atom("h_1s");
  const double a0 = static_polarizability(h);
  const double leading = 2.0 / 3.0 * a0 * a0 / std::pow(kSpeedOfLightAu, 3);
  // Least-squares slope of log(correction) against log(omega) below half the
  // first resonance.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (double w = 0.005; w <= 0.15; w *= 1.25, ++n) {
    const double corr = im_alpha_oneloop(h, w) / (leading * w * w * w) - 1.0;
    const double x = std::log(w);
    const double y = std::log(corr);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("resonant lines") {
  const auto toy_lines = resonant_lines(toy());
  REQUIRE(toy_lines.size() == 1);
  CHECK(toy_lines[0].omega == doctest::Approx(0.5));
  CHECK(toy_lines[0].weight == doctest::Approx(pi));

  const AtomSpecies lyman("H", "1s", 1.0, 1, {{0.375, 0.4162}});
  CHECK(resonant_lines(lyman)[0].weight == doctest::Approx(1.7435).epsilon(1e-4));

  const AtomSpecies excited("X", "e", 1.0, 1, {{-0.2, -0.1}, {0.5, 1.1}});
  const auto lines = resonant_lines(excited);
  CHECK(lines[0].omega == doctest::Approx(0.2));
  CHECK(lines[0].weight == doctest::Approx(pi / 4));

  const auto h = bundled_atom("h_1s");
  CHECK(resonant_lines(h).size() == 20);
  CHECK(resonant_lines(h, true).size() == static_cast<std::size_t>(h.lines().size()));
  for (const auto& l : resonant_lines(h, true)) CHECK(l.weight > 0.0);
}

TEST_CASE("measure modes") {
  const auto h = bundled_atom("h_1s");
  const auto tree = im_alpha_measure(h, {}, EvaluationMode::tree_only);
  const auto loop = im_alpha_measure(h, {}, EvaluationMode::oneloop_only);
  const auto total = im_alpha_measure(h, {}, EvaluationMode::total);
  CHECK(tree.smooth(0.1) == 0.0);
  CHECK(loop.delta_lines.empty());
  CHECK(total.delta_lines.size() == tree.delta_lines.size());

  // total == tree + one-loop pointwise at random species and frequencies.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const char* names[] = {"h_1s", "h_2s", "he_1s1", "he_2s3"};
  for (int i = 0; i < 30; ++i) {
    const auto s = bundled_atom(names[i % 4]);
    const double w = 0.9 * lowest_resonance(s) * unit(rng);
    const auto m_total = im_alpha_measure(s);
    const auto m_tree = im_alpha_measure(s, {}, EvaluationMode::tree_only);
    const auto m_loop = im_alpha_measure(s, {}, EvaluationMode::oneloop_only);
    CHECK(m_total.smooth(w) == m_tree.smooth(w) + m_loop.smooth(w));
    REQUIRE(m_total.delta_lines.size() == m_tree.delta_lines.size() + m_loop.delta_lines.size());
    for (std::size_t j = 0; j < m_total.delta_lines.size(); ++j) {
      CHECK(m_total.delta_lines[j].weight == m_tree.delta_lines[j].weight);
    }
  }
}

TEST_CASE("integrating the toy measure picks up the line weight plus the smooth part") {
  const auto policy = BroadeningPolicy::lorentzian(1e-3);
  const auto m = im_alpha_measure(toy(), policy);
  const auto one = [](double) { return 1.0; };
  const double total = m.integrate(one, 0.4, 0.6);

  // Composite Simpson oracle for the smooth part on a grid far finer than the
  // 1e-3 linewidth.
  constexpr int n = 2'000'000;
  const double h = 0.2 / n;
  double simpson = m.smooth(0.4) + m.smooth(0.6);
  for (int i = 1; i < n; ++i) simpson += (i % 2 ? 4.0 : 2.0) * m.smooth(0.4 + i * h);
  simpson *= h / 3.0;

  CHECK(simpson > 0.0);
  CHECK(simpson < 0.1 * pi);
  CHECK(rel_diff(total, pi + simpson) < 1e-6);
}

TEST_CASE("the measure is non-negative against non-negative test functions") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto he = bundled_atom("he_2s3");
  const auto m = im_alpha_measure(he, BroadeningPolicy::lorentzian(1e-4));
  for (int i = 0; i < 10; ++i) {
    const double centre = 0.2 * unit(rng);
    const double width = 0.001 + 0.05 * unit(rng);
    const auto g = [=](double w) { return std::exp(-std::pow((w - centre) / width, 2)); };
    CHECK(m.integrate(g, 0.0, 0.2, 1e-8) >= 0.0);
  }
}
