#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include <nlohmann/json.hpp>

#include "patchcap/errors.hpp"
#include "patchcap/geometry.hpp"

using namespace patchcap;

namespace {

const Reactivity kOne(1.0);

UnitVector3 unit(double x, double y, double z) { return UnitVector3::normalized({x, y, z}); }

}  // namespace

TEST(UnitVector, NormalizesAndChecks) {
  const auto u = unit(3, 4, 0);
  EXPECT_NEAR(u.vec().norm(), 1.0, 1e-15);
  EXPECT_THROW(UnitVector3::normalized({0, 0, 0}), DomainError);
  EXPECT_THROW(UnitVector3::checked({1.0 + 1e-9, 0, 0}), DomainError);
  EXPECT_NO_THROW(UnitVector3::checked({1.0 + 1e-13, 0, 0}));
}

TEST(Layout, OctahedronGeometry) {
  const auto l = layout_octahedron(0.2, kOne);
  ASSERT_EQ(l.size(), 6u);
  double min_chord = 10.0;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      min_chord = std::min(min_chord, distance(l.center(i).vec(), l.center(j).vec()));
    }
  }
  EXPECT_NEAR(min_chord, std::sqrt(2.0), 1e-15);
  EXPECT_THROW(layout_octahedron(0.8, kOne), ConfigurationError);
  EXPECT_NEAR(layout_octahedron(0.3, Reactivity::infinite()).area_fraction(), 0.135, 1e-15);
}

TEST(Layout, OctahedronRadiusBound) {
  const double bound = 2.0 * std::sin(std::numbers::pi / 8.0);
  EXPECT_NO_THROW(layout_octahedron(bound - 1e-9, kOne));
  EXPECT_THROW(layout_octahedron(bound, kOne), ConfigurationError);
}

TEST(Layout, IcosahedronCoverage) {
  const auto l = layout_icosahedron(0.2, kOne);
  ASSERT_EQ(l.size(), 12u);
  EXPECT_NEAR(l.area_fraction(), 0.12, 1e-15);
  EXPECT_NEAR(layout_icosahedron(0.4, kOne).area_fraction(), 0.48, 1e-15);
  EXPECT_THROW(layout_icosahedron(0.0, kOne), ConfigurationError);
  for (const auto& c : l.centers()) EXPECT_NEAR(c.vec().norm(), 1.0, 1e-15);
}

TEST(Layout, RejectsBadInput) {
  EXPECT_THROW(PatchLayout({}, {}, {}), ConfigurationError);
  EXPECT_THROW(PatchLayout({unit(0, 0, 1)}, {0.1, 0.2}, {kOne}), ConfigurationError);
  EXPECT_THROW(PatchLayout({unit(0, 0, 1)}, {-0.1}, {kOne}), ConfigurationError);
  EXPECT_THROW(PatchLayout({unit(0, 0, 1)}, {2.5}, {kOne}), ConfigurationError);
  // Whole sphere as one patch is allowed.
  EXPECT_NO_THROW(PatchLayout({unit(0, 0, 1)}, {2.0}, {kOne}));
}

TEST(Layout, TouchingCapsAreRejected) {
  // Two caps of chord radius r at angle 2 * (2 asin(r/2)) touch exactly.
  const double r = 0.3;
  const double half = 2.0 * std::asin(r / 2.0);
  const auto a = unit(0, 0, 1);
  const auto touching = unit(std::sin(2 * half), 0, std::cos(2 * half));
  const auto apart = unit(std::sin(2 * half + 1e-6), 0, std::cos(2 * half + 1e-6));
  EXPECT_THROW(PatchLayout({a, touching}, {r, r}, {kOne, kOne}), ConfigurationError);
  EXPECT_NO_THROW(PatchLayout({a, apart}, {r, r}, {kOne, kOne}));
}

TEST(Layout, RandomIsReproducible) {
  const auto a = layout_random_uniform(12, 0.2, kOne, 7);
  const auto b = layout_random_uniform(12, 0.2, kOne, 7);
  const auto c = layout_random_uniform(12, 0.2, kOne, 8);
  EXPECT_EQ(a.centers(), b.centers());
  EXPECT_NE(a.centers(), c.centers());
  EXPECT_NO_THROW(layout_random_uniform(1, 0.5, kOne, 3));
  EXPECT_THROW(layout_random_uniform(2, 1.5, kOne, 3, 200), PackingError);
}

TEST(Layout, Fibonacci) {
  const auto one = layout_fibonacci(1, 0.1, kOne);
  EXPECT_EQ(one.center(0).vec(), Vec3(0, 0, 1));
  const auto l = layout_fibonacci(100, 0.01, kOne);
  EXPECT_EQ(l.size(), 100u);
  EXPECT_NEAR(l.center(0).z(), 1.0, 1e-15);
  EXPECT_NEAR(l.center(99).z(), -1.0, 1e-15);
}

TEST(Layout, ContainmentIsStrict) {
  const auto l = layout_single(0.2, kOne);
  EXPECT_EQ(l.containing_patch({0, 0, 1}), 0);
  EXPECT_EQ(l.containing_patch({0, 0, -1}), -1);
  const double angle = angular_radius(0.2);
  EXPECT_EQ(l.containing_patch({std::sin(angle + 1e-9), 0, std::cos(angle + 1e-9)}), -1);
  EXPECT_EQ(l.containing_patch({std::sin(angle - 1e-9), 0, std::cos(angle - 1e-9)}), 0);
}

TEST(Greens, ReferenceValues) {
  EXPECT_NEAR(greens_value(unit(0, 0, 1), unit(0, 0, -1)), 0.0244185715, 1e-10);
  EXPECT_NEAR(greens_value(unit(1, 0, 0), unit(0, 1, 0)), 0.0424020580, 1e-10);
  EXPECT_THROW(greens_value(unit(1, 0, 0), unit(1, 0, 0)), DomainError);
}

TEST(Greens, MatrixStructure) {
  const auto g1 = greens_matrix(layout_single(0.1, kOne));
  EXPECT_EQ(g1.size(), 1u);
  EXPECT_EQ(g1(0, 0), 0.0);

  const auto l = layout_random_uniform(9, 0.1, kOne, 11);
  const auto g = greens_matrix(l);
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_EQ(g(i, i), 0.0);
    for (std::size_t j = 0; j < 9; ++j) {
      EXPECT_EQ(g(i, j), g(j, i));
      if (i != j) EXPECT_GT(g(i, j), 0.0);
    }
  }

  std::set<long long> distinct;
  const auto go = greens_matrix(layout_octahedron(0.2, kOne));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) distinct.insert(std::llround(go(i, j) * 1e12));
  }
  EXPECT_EQ(distinct.size(), 2u);
}

TEST(Greens, RelabelingPermutesMatrix) {
  const auto l = layout_random_uniform(5, 0.1, kOne, 4);
  std::vector<UnitVector3> c(l.centers().rbegin(), l.centers().rend());
  const PatchLayout r(c, l.radii(), l.kappas());
  const auto g = greens_matrix(l), h = greens_matrix(r);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(g(i, j), h(4 - i, 4 - j));
  }
}

TEST(Energy, ReferenceValues) {
  EXPECT_EQ(interaction_energy(layout_single(0.3, kOne)), 0.0);
  EXPECT_NEAR(interaction_energy(layout_octahedron(0.2, kOne)), 3.6573190813, 1e-9);
  EXPECT_NEAR(interaction_energy(layout_icosahedron(0.2, kOne)), 19.4448609954, 1e-9);
  EXPECT_NEAR(h_asymptotic(1), 0.0727, 1e-12);
  EXPECT_NEAR(h_asymptotic(4), 1.2747471806, 1e-9);
}

TEST(Energy, EqualsScaledGreensSum) {
  const auto l = layout_random_uniform(10, 0.1, kOne, 21);
  const auto g = greens_matrix(l);
  double s = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) s += g(i, j);
  }
  EXPECT_NEAR(interaction_energy(l), 2.0 * std::numbers::pi * s, 1e-10);
}

TEST(Energy, PairOfSingletons) {
  const PatchLayout l({unit(0.3, 0.1, 1), unit(-0.2, 0.4, -1)}, {0.1, 0.1}, {kOne, kOne});
  const double s = distance(l.center(0).vec(), l.center(1).vec());
  EXPECT_NEAR(interaction_energy(l), 1.0 / s - 0.5 * std::log(1.0 + 2.0 / s), 1e-14);
}

TEST(Energy, RotationInvariance) {
  const auto l = layout_random_uniform(15, 0.1, kOne, 5);
  const auto r = l.rotated(Rotation3::about_axis({0.3, -1.2, 0.7}, 1.234));
  EXPECT_NEAR(interaction_energy(l), interaction_energy(r), 1e-10);
  const auto g = greens_matrix(l), h = greens_matrix(r);
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) EXPECT_NEAR(g(i, j), h(i, j), 1e-10);
  }
}

TEST(Energy, AsymptoticTrendOnFibonacci) {
  double prev = 1.0;
  for (std::size_t n : {50u, 100u, 200u, 500u}) {
    const double h = interaction_energy(layout_fibonacci(n, 1e-3, kOne));
    const double rel = std::abs(h - h_asymptotic(n)) / h;
    EXPECT_LT(rel, prev) << "n=" << n;
    prev = rel;
  }
  EXPECT_LE(prev, 0.01);
}

TEST(LayoutJson, RoundTrip) {
  const PatchLayout l({unit(0, 0, 1), unit(1, 0, 0)}, {0.1, 0.2},
                      {Reactivity(2.5), Reactivity::infinite()});
  const auto doc = layout_to_json(l);
  EXPECT_EQ(doc["kappas"][1], "inf");
  const auto back = layout_from_json(doc);
  EXPECT_EQ(back.centers(), l.centers());
  EXPECT_EQ(back.radii(), l.radii());
  EXPECT_TRUE(back.kappa(1).is_infinite());
  EXPECT_EQ(back.kappa(0).value(), 2.5);
  EXPECT_THROW(layout_from_json(nlohmann::json::parse(R"({"centers": [[1,0]], "radii": [0.1], "kappas": [1]})")),
               SpecError);
}
