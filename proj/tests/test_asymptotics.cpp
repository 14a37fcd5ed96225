#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "patchcap/asymptotics.hpp"
#include "patchcap/errors.hpp"

using namespace patchcap;

namespace {

constexpr double kPi = std::numbers::pi;

struct IcosaRow {
  double kappa;
  double ct;
  double keff;
  double keff_hom;
};

// Sigmoid model, icosahedron, eps = 0.2; values from an independent script.
constexpr IcosaRow kIcosa[] = {
    {0.01, 0.005941658437635748, 0.005977172756578076, 0.005977480572401914},
    {0.1, 0.054633849385955495, 0.057791205397473906, 0.05781999374611333},
    {1.0, 0.3024764705026059, 0.4336433936795761, 0.4352695713843327},
    {10.0, 0.5521894137723644, 1.2330870031993169, 1.246327456167338},
    {INFINITY, 0.6068791920585762, 1.5437473158352966, 1.5645559839553558},
};

Reactivity R(double k) { return std::isinf(k) ? Reactivity::infinite() : Reactivity(k); }

}  // namespace

TEST(ThreeTerm, SinglePatch) {
  const auto b = capacitance_three_term(layout_single(0.1, Reactivity::infinite()));
  EXPECT_NEAR(b.CT, 0.0353275891, 1e-10);
  EXPECT_NEAR(keff_from_ct(b.CT), 0.0366213325, 1e-10);
  EXPECT_EQ(b.interaction, 0.0);
  EXPECT_NEAR(b.c_bar, 2.0 / kPi, 1e-15);
  EXPECT_NEAR(b.inv_CT * b.CT, 1.0, 1e-15);
}

TEST(ThreeTerm, Icosahedron) {
  for (const auto& row : kIcosa) {
    const auto b = capacitance_three_term(layout_icosahedron(0.2, R(row.kappa)));
    EXPECT_NEAR(b.CT, row.ct, 1e-12 * row.ct) << row.kappa;
    EXPECT_NEAR(keff_from_ct(b.CT), row.keff, 1e-11 * row.keff) << row.kappa;
  }
}

TEST(ThreeTerm, Octahedron) {
  const auto b = capacitance_three_term(layout_octahedron(0.3, Reactivity::infinite()));
  EXPECT_NEAR(b.CT, 0.5504909062311331, 1e-12);
  EXPECT_NEAR(keff_from_ct(b.CT), 1.22464909800955, 1e-11);
}

TEST(ThreeTerm, BreakdownAddsUp) {
  const auto b = capacitance_three_term(layout_random_uniform(7, 0.15, Reactivity(2.0), 3));
  const double bracket = 1.0 + b.log_term + b.order_eps_term;
  EXPECT_NEAR(b.inv_CT, 2.0 / (b.eps * b.c_bar) * bracket, 1e-12 * b.inv_CT);
}

TEST(ThreeTerm, RotationInvariant) {
  const auto l = layout_random_uniform(9, 0.1, Reactivity(5.0), 17);
  const auto r = l.rotated(Rotation3::about_axis({1, 2, 3}, 0.7));
  EXPECT_NEAR(capacitance_three_term(l).CT, capacitance_three_term(r).CT, 1e-13);
}

TEST(ThreeTerm, ZeroReactivity) {
  EXPECT_THROW(capacitance_three_term(layout_single(0.1, Reactivity::zero())), DomainError);
}

TEST(ThreeTerm, MonotoneInKappaAndRadius) {
  double prev = 0.0;
  for (double k : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    const double ct = capacitance_three_term(layout_icosahedron(0.2, Reactivity(k))).CT;
    EXPECT_GT(ct, prev);
    EXPECT_LT(ct, 1.0);
    prev = ct;
  }
  prev = 0.0;
  for (double eps : {0.05, 0.1, 0.2, 0.3}) {
    const double ct = capacitance_three_term(layout_icosahedron(eps, Reactivity(1.0))).CT;
    EXPECT_GT(ct, prev);
    prev = ct;
  }
}

TEST(KeffFromCt, Domain) {
  EXPECT_NEAR(keff_from_ct(0.5), 1.0, 1e-15);
  EXPECT_THROW(keff_from_ct(0.0), DomainError);
  EXPECT_THROW(keff_from_ct(1.0), DomainError);
}

TEST(Homogenized, Icosahedron) {
  for (const auto& row : kIcosa) {
    const auto h = homogenized(12, 0.2, R(row.kappa));
    EXPECT_NEAR(h.k_eff, row.keff_hom, 1e-11 * row.keff_hom) << row.kappa;
    EXPECT_NEAR(1.0 / h.k_eff, 1.0 / h.C_eff - 1.0, 1e-12 / h.k_eff);
    EXPECT_NEAR(h.f, 0.12, 1e-15);
    EXPECT_TRUE(h.warnings.empty());
  }
}

TEST(Homogenized, LayoutOverload) {
  const auto a = homogenized(layout_icosahedron(0.2, Reactivity(1.0)));
  EXPECT_EQ(a.k_eff, homogenized(12, 0.2, Reactivity(1.0)).k_eff);
  const PatchLayout mixed({UnitVector3::normalized({0, 0, 1}), UnitVector3::normalized({0, 0, -1})},
                          {0.1, 0.2}, {Reactivity(1.0), Reactivity(1.0)});
  EXPECT_THROW(homogenized(mixed), ConfigurationError);
}

TEST(Homogenized, LeadingOrderIdentities) {
  for (std::size_t n : {1u, 12u, 100u}) {
    for (double eps : {0.01, 0.1}) {
      EXPECT_NEAR(homogenized_leading_order(n, eps, Reactivity::infinite()), berg_purcell(n, eps),
                  1e-12);
      const double f = n * eps * eps / 4.0;
      for (double k : {0.1, 3.0}) {
        EXPECT_NEAR(heuristic_reactivity(f, eps, Reactivity(k)),
                    homogenized_leading_order(n, eps, Reactivity(k)), 1e-12);
      }
    }
  }
  EXPECT_NEAR(berg_purcell(12, 0.2), 0.763943727, 1e-9);
}

TEST(Homogenized, ErrorsAndWarnings) {
  EXPECT_THROW(homogenized(12, 0.2, Reactivity::zero()), DomainError);
  EXPECT_THROW(homogenized(4, 1.0, Reactivity(1.0)), DomainError);
  EXPECT_THROW(homogenized(0, 0.1, Reactivity(1.0)), DomainError);
  const auto h = homogenized(100, 0.11, Reactivity(1.0));
  EXPECT_GT(h.f, kCoverageWarning);
  EXPECT_EQ(h.warnings.size(), 1u);
  // Dense coverage pushes the bracket through zero.
  EXPECT_THROW(homogenized(1000, 2.0 * std::sqrt(0.9 / 1000), Reactivity::infinite()),
               AsymptoticValidityError);
}

TEST(Homogenized, ConvergesToThreeTermForSmallEps) {
  for (double eps : {0.05, 0.02}) {
    const auto l = layout_icosahedron(eps, Reactivity(1.0));
    const double tt = keff_from_ct(capacitance_three_term(l).CT);
    EXPECT_NEAR(homogenized(l).k_eff / tt, 1.0, 2e-3) << eps;
  }
}

TEST(Dagdug, ReferenceValue) {
  EXPECT_NEAR(dagdug_empirical(0.25), 1.0135262861, 1e-9);
  EXPECT_THROW(dagdug_empirical(0.0), DomainError);
  EXPECT_THROW(dagdug_empirical(1.0), DomainError);
}

TEST(Planar, SingleAndSeparatedPatches) {
  const PlanarPoint origin{};
  const double r1[] = {1.0};
  const Reactivity k1[] = {Reactivity(2.0)};
  EXPECT_NEAR(planar_capacitance({&origin, 1}, 0.1, r1, k1), 0.1 * c_sigmoid(Reactivity(2.0)),
              1e-15);

  // Far-apart patches decouple.
  const PlanarPoint far[] = {{0, 0}, {1e8, 0}};
  const double r2[] = {1.0, 0.5};
  const Reactivity k2[] = {Reactivity::infinite(), Reactivity::infinite()};
  const double iso = 0.1 * (c_scaled(1.0, k2[0], SigmoidModel{}) + c_scaled(0.5, k2[1], SigmoidModel{}));
  EXPECT_NEAR(planar_capacitance(far, 0.1, r2, k2), iso, 1e-8 * iso);

  // Nearby patches screen each other.
  const PlanarPoint near[] = {{0, 0}, {3, 0}};
  EXPECT_LT(planar_capacitance(near, 0.1, r2, k2), iso);
}

TEST(Dimensional, Conversions) {
  DimensionalContext ctx{2.0, 3.0, 0.2, 5.0};
  EXPECT_NO_THROW(ctx.validate());
  EXPECT_NEAR(ctx.eps(), 0.1, 1e-15);
  EXPECT_NEAR(ctx.kappa_from_dimensional(Reactivity(30.0)).value(), 30.0 * 0.2 / 3.0, 1e-15);
  EXPECT_TRUE(ctx.kappa_from_dimensional(Reactivity::infinite()).is_infinite());

  const auto b = capacitance_three_term(layout_single(0.1, Reactivity::infinite()));
  const auto v = dimensional_convert(ctx, b);
  EXPECT_NEAR(v.capacitance, 2.0 * b.CT, 1e-15);
  EXPECT_NEAR(v.K_eff, 3.0 * keff_from_ct(b.CT) / 2.0, 1e-15);
  EXPECT_NEAR(v.flux, 4.0 * kPi * 3.0 * 5.0 * 2.0 * b.CT, 1e-12);
  EXPECT_NEAR(v.flux_smol, 4.0 * kPi * 3.0 * 2.0 * 5.0, 1e-12);

  const auto h = homogenized(1, 0.1, Reactivity(10.0));
  const auto w = dimensional_convert(ctx, h);
  EXPECT_NEAR(w.capacitance, 2.0 * h.C_eff, 1e-15);
  EXPECT_NEAR(w.K_eff, 3.0 * h.k_eff / 2.0, 1e-15);

  EXPECT_THROW((DimensionalContext{-1.0, 1.0, 0.1, 1.0}.validate()), DomainError);
}
