#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "patchcap/errors.hpp"
#include "patchcap/patch_kernels.hpp"

using namespace patchcap;

namespace {

constexpr double kPi = std::numbers::pi;
const double kCInf = 2.0 / kPi;

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
  return out;
}

}  // namespace

TEST(Steklov, TableSums) {
  const auto& s = SteklovSpectrum::unit_disk();
  EXPECT_NEAR(s.taylor_coefficient(1), 0.4998121950, 1e-9);
  EXPECT_NEAR(s.taylor_coefficient(2), 0.4243811769, 1e-9);
  EXPECT_NEAR(s.taylor_coefficient(3), 0.3650890, 1e-6);
  EXPECT_NEAR(s.truncated_limit(), 0.6283750031, 1e-9);
  EXPECT_GT(s.tail_deficit(), 0.0);
  EXPECT_THROW(s.taylor_coefficient(0), DomainError);
}

TEST(Steklov, CsvLoader) {
  std::istringstream good("k,mu,d\n0,1.0,2.0\n1,3.0,0.5\n");
  const auto s = SteklovSpectrum::from_csv(good);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.eigenvalues()[1], 3.0);

  std::istringstream bad_header("mu,d\n1,2\n");
  EXPECT_THROW(SteklovSpectrum::from_csv(bad_header), SpecError);
  std::istringstream unordered("k,mu,d\n1,1.0,2.0\n0,3.0,0.5\n");
  EXPECT_THROW(SteklovSpectrum::from_csv(unordered), SpecError);
  std::istringstream junk("k,mu,d\n0,x,2\n");
  EXPECT_THROW(SteklovSpectrum::from_csv(junk), SpecError);
}

TEST(Capacitance, LimitsOfEveryModel) {
  const CapacitanceModel models[] = {SpectralModel{}, SigmoidModel{}, LargeKappaModel{}};
  for (const auto& m : models) {
    EXPECT_NEAR(c_unit(Reactivity::infinite(), m), kCInf, 1e-12) << model_name(m);
  }
  EXPECT_EQ(c_unit(Reactivity::zero(), SigmoidModel{}), 0.0);
  EXPECT_EQ(c_unit(Reactivity::zero(), SpectralModel{}), 0.0);
  EXPECT_EQ(c_unit(Reactivity::zero(), TaylorModel{}), 0.0);
  EXPECT_THROW(c_unit(Reactivity::infinite(), TaylorModel{}), DomainError);
}

TEST(Capacitance, SlopeAtZero) {
  const double k = 1e-7;
  EXPECT_NEAR(c_sigmoid(Reactivity(k)) / k, 0.5, 1e-6);
  EXPECT_NEAR(c_unit(Reactivity(k), SpectralModel{}) / k, 0.5, 1e-3);
}

TEST(Capacitance, ReferenceValues) {
  EXPECT_NEAR(c_taylor(0.1), 0.0461209682, 1e-9);
  EXPECT_NEAR(c_large_kappa(Reactivity(100.0)), 0.6226870, 1e-6);
  EXPECT_NEAR(taylor_c2(), 4.0 / (3.0 * kPi), 0.0);
  EXPECT_THROW(c_taylor(-1.0), DomainError);
  EXPECT_THROW(c_large_kappa(Reactivity::zero()), DomainError);
}

TEST(Capacitance, TaylorWarnsOutsideWindow) {
  std::vector<std::string> w;
  c_taylor(0.3, &w);
  EXPECT_TRUE(w.empty());
  c_taylor(0.6, &w);
  EXPECT_EQ(w.size(), 1u);
}

TEST(Capacitance, MonotoneAndBounded) {
  for (const CapacitanceModel& m : {CapacitanceModel{SpectralModel{}}, CapacitanceModel{SigmoidModel{}}}) {
    double prev = 0.0;
    for (double k : log_grid(1e-4, 1e4, 200)) {
      const double c = c_unit(Reactivity(k), m);
      EXPECT_GT(c, prev) << model_name(m) << " kappa=" << k;
      EXPECT_LT(c, kCInf);
      // The tail correction lifts the spectral slope by ~5e-4.
      EXPECT_LE(c, 0.5 * k * (1 + 1e-3));
      prev = c;
    }
  }
  double prev = 0.0;
  for (double k : log_grid(1e-4, kTaylorWindow, 50)) {
    const double c = c_taylor(k);
    EXPECT_GT(c, prev);
    prev = c;
  }
  prev = 0.0;
  for (double k : log_grid(kLargeKappaWindow, 1e6, 50)) {
    const double c = c_large_kappa(Reactivity(k));
    EXPECT_GT(c, prev);
    EXPECT_LT(c, kCInf);
    prev = c;
  }
}

TEST(Capacitance, ModelsAgreeInsideWindows) {
  for (double k : log_grid(1e-3, 0.1, 10)) {
    const double ref = c_unit(Reactivity(k), SpectralModel{});
    EXPECT_NEAR(c_taylor(k) / ref, 1.0, 2e-3) << k;
  }
  for (double k : log_grid(50.0, 1e4, 10)) {
    const double ref = c_unit(Reactivity(k), SpectralModel{});
    EXPECT_NEAR(c_large_kappa(Reactivity(k)) / ref, 1.0, 5e-3) << k;
  }
}

TEST(Capacitance, UncompensatedSpectrumUndershoots) {
  const SpectralModel raw{SteklovSpectrum::unit_disk(), false};
  EXPECT_LT(c_unit(Reactivity::infinite(), raw), kCInf);
  EXPECT_NEAR(c_unit(Reactivity::infinite(), raw), 0.6283750031, 1e-9);
}

TEST(Capacitance, ScalingLaw) {
  for (double a : {0.01, 0.3, 1.0, 2.0}) {
    for (double k : {0.01, 1.0, 50.0}) {
      EXPECT_DOUBLE_EQ(c_scaled(a, Reactivity(k), SigmoidModel{}),
                       a * c_sigmoid(Reactivity(a * k)));
    }
    EXPECT_DOUBLE_EQ(c_scaled(a, Reactivity::infinite(), SigmoidModel{}), a * kCInf);
  }
  EXPECT_THROW(c_scaled(0.0, Reactivity(1.0), SigmoidModel{}), DomainError);
}

TEST(TaylorFit, Coefficients) {
  EXPECT_NEAR(taylor_coefficient_fit(2), 0.4888 / 1.1578 + 0.0084 / 4.3168, 1e-15);
  EXPECT_NEAR(taylor_coefficient_fit(3), 0.3651, 1e-3);
  EXPECT_THROW(taylor_coefficient_fit(1), DomainError);
}

TEST(Monopole, InfiniteLimit) {
  const double closed = (3.0 - 4.0 * std::numbers::ln2) / (kPi * kPi);
  EXPECT_NEAR(e_infinite_closed_form(1.0), closed, 1e-15);
  EXPECT_NEAR(e_infinite_closed_form(1.0), 0.0230415798, 1e-10);
  EXPECT_NEAR(e_heuristic(1.0, Reactivity::infinite()), closed, 1e-15);
  EXPECT_NEAR(e_heuristic(1.0, Reactivity(1e6)), closed, 1e-3);
  for (double a : {0.01, 0.1, 0.5}) {
    EXPECT_NEAR(e_heuristic(a, Reactivity::infinite()), e_infinite_closed_form(a), 1e-15);
  }
}

TEST(Monopole, Beta) {
  EXPECT_NEAR(beta_coefficient(1.0, Reactivity::infinite()), 4.0 / std::numbers::e, 1e-9);
  EXPECT_NEAR(beta_coefficient(1.0, Reactivity::infinite()), 1.4715177647, 1e-9);
  EXPECT_NEAR(beta_coefficient(1.0, Reactivity(1e-4)), 1.284060890503304, 1e-9);
  EXPECT_THROW(beta_coefficient(1.0, Reactivity::zero()), DomainError);
  // Rescaling the patch rescales beta linearly at fixed a * kappa.
  for (double a : {0.05, 0.2}) {
    EXPECT_NEAR(beta_coefficient(a, Reactivity(3.0 / a)), a * beta_coefficient(1.0, Reactivity(3.0)), 1e-12);
  }
}

TEST(Models, NamesRoundTrip) {
  for (const char* n : {"spectral", "spectral-raw", "sigmoid", "taylor", "large-kappa"}) {
    EXPECT_EQ(model_name(model_from_name(n)), n);
  }
  EXPECT_THROW(model_from_name("pade"), SpecError);
}
