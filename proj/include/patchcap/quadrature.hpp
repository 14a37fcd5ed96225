#pragma once

#include <functional>

namespace patchcap {

struct QuadratureOptions {
  double tolerance = 1e-10;  ///< successive estimates must agree to this (abs or rel)
  int initial_panels = 1;
  int max_doublings = 16;
};

/// Composite 20-point Gauss-Legendre rule on [lo, hi], doubling the number of
/// panels until two successive estimates agree.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureOptions& opts = {});

}  // namespace patchcap
