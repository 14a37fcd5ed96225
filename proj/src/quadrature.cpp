#include "patchcap/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

#include "patchcap/errors.hpp"

namespace patchcap {

namespace {

double composite(const std::function<double(double)>& f, double lo, double hi, long panels) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const double h = (hi - lo) / static_cast<double>(panels);
  double sum = 0.0;
  for (long p = 0; p < panels; ++p) {
    const double a = lo + h * static_cast<double>(p);
    const double b = (p + 1 == panels) ? hi : a + h;
    sum += Rule::integrate(f, a, b);
  }
  return sum;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureOptions& opts) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("integration limits must be finite");
  if (lo == hi) return 0.0;
  long panels = std::max(1, opts.initial_panels);
  double prev = composite(f, lo, hi, panels);
  for (int i = 0; i < opts.max_doublings; ++i) {
    panels *= 2;
    const double next = composite(f, lo, hi, panels);
    if (std::abs(next - prev) <= opts.tolerance * std::max(1.0, std::abs(next))) return next;
    prev = next;
  }
  throw DomainError("quadrature did not converge after " + std::to_string(opts.max_doublings) +
                    " panel doublings");
}

}  // namespace patchcap
