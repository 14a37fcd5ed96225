#include "patchcap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "patchcap/errors.hpp"
#include "patchcap/philox.hpp"

namespace patchcap {

namespace {

constexpr double kPi = std::numbers::pi;

// Angle between two unit vectors, accurate for nearly parallel inputs.
double central_angle(const Vec3& a, const Vec3& b) {
  const double chord = std::min(distance(a, b), 2.0);
  return 2.0 * std::asin(chord / 2.0);
}

std::string describe_pair(std::size_t i, std::size_t j, double sep, double need) {
  std::ostringstream os;
  os << "patches " << i << " and " << j << " overlap: angular separation " << sep
     << " does not exceed the summed half-widths " << need;
  return os.str();
}

}  // namespace

double angular_radius(double chord_radius) {
  return 2.0 * std::asin(std::min(chord_radius, 2.0) / 2.0);
}

PatchLayout::PatchLayout(std::vector<UnitVector3> centers, std::vector<double> radii,
                         std::vector<Reactivity> kappas)
    : centers_(std::move(centers)), radii_(std::move(radii)), kappas_(std::move(kappas)) {
  const std::size_t n = centers_.size();
  if (n == 0) throw ConfigurationError("a layout needs at least one patch");
  if (radii_.size() != n || kappas_.size() != n) {
    throw ConfigurationError("centers, radii and kappas must have equal length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double r = radii_[i];
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw ConfigurationError("patch " + std::to_string(i) + " has nonpositive radius");
    }
    if (r > kMaxPatchRadius) {
      throw ConfigurationError("patch " + std::to_string(i) +
                               " radius exceeds 2 (the whole sphere)");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double sep = central_angle(centers_[i].vec(), centers_[j].vec());
      const double need = angular_radius(radii_[i]) + angular_radius(radii_[j]);
      if (!(sep > need + kOverlapTolerance)) {
        throw ConfigurationError(describe_pair(i, j, sep, need));
      }
    }
  }
}

double PatchLayout::length_scale() const {
  return *std::max_element(radii_.begin(), radii_.end());
}

double PatchLayout::area_fraction() const {
  double s = 0.0;
  for (double r : radii_) s += r * r;
  return s / 4.0;
}

bool PatchLayout::is_uniform() const {
  for (std::size_t i = 1; i < size(); ++i) {
    if (radii_[i] != radii_[0] || !(kappas_[i] == kappas_[0])) return false;
  }
  return true;
}

PatchLayout PatchLayout::with_uniform_kappa(Reactivity kappa) const {
  return PatchLayout(centers_, radii_, std::vector<Reactivity>(size(), kappa));
}

PatchLayout PatchLayout::rotated(const Rotation3& rotation) const {
  std::vector<UnitVector3> c;
  c.reserve(size());
  for (const auto& x : centers_) c.push_back(UnitVector3::normalized(rotation.apply(x.vec())));
  return PatchLayout(std::move(c), radii_, kappas_);
}

std::ptrdiff_t PatchLayout::containing_patch(const Vec3& point) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (distance(point, centers_[i].vec()) < radii_[i]) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

namespace {

PatchLayout uniform_layout(const std::vector<Vec3>& points, double radius, Reactivity kappa) {
  std::vector<UnitVector3> centers;
  centers.reserve(points.size());
  for (const auto& p : points) centers.push_back(UnitVector3::normalized(p));
  return PatchLayout(std::move(centers), std::vector<double>(points.size(), radius),
                     std::vector<Reactivity>(points.size(), kappa));
}

}  // namespace

PatchLayout layout_octahedron(double radius, Reactivity kappa) {
  return uniform_layout({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                        radius, kappa);
}

PatchLayout layout_icosahedron(double radius, Reactivity kappa) {
  const double g = std::numbers::phi;
  std::vector<Vec3> v;
  for (double s1 : {-1.0, 1.0}) {
    for (double s2 : {-1.0, 1.0}) {
      v.push_back({0, s1, s2 * g});
      v.push_back({s1, s2 * g, 0});
      v.push_back({s2 * g, 0, s1});
    }
  }
  return uniform_layout(v, radius, kappa);
}

PatchLayout layout_random_uniform(std::size_t n, double radius, Reactivity kappa,
                                  std::uint64_t seed, std::size_t max_retries) {
  if (n == 0) throw ConfigurationError("a layout needs at least one patch");
  if (!(radius > 0.0) || radius > kMaxPatchRadius) {
    throw ConfigurationError("random layout radius must lie in (0, 2]");
  }
  const double min_sep = 2.0 * angular_radius(radius) + kOverlapTolerance;
  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    Philox4x32 rng(seed, attempt);
    std::vector<Vec3> pts;
    pts.reserve(n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const double z = 2.0 * rng.uniform() - 1.0;
      const double phi = 2.0 * kPi * rng.uniform();
      const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
      const Vec3 p{s * std::cos(phi), s * std::sin(phi), z};
      for (const auto& q : pts) {
        if (!(central_angle(p, q) > min_sep)) {
          ok = false;
          break;
        }
      }
      pts.push_back(p);
    }
    if (ok) return uniform_layout(pts, radius, kappa);
  }
  throw PackingError("no non-overlapping configuration of " + std::to_string(n) +
                     " patches of radius " + std::to_string(radius) + " after " +
                     std::to_string(max_retries) + " retries");
}

PatchLayout layout_fibonacci(std::size_t n, double radius, Reactivity kappa) {
  if (n == 0) throw ConfigurationError("a layout needs at least one patch");
  if (n == 1) return uniform_layout({{0, 0, 1}}, radius, kappa);
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * static_cast<double>(i);
    v.push_back({s * std::cos(phi), s * std::sin(phi), z});
  }
  return uniform_layout(v, radius, kappa);
}

PatchLayout layout_single(double radius, Reactivity kappa) {
  return uniform_layout({{0, 0, 1}}, radius, kappa);
}

double greens_value(const UnitVector3& xi, const UnitVector3& xj) {
  const double s = distance(xi.vec(), xj.vec());
  if (!(s > 0.0)) throw DomainError("Green's function evaluated at coincident points");
  return 1.0 / (2.0 * kPi * s) - std::log1p(2.0 / s) / (4.0 * kPi);
}

double GreensMatrix::quadratic_form(std::span<const double> w) const {
  if (w.size() != n_) throw DomainError("quadratic form weight size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) s += w[i] * data_[i * n_ + j] * w[j];
  }
  return s;
}

std::vector<double> GreensMatrix::apply(std::span<const double> w) const {
  if (w.size() != n_) throw DomainError("matrix-vector size mismatch");
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i] += data_[i * n_ + j] * w[j];
  }
  return out;
}

GreensMatrix greens_matrix(const PatchLayout& layout) {
  GreensMatrix g(layout.size());
  for (std::size_t i = 0; i < layout.size(); ++i) {
    for (std::size_t j = i + 1; j < layout.size(); ++j) {
      g.set_symmetric(i, j, greens_value(layout.center(i), layout.center(j)));
    }
  }
  return g;
}

double interaction_energy(const PatchLayout& layout) {
  double h = 0.0;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    for (std::size_t j = i + 1; j < layout.size(); ++j) {
      const double s = distance(layout.center(i).vec(), layout.center(j).vec());
      h += 1.0 / s - 0.5 * std::log1p(2.0 / s);
    }
  }
  return h;
}

double h_asymptotic(std::size_t n) {
  if (n == 0) throw DomainError("h_asymptotic requires n >= 1");
  const double N = static_cast<double>(n);
  return N * N / 4.0 - kEnergyD1 * std::pow(N, 1.5) + N * std::log(N) / 8.0 + kEnergyD2 * N +
         kEnergyD3 * std::sqrt(N);
}

nlohmann::json layout_to_json(const PatchLayout& layout) {
  nlohmann::json centers = nlohmann::json::array();
  nlohmann::json kappas = nlohmann::json::array();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto& c = layout.center(i);
    centers.push_back({c.x(), c.y(), c.z()});
    const Reactivity k = layout.kappa(i);
    if (k.is_infinite()) {
      kappas.push_back("inf");
    } else {
      kappas.push_back(k.value());
    }
  }
  return {{"centers", centers}, {"radii", layout.radii()}, {"kappas", kappas}};
}

PatchLayout layout_from_json(const nlohmann::json& doc) {
  try {
    std::vector<UnitVector3> centers;
    for (const auto& c : doc.at("centers")) {
      if (!c.is_array() || c.size() != 3) throw SpecError("each center must be [x, y, z]");
      centers.push_back(UnitVector3::checked({c[0].get<double>(), c[1].get<double>(),
                                              c[2].get<double>()},
                                             1e-9));
    }
    auto radii = doc.at("radii").get<std::vector<double>>();
    std::vector<Reactivity> kappas;
    for (const auto& k : doc.at("kappas")) {
      kappas.push_back(k.is_string() ? Reactivity::parse(k.get<std::string>())
                                     : Reactivity(k.get<double>()));
    }
    return PatchLayout(std::move(centers), std::move(radii), std::move(kappas));
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed layout document: ") + e.what());
  } catch (const DomainError& e) {
    throw SpecError(std::string("malformed layout document: ") + e.what());
  }
}

}  // namespace patchcap
