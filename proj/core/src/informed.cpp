#include "nirrt/informed.hpp"

#include <cmath>

#include "nirrt/rng.hpp"

namespace nirrt {

namespace {
constexpr double kDegenerateTol = 1e-9;
}  // namespace

Matrix3 rotation_to_world(const State& axis) {
  require_supported_dim(axis.dim());
  const double n = axis.norm();
  Matrix3 r{};
  if (axis.dim() == 2) {
    const double c = n > 0.0 ? axis[0] / n : 1.0;
    const double s = n > 0.0 ? axis[1] / n : 0.0;
    r[0] = {c, -s, 0.0};
    r[1] = {s, c, 0.0};
    r[2] = {0.0, 0.0, 1.0};
    return r;
  }
  std::array<double, 3> a{1.0, 0.0, 0.0};
  if (n > 0.0) a = {axis[0] / n, axis[1] / n, axis[2] / n};
  // Complete {a} with the coordinate axis least aligned with it.
  int k = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(a[i]) < std::abs(a[k])) k = i;
  }
  std::array<double, 3> e{0.0, 0.0, 0.0};
  e[k] = 1.0;
  const double dot = a[0] * e[0] + a[1] * e[1] + a[2] * e[2];
  std::array<double, 3> b{e[0] - dot * a[0], e[1] - dot * a[1], e[2] - dot * a[2]};
  const double bn = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
  for (double& v : b) v /= bn;
  const std::array<double, 3> c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                a[0] * b[1] - a[1] * b[0]};
  for (int i = 0; i < 3; ++i) r[i] = {a[i], b[i], c[i]};
  return r;
}

InformedSet::InformedSet(State start, State goal, double c_best)
    : start_(std::move(start)), goal_(std::move(goal)), c_best_(c_best) {
  require_same_dim(start_, goal_);
  c_min_ = distance(start_, goal_);
  if (!std::isfinite(c_best)) throw ContractViolation("informed set needs a finite c_best");
  if (c_best < c_min_) throw ContractViolation("informed set is empty: c_best < c_min");
  center_ = (start_ + goal_) * 0.5;
  rotation_ = rotation_to_world(goal_ - start_);
}

std::array<double, 3> InformedSet::radii() const {
  const double major = c_best_ / 2.0;
  const double minor = c_best_ <= c_min_ + kDegenerateTol
                           ? 0.0
                           : std::sqrt(c_best_ * c_best_ - c_min_ * c_min_) / 2.0;
  return {major, minor, minor};
}

bool InformedSet::contains(const State& x) const {
  return distance(x, start_) + distance(x, goal_) <= c_best_;
}

Box InformedSet::aabb() const {
  const auto r = radii();
  const int d = start_.dim();
  State lo = center_;
  State hi = center_;
  for (int i = 0; i < d; ++i) {
    double half = 0.0;
    for (int j = 0; j < d; ++j) half += (rotation_[i][j] * r[j]) * (rotation_[i][j] * r[j]);
    half = std::sqrt(half);
    lo[i] -= half;
    hi[i] += half;
  }
  return {lo, hi};
}

bool informed_membership(const InformedSet& set, const State& x) { return set.contains(x); }

State informed_sample(const InformedSet& set, Rng& rng) {
  const int d = set.start().dim();
  const auto r = set.radii();
  const Matrix3& rot = set.rotation();
  // Rounding can push a point on the surface a hair outside; resample then.
  for (;;) {
    const State ball = sample_unit_ball(d, rng);
    State x = set.center();
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) x[i] += rot[i][j] * r[j] * ball[j];
    }
    if (set.contains(x)) return x;
    if (r[1] == 0.0) return x;
  }
}

State informed_or_uniform(const std::optional<InformedSet>& set, const World& world, Rng& rng) {
  if (!set) return sample_free(world, rng);
  for (int attempt = 0; attempt < kInformedRejectionBudget; ++attempt) {
    State x = informed_sample(*set, rng);
    if (is_free(world, x)) return x;
  }
  throw InfeasibleFocusError("informed sampling: no free state in the focus set after " +
                             std::to_string(kInformedRejectionBudget) + " attempts");
}

}  // namespace nirrt
