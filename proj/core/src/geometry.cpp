#include "nirrt/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "nirrt/rng.hpp"

namespace nirrt {

State::State(int dim) : dim_(dim) { require_supported_dim(dim); }

State::State(std::initializer_list<double> coords) : dim_(static_cast<int>(coords.size())) {
  require_supported_dim(dim_);
  std::copy(coords.begin(), coords.end(), c_.begin());
}

State State::from_span(std::span<const double> coords) {
  State s(static_cast<int>(coords.size()));
  std::copy(coords.begin(), coords.end(), s.c_.begin());
  return s;
}

State& State::operator+=(const State& o) {
  require_same_dim(*this, o);
  for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
  return *this;
}

State& State::operator-=(const State& o) {
  require_same_dim(*this, o);
  for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
  return *this;
}

State& State::operator*=(double s) {
  for (int i = 0; i < dim_; ++i) c_[i] *= s;
  return *this;
}

bool operator==(const State& a, const State& b) {
  if (a.dim_ != b.dim_) return false;
  for (int i = 0; i < a.dim_; ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

double State::squared_norm() const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += c_[i] * c_[i];
  return s;
}

double State::norm() const { return std::sqrt(squared_norm()); }

bool State::is_finite() const {
  for (int i = 0; i < dim_; ++i) {
    if (!std::isfinite(c_[i])) return false;
  }
  return true;
}

std::string State::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < dim_; ++i) os << (i ? ", " : "") << c_[i];
  os << ')';
  return os.str();
}

void require_same_dim(const State& a, const State& b) {
  if (a.dim() != b.dim()) {
    throw ContractViolation("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

void require_supported_dim(int dim) {
  if (dim != 2 && dim != 3) {
    throw ContractViolation("unsupported dimension " + std::to_string(dim) + " (expected 2 or 3)");
  }
}

double squared_distance(const State& a, const State& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double distance(const State& a, const State& b) { return std::sqrt(squared_distance(a, b)); }

State sample_uniform_box(const State& lo, const State& hi, Rng& rng) {
  require_same_dim(lo, hi);
  State out(lo.dim());
  for (int i = 0; i < lo.dim(); ++i) {
    if (lo[i] > hi[i]) {
      throw ContractViolation("sample_uniform_box: lo > hi on axis " + std::to_string(i));
    }
    out[i] = rng.uniform(lo[i], hi[i]);
  }
  return out;
}

State sample_unit_ball(int dim, Rng& rng) {
  require_supported_dim(dim);
  State dir(dim);
  double n2 = 0.0;
  do {
    for (int i = 0; i < dim; ++i) dir[i] = rng.normal();
    n2 = dir.squared_norm();
  } while (n2 == 0.0);
  const double radius = std::pow(rng.uniform01(), 1.0 / dim);
  return dir * (radius / std::sqrt(n2));
}

double unit_ball_volume(int dim) {
  require_supported_dim(dim);
  return dim == 2 ? std::numbers::pi : 4.0 / 3.0 * std::numbers::pi;
}

}  // namespace nirrt
