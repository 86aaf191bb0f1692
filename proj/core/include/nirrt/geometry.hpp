#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>

#include "nirrt/errors.hpp"

namespace nirrt {

class Rng;

inline constexpr int kMaxDim = 3;

/// A point in a 2D or 3D Euclidean state space. Storage is fixed-size so
/// states stay cheap to copy; only the first dim() coordinates are used.
class State {
 public:
  State() = default;
  explicit State(int dim);
  State(std::initializer_list<double> coords);
  static State from_span(std::span<const double> coords);

  int dim() const { return dim_; }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  std::span<const double> coords() const { return {c_.data(), static_cast<std::size_t>(dim_)}; }

  State& operator+=(const State& o);
  State& operator-=(const State& o);
  State& operator*=(double s);

  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(State a, double s) { return a *= s; }
  friend State operator*(double s, State a) { return a *= s; }
  friend bool operator==(const State& a, const State& b);

  double norm() const;
  double squared_norm() const;
  bool is_finite() const;
  std::string to_string() const;

 private:
  std::array<double, kMaxDim> c_{};
  int dim_ = 0;
};

void require_same_dim(const State& a, const State& b);
void require_supported_dim(int dim);

/// Euclidean distance; the path cost metric everywhere.
double distance(const State& a, const State& b);
double squared_distance(const State& a, const State& b);

/// Uniform over the axis-aligned box [lo, hi].
State sample_uniform_box(const State& lo, const State& hi, Rng& rng);

/// Uniform over the closed unit d-ball (Gaussian direction, radius u^(1/d)).
State sample_unit_ball(int dim, Rng& rng);

/// Lebesgue measure of the unit d-ball.
double unit_ball_volume(int dim);

}  // namespace nirrt
