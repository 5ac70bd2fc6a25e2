#ifndef RMTSPACING_TYPES_HPP_
#define RMTSPACING_TYPES_HPP_

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "rmtspacing/errors.hpp"

namespace rmtspacing {

/// Mixing parameter of a transition, validated to lie in [0, 1].
class Alpha {
 public:
  explicit Alpha(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw DomainError("Alpha: value must lie in [0, 1], got " + std::to_string(value));
    }
  }
  double value() const noexcept { return value_; }
  friend bool operator==(Alpha, Alpha) = default;

 private:
  double value_;
};

/// Weights (α1, α2, α3) of the three symmetry-breaking terms of the 4x4 model.
/// A zero component removes its Gaussian direction from the spacing.
class AlphaVec {
 public:
  AlphaVec(double a1, double a2, double a3) : a_{a1, a2, a3} {
    for (double a : a_) {
      if (!(a >= 0.0 && a <= 1.0)) {
        throw DomainError("AlphaVec: components must lie in [0, 1]");
      }
    }
  }
  double a1() const noexcept { return a_[0]; }
  double a2() const noexcept { return a_[1]; }
  double a3() const noexcept { return a_[2]; }
  const std::array<double, 3>& components() const noexcept { return a_; }

  /// Dimension of the Gaussian space whose radius is s/2.
  int dimension() const noexcept {
    int n = 2;
    for (double a : a_) n += a > 0.0 ? 1 : 0;
    return n;
  }
  friend bool operator==(const AlphaVec&, const AlphaVec&) = default;

 private:
  std::array<double, 3> a_;
};

enum class TransitionKind { GueToGinibre, GinibreToGse, GoeToGinibre };

inline constexpr std::array<TransitionKind, 3> kAllTransitions = {
    TransitionKind::GueToGinibre, TransitionKind::GinibreToGse, TransitionKind::GoeToGinibre};

inline std::string_view to_string(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::GueToGinibre: return "gue-ginibre";
    case TransitionKind::GinibreToGse: return "ginibre-gse";
    case TransitionKind::GoeToGinibre: return "goe-ginibre";
  }
  return "?";
}

inline std::optional<TransitionKind> parse_transition(std::string_view name) {
  for (auto k : kAllTransitions) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

/// The α-vector that realizes a transition at mixing parameter α.
inline AlphaVec alpha_vec_for(TransitionKind kind, Alpha alpha) {
  const double a = alpha.value();
  switch (kind) {
    case TransitionKind::GueToGinibre: return {1.0, a, 0.0};
    case TransitionKind::GinibreToGse: return {1.0, 1.0, a};
    case TransitionKind::GoeToGinibre: return {a, a, 0.0};
  }
  throw DomainError("alpha_vec_for: unknown transition");
}

/// Surmise index β of the transition endpoint at α = 0 and α = 1.
inline std::array<int, 2> endpoint_betas(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::GueToGinibre: return {2, 3};
    case TransitionKind::GinibreToGse: return {3, 4};
    case TransitionKind::GoeToGinibre: return {1, 3};
  }
  throw DomainError("endpoint_betas: unknown transition");
}

}  // namespace rmtspacing

#endif  // RMTSPACING_TYPES_HPP_
