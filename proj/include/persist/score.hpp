#pragma once

#include "persist/core.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <span>

namespace persist {

/// Distribution over two outcomes: (p1, 1 - p1).
template <std::floating_point T = Scalar>
struct TwoPointDist {
  T p1 = T(0);

  constexpr T p2() const { return T(1) - p1; }
};

template <std::floating_point T>
inline constexpr T kProbabilityClamp = T(1e-10);

/// Kullback-Leibler divergence in nats. Both distributions are clamped to
/// [eps, 1 - eps] first so that the result is always finite.
template <std::floating_point T>
T kl(TwoPointDist<T> p, TwoPointDist<T> q) {
  constexpr T eps = kProbabilityClamp<T>;
  const T p1 = std::clamp(p.p1, eps, T(1) - eps);
  const T q1 = std::clamp(q.p1, eps, T(1) - eps);
  const T p2 = T(1) - p1;
  const T q2 = T(1) - q1;
  return std::max(T(0), p1 * std::log(p1 / q1) + p2 * std::log(p2 / q2));
}

template <std::floating_point T>
T skl(TwoPointDist<T> p, TwoPointDist<T> q) {
  return (kl(p, q) + kl(q, p)) / T(2);
}

/// Earth mover's distance between two-outcome distributions.
template <std::floating_point T>
T wasserstein(TwoPointDist<T> p, TwoPointDist<T> q) {
  return std::abs(p.p1 - q.p1);
}

template <std::floating_point T>
T distance(Metric metric, TwoPointDist<T> p, TwoPointDist<T> q) {
  return metric == Metric::KL ? skl(p, q) : wasserstein(p, q);
}

inline constexpr Scalar kRejected = -std::numeric_limits<Scalar>::infinity();

/// sgn(P_r - P) * d((P, 1-P), (P_r, 1-P_r)); kRejected when P_r is undefined.
Scalar persistence_symbol(const SymbolStats& stats, Metric metric);

/// Unweighted mean of per-symbol persistence. Any rejected symbol rejects the set.
Scalar persistence_aggregate(std::span<const SymbolStats> stats, Metric metric);

}  // namespace persist
