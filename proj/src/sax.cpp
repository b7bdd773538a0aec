#include "persist/sax.hpp"

#include "persist/algorithm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace persist {

Vector znormalize(const Vector& values) {
  const Eigen::Index n = values.size();
  if (n == 0) return values;
  const Scalar mean = values.mean();
  const Vector centered = values.array() - mean;
  const Scalar sd = std::sqrt(centered.squaredNorm() / static_cast<Scalar>(n));
  if (sd < 1e-12) return Vector::Zero(n);
  return centered / sd;
}

TimeSeries znormalize(const TimeSeries& ts) { return {ts.id, ts.label, znormalize(ts.values)}; }

Vector paa(const Vector& values, int w) {
  if (w < 1) throw std::invalid_argument("paa window must be at least 1");
  const Eigen::Index n = values.size();
  const Eigen::Index m = (n + w - 1) / w;
  Vector out(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index start = i * w;
    const Eigen::Index len = std::min<Eigen::Index>(w, n - start);
    out[i] = values.segment(start, len).mean();
  }
  return out;
}

TimeSeries paa(const TimeSeries& ts, int w) { return {ts.id, ts.label, paa(ts.values, w)}; }

// Acklam's rational approximation followed by one Halley step against erfc.
Scalar inverse_normal_cdf(Scalar p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("inverse_normal_cdf: p must lie in (0, 1)");

  static constexpr Scalar a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr Scalar b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr Scalar c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr Scalar d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr Scalar low = 0.02425;

  Scalar x;
  if (p < low) {
    const Scalar q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - low) {
    const Scalar q = p - 0.5;
    const Scalar r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const Scalar q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  const Scalar e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const Scalar u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(x * x / 2.0);
  return x - u / (1.0 + x * u / 2.0);
}

std::vector<Scalar> sax_breakpoints(int alphabet) {
  if (alphabet < 2 || alphabet > 26)
    throw std::invalid_argument("SAX alphabet size must be between 2 and 26");
  std::vector<Scalar> out(alphabet - 1);
  for (int i = 1; i < alphabet; ++i) {
    // Exact symmetry keeps the median breakpoint at 0.
    out[i - 1] = 2 * i == alphabet ? 0.0 : inverse_normal_cdf(static_cast<Scalar>(i) / alphabet);
  }
  return out;
}

SymbolSequence sax_discretize(const TimeSeries& ts, int alphabet, int w) {
  const auto bps = sax_breakpoints(alphabet);
  const Vector reduced = paa(znormalize(ts.values), w);
  return {ts.id, ts.label, apply_breakpoints(reduced, bps), alphabet};
}

}  // namespace persist
