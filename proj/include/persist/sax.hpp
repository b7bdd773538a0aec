#pragma once

#include "persist/core.hpp"

#include <vector>

namespace persist {

/// Mean 0, population std 1. A series with std < 1e-12 maps to zeros.
Vector znormalize(const Vector& values);
TimeSeries znormalize(const TimeSeries& ts);

/// Means of consecutive windows of width w; a trailing partial window is
/// averaged over its actual length. Output length is ceil(n / w).
Vector paa(const Vector& values, int w);
TimeSeries paa(const TimeSeries& ts, int w);

/// Inverse standard normal CDF, |error| well below 1e-8 over (0, 1).
Scalar inverse_normal_cdf(Scalar p);

/// Equiprobable Gaussian breakpoints Phi^-1(i/a), i = 1..a-1. Requires 2 <= a <= 26.
std::vector<Scalar> sax_breakpoints(int alphabet);

SymbolSequence sax_discretize(const TimeSeries& ts, int alphabet, int w = 2);

}  // namespace persist
