#pragma once

#include "qfilt/core/interval.hpp"
#include "qfilt/core/rng.hpp"

namespace qfilt {

/// N(mean, stddev^2) restricted to `support`, by inverse CDF.
/// stddev = 0 (or a window with no representable mass) returns the clamped mean.
double sample_truncated_normal(double mean, double stddev, Interval support, SeededRng& rng);

}  // namespace qfilt
