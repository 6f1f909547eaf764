// Sample collection kernels. Every parallel kernel has a serial twin that the
// tests and benchmarks compare it against; both return values in t order.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pcollapse/arith.hpp"

namespace pcollapse {

/// Evaluates I(t). Must be safe to call concurrently.
using CountFunction = std::function<Integer(std::int64_t)>;

/// (t, I(t)) for t in [t_begin, t_end).
struct Sample {
  std::int64_t t = 0;
  Integer value;
  friend bool operator==(const Sample&, const Sample&) = default;
};

std::vector<Sample> collect_samples_serial(const CountFunction& count, std::int64_t t_begin,
                                           std::int64_t t_end);

/// OpenMP version; `jobs` <= 0 uses the runtime default.
std::vector<Sample> collect_samples(const CountFunction& count, std::int64_t t_begin, std::int64_t t_end,
                                    int jobs = 0);

/// Number of worker threads the parallel kernels use by default.
int default_jobs();

}  // namespace pcollapse
