#include "pcollapse/kernels.hpp"

#include <omp.h>

#include <exception>
#include <stdexcept>

namespace pcollapse {

int default_jobs() { return omp_get_max_threads(); }

std::vector<Sample> collect_samples_serial(const CountFunction& count, std::int64_t t_begin,
                                           std::int64_t t_end) {
  if (t_end < t_begin) throw std::invalid_argument("empty sample range");
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(t_end - t_begin));
  for (std::int64_t t = t_begin; t < t_end; ++t) out.push_back(Sample{t, count(t)});
  return out;
}

std::vector<Sample> collect_samples(const CountFunction& count, std::int64_t t_begin, std::int64_t t_end,
                                    int jobs) {
  if (t_end < t_begin) throw std::invalid_argument("empty sample range");
  const std::int64_t n = t_end - t_begin;
  std::vector<Sample> out(static_cast<std::size_t>(n));
  const int threads = jobs > 0 ? jobs : default_jobs();
  std::exception_ptr failure;
  // Larger t costs more; dynamic scheduling keeps the tail balanced.
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads) if (threads > 1 && n > 8)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const std::int64_t t = t_begin + i;
      out[static_cast<std::size_t>(i)] = Sample{t, count(t)};
    } catch (...) {
#pragma omp critical(pcollapse_sample_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace pcollapse
