#include "pcollapse/search.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <numeric>

#include "pcollapse/criteria.hpp"
#include "pcollapse/kernels.hpp"
#include "pcollapse/quasipoly.hpp"

namespace pcollapse {

namespace {

constexpr std::size_t kBlock = 256;

}  // namespace

std::vector<RationalTriangleParams> search_tuples(long bound) {
  if (bound < 1) throw std::invalid_argument("search bound must be at least 1");
  std::vector<std::pair<long, long>> coprime;
  for (long a = 1; a <= bound; ++a) {
    for (long b = 1; b <= bound; ++b) {
      if (std::gcd(a, b) == 1) coprime.emplace_back(a, b);
    }
  }
  std::vector<RationalTriangleParams> out;
  out.reserve(coprime.size() * coprime.size());
  for (const auto& [p, q] : coprime) {
    for (const auto& [r, s] : coprime) out.push_back(RationalTriangleParams{p, q, r, s});
  }
  return out;
}

SearchRecord search_record(const RationalTriangleParams& params) {
  const auto period = minimal_period(params, 2, 1);
  SearchRecord record{params, denominator(params), period.minimal_period,
                      check_collapse_criterion(params).all_hold(), false};
  record.collapse = record.denominator > period.minimal_period;
  return record;
}

void run_search_serial(long bound, const SearchSink& sink) {
  for (const auto& params : search_tuples(bound)) sink(search_record(params));
}

void run_search(long bound, const SearchSink& sink, int jobs) {
  const auto tuples = search_tuples(bound);
  const int threads = jobs > 0 ? jobs : default_jobs();
  std::vector<SearchRecord> block(kBlock);
  for (std::size_t start = 0; start < tuples.size(); start += kBlock) {
    const std::size_t n = std::min(kBlock, tuples.size() - start);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
    for (std::size_t i = 0; i < n; ++i) {
      try {
        block[i] = search_record(tuples[start + i]);
      } catch (...) {
#pragma omp critical(pcollapse_search_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (std::size_t i = 0; i < n; ++i) sink(block[i]);
  }
}

json to_json(const SearchRecord& record) {
  json out = to_json(record.params);
  out["denominator"] = to_string(record.denominator);
  out["minimal_period"] = record.minimal_period;
  out["criterion_predicted"] = record.criterion_predicted;
  out["collapse"] = record.collapse;
  return out;
}

SearchRecord search_record_from_json(const json& j) {
  SearchRecord record;
  record.params = rational_params_from_json(j);
  record.denominator = Integer(j.at("denominator").get<std::string>());
  record.minimal_period = j.at("minimal_period").get<std::int64_t>();
  record.criterion_predicted = j.at("criterion_predicted").get<bool>();
  record.collapse = j.at("collapse").get<bool>();
  return record;
}

std::string search_csv_header() { return "p,q,r,s,denominator,minimal_period,criterion_predicted,collapse"; }

std::string to_csv(const SearchRecord& record) {
  const auto& [p, q, r, s] = record.params;
  return to_string(p) + "," + to_string(q) + "," + to_string(r) + "," + to_string(s) + "," +
         to_string(record.denominator) + "," + std::to_string(record.minimal_period) + "," +
         (record.criterion_predicted ? "true" : "false") + "," + (record.collapse ? "true" : "false");
}

}  // namespace pcollapse
