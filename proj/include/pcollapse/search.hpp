// Period-collapse sweep over rational triangles T_{q/p, s/r}.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pcollapse/json_io.hpp"
#include "pcollapse/polytopes.hpp"

namespace pcollapse {

struct SearchRecord {
  RationalTriangleParams params;
  Integer denominator;
  std::int64_t minimal_period = 1;
  bool criterion_predicted = false;
  bool collapse = false;  // minimal_period < denominator

  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

using SearchSink = std::function<void(const SearchRecord&)>;

/// Lowest-term tuples with every entry in [1, bound], lexicographic in (p, q, r, s).
std::vector<RationalTriangleParams> search_tuples(long bound);

SearchRecord search_record(const RationalTriangleParams& params);

/// Parallel sweep; records reach the sink in tuple order whatever the scheduling.
void run_search(long bound, const SearchSink& sink, int jobs = 0);

/// Single-threaded reference for run_search.
void run_search_serial(long bound, const SearchSink& sink);

json to_json(const SearchRecord& record);
SearchRecord search_record_from_json(const json& j);

/// Fixed CSV layout: p,q,r,s,denominator,minimal_period,criterion_predicted,collapse
std::string search_csv_header();
std::string to_csv(const SearchRecord& record);

}  // namespace pcollapse
