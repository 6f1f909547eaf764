// pcollapse: command-line front end. JSON lines on stdout by default.
// Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pcollapse/counting.hpp"
#include "pcollapse/criteria.hpp"
#include "pcollapse/json_io.hpp"
#include "pcollapse/kernels.hpp"
#include "pcollapse/precursive.hpp"
#include "pcollapse/quasipoly.hpp"
#include "pcollapse/search.hpp"
#include "pcollapse/sequences.hpp"
#include "pcollapse/verify.hpp"

namespace pc = pcollapse;
using pc::json;

namespace {

constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Writes records as JSON lines or as CSV; the CSV header comes from the first record's keys.
class Emitter {
 public:
  explicit Emitter(bool csv) : csv_(csv) {}

  void emit(const json& record) {
    if (!csv_) {
      std::cout << record.dump() << '\n';
      return;
    }
    if (!header_written_) {
      std::string line;
      for (const auto& item : record.items()) line += (line.empty() ? "" : ",") + item.key();
      std::cout << line << '\n';
      header_written_ = true;
    }
    std::string line;
    bool first = true;
    for (const auto& item : record.items()) {
      if (!first) line += ',';
      first = false;
      line += cell(item.value());
    }
    std::cout << line << '\n';
  }

 private:
  static std::string cell(const json& v) {
    if (v.is_string()) return quote(v.get<std::string>());
    if (v.is_null()) return "";
    if (v.is_primitive()) return v.dump();
    return quote(v.dump());
  }
  static std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + '"';
  }

  bool csv_;
  bool header_written_ = false;
};

// Polytope selection shared by count, fit, period and guess-rec.
struct PolytopeArgs {
  std::string u, v, pqrs, legs, interval, sums;
  long alpha = 0, beta = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--u", u, "triangle parameter u (rational n/d or quadratic a:b:d)");
    cmd->add_option("--v", v, "triangle parameter v");
    cmd->add_option("--alpha", alpha, "admissible pair: u + v");
    cmd->add_option("--beta", beta, "admissible pair: 1/u + 1/v");
    cmd->add_option("--pqrs", pqrs, "rational triangle p,q,r,s with u = q/p, v = s/r");
    cmd->add_option("--legs", legs, "axis simplex legs, comma separated");
    cmd->add_option("--interval", interval, "interval lo,hi");
    cmd->add_option("--sums", sums, "triangle from u+v and 1/u+1/v, comma separated");
  }

  int chosen() const {
    return int(!u.empty() || !v.empty()) + int(alpha != 0 || beta != 0) + int(!pqrs.empty()) +
           int(!legs.empty()) + int(!interval.empty()) + int(!sums.empty());
  }

  std::optional<pc::AdmissiblePair> admissible() const {
    if (alpha == 0 && beta == 0) return std::nullopt;
    if (alpha < 1 || beta < 1) throw UsageError("--alpha and --beta must both be positive");
    return pc::admissible_from_alpha_beta(alpha, beta);
  }

  std::optional<pc::RationalTriangleParams> rational() const {
    if (pqrs.empty()) return std::nullopt;
    const auto parts = split(pqrs);
    if (parts.size() != 4) throw UsageError("--pqrs needs four integers");
    return pc::RationalTriangleParams::make(pc::Integer(parts[0]), pc::Integer(parts[1]), pc::Integer(parts[2]),
                                            pc::Integer(parts[3]));
  }

  // Describes the polytope and returns its counting function.
  std::pair<json, pc::CountFunction> resolve() const {
    if (chosen() != 1) throw UsageError("choose exactly one of --u/--v, --alpha/--beta, --pqrs, --legs, --interval, --sums");
    if (auto pair = admissible()) {
      const pc::TrianglePair triangle = pair->pair();
      return {pc::to_json(triangle), [triangle](std::int64_t t) { return pc::count_triangle(triangle, t); }};
    }
    if (auto params = rational()) {
      const pc::TrianglePair triangle = params->pair();
      return {pc::to_json(*params), [triangle](std::int64_t t) { return pc::count_triangle(triangle, t); }};
    }
    if (!legs.empty()) {
      std::vector<pc::QuadNumber> values;
      for (const auto& part : split(legs)) values.push_back(pc::parse_quad(part));
      const auto simplex = pc::AxisSimplex::make(std::move(values));
      return {pc::to_json(simplex), [simplex](std::int64_t t) { return pc::count_axis_simplex(simplex, t); }};
    }
    if (!interval.empty()) {
      const auto parts = split(interval);
      if (parts.size() != 2) throw UsageError("--interval needs lo,hi");
      const auto iv = pc::Interval::make(pc::parse_quad(parts[0]), pc::parse_quad(parts[1]));
      return {json{{"lo", pc::to_json(iv.lo)}, {"hi", pc::to_json(iv.hi)}},
              [iv](std::int64_t t) { return pc::count_interval(iv, t); }};
    }
    if (!sums.empty()) {
      const auto parts = split(sums);
      if (parts.size() != 2) throw UsageError("--sums needs sum,reciprocal_sum");
      const auto triangle = pc::triangle_from_sums(pc::parse_rational(parts[0]), pc::parse_rational(parts[1]));
      return {pc::to_json(triangle), [triangle](std::int64_t t) { return pc::count_triangle(triangle, t); }};
    }
    if (u.empty() || v.empty()) throw UsageError("--u and --v go together");
    const auto triangle = pc::TrianglePair::make(pc::parse_quad(u), pc::parse_quad(v));
    return {pc::to_json(triangle), [triangle](std::int64_t t) { return pc::count_triangle(triangle, t); }};
  }
};

std::vector<pc::Integer> values_of(const std::vector<pc::Sample>& samples) {
  std::vector<pc::Integer> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.value);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ehrhart counting, quasipolynomial fitting and period-collapse checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too
  std::string format = "json";
  int jobs = 0;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  // count
  auto* count_cmd = app.add_subcommand("count", "lattice points in the t-th dilate");
  PolytopeArgs count_args;
  count_args.attach(count_cmd);
  std::int64_t count_t = -1, count_from = 0, count_to = -1;
  bool count_interior = false;
  count_cmd->add_option("--t", count_t, "single dilation factor");
  count_cmd->add_option("--from", count_from, "first t of a range");
  count_cmd->add_option("--to", count_to, "last t of a range (inclusive)");
  count_cmd->add_flag("--interior", count_interior, "count strictly interior points (triangles only)");

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "fit a quasipolynomial to counts at t = 0..samples-1");
  PolytopeArgs fit_args;
  fit_args.attach(fit_cmd);
  std::int64_t fit_period = 1;
  int fit_degree = 2;
  std::int64_t fit_samples = 0;
  fit_cmd->add_option("--period", fit_period, "candidate period")->check(CLI::PositiveNumber);
  fit_cmd->add_option("--degree", fit_degree, "polynomial degree")->check(CLI::NonNegativeNumber);
  fit_cmd->add_option("--samples", fit_samples, "number of samples (default (degree+2)*period)");

  // period
  auto* period_cmd = app.add_subcommand("period", "minimal period via guaranteed-period fit");
  PolytopeArgs period_args;
  period_args.attach(period_cmd);
  int period_degree = 2;
  period_cmd->add_option("--degree", period_degree, "polynomial degree")->check(CLI::NonNegativeNumber);

  // check
  auto* check_cmd = app.add_subcommand("check", "evaluate a divisibility criterion");
  std::string criterion;
  PolytopeArgs check_args;
  std::string check_pq;
  check_cmd->add_option("--criterion", criterion, "collapse | pseudo-integral | reciprocal | classify")
      ->required()
      ->check(CLI::IsMember({"collapse", "pseudo-integral", "reciprocal", "classify"}));
  check_cmd->add_option("--pqrs", check_args.pqrs, "p,q,r,s for collapse and pseudo-integral");
  check_cmd->add_option("--pq", check_pq, "p,q for reciprocal");
  check_cmd->add_option("--alpha", check_args.alpha, "alpha for classify");
  check_cmd->add_option("--beta", check_args.beta, "beta for classify");

  // search
  auto* search_cmd = app.add_subcommand("search", "period-collapse sweep over rational triangles");
  long search_bound = 0;
  search_cmd->add_option("--bound", search_bound, "max of p, q, r, s")->required()->check(CLI::PositiveNumber);

  // fib
  auto* fib_cmd = app.add_subcommand("fib", "k-Fibonacci numbers, identities and triangles");
  long fib_k = 1, fib_n_max = 10;
  fib_cmd->add_option("--k", fib_k, "k")->check(CLI::PositiveNumber);
  fib_cmd->add_option("--n-max", fib_n_max, "last n")->check(CLI::NonNegativeNumber);

  // tetra
  auto* tetra_cmd = app.add_subcommand("tetra", "tetrahedron family counts against the cubic");
  long tetra_n = 1;
  bool tetra_limit = false;
  std::int64_t tetra_t_max = 10;
  tetra_cmd->add_option("--n", tetra_n, "family index")->check(CLI::PositiveNumber);
  tetra_cmd->add_flag("--limit", tetra_limit, "use the irrational limit tetrahedron");
  tetra_cmd->add_option("--t-max", tetra_t_max, "last t")->check(CLI::NonNegativeNumber);

  // guess-rec
  auto* rec_cmd = app.add_subcommand("guess-rec", "guess a P-recurrence for counts t = 0..t-max");
  PolytopeArgs rec_args;
  rec_args.attach(rec_cmd);
  std::int64_t rec_t_max = 60;
  int rec_order = 4, rec_degree = 0;
  rec_cmd->add_option("--t-max", rec_t_max, "last t")->check(CLI::NonNegativeNumber);
  rec_cmd->add_option("--max-order", rec_order, "order bound")->check(CLI::NonNegativeNumber);
  rec_cmd->add_option("--max-degree", rec_degree, "degree bound")->check(CLI::NonNegativeNumber);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite, "arith | closed-form | criteria | fibonacci | tetrahedra | reciprocity | recurrence | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  Emitter out(format == "csv");
  try {
    if (*count_cmd) {
      const auto [polytope, count] = count_args.resolve();
      if (count_t >= 0 && count_to >= 0) throw UsageError("use --t or --from/--to, not both");
      if (count_t < 0 && count_to < 0) throw UsageError("need --t or --to");
      const std::int64_t lo = count_t >= 0 ? count_t : count_from;
      const std::int64_t hi = count_t >= 0 ? count_t : count_to;
      if (lo < 0 || hi < lo) throw UsageError("empty t range");
      pc::CountFunction fn = count;
      if (count_interior) {
        auto pair = count_args.admissible();
        std::optional<pc::TrianglePair> triangle;
        if (pair) triangle = pair->pair();
        else if (auto params = count_args.rational()) triangle = params->pair();
        else if (!count_args.u.empty()) triangle = pc::TrianglePair::make(pc::parse_quad(count_args.u), pc::parse_quad(count_args.v));
        if (!triangle) throw UsageError("--interior applies to triangles only");
        if (lo < 1) throw UsageError("--interior needs t >= 1");
        fn = [t = *triangle](std::int64_t s) { return pc::count_triangle_interior(t, s); };
      }
      for (const auto& s : pc::collect_samples(fn, lo, hi + 1, jobs)) {
        out.emit(json{{"t", s.t}, {"count", pc::to_string(s.value)}});
      }
    } else if (*fit_cmd) {
      const auto [polytope, count] = fit_args.resolve();
      const std::int64_t n = fit_samples > 0 ? fit_samples : (fit_degree + 2) * fit_period;
      const auto samples = pc::collect_samples(count, 0, n, jobs);
      const auto qp = pc::fit_quasipolynomial(samples, fit_period, fit_degree);
      out.emit(json{{"polytope", polytope}, {"samples", n}, {"quasipolynomial", qp ? pc::to_json(*qp) : json()}});
    } else if (*period_cmd) {
      pc::PeriodResult result;
      json polytope;
      if (auto pair = period_args.admissible()) {
        polytope = pc::to_json(pair->pair());
        result = pc::minimal_period(*pair, period_degree, jobs);
      } else if (auto params = period_args.rational()) {
        polytope = pc::to_json(*params);
        result = pc::minimal_period(*params, period_degree, jobs);
        polytope["denominator"] = pc::to_string(pc::denominator(*params));
      } else {
        throw UsageError("period needs --alpha/--beta or --pqrs");
      }
      out.emit(json{{"polytope", polytope},
                    {"guaranteed_period", result.guaranteed_period},
                    {"minimal_period", result.minimal_period},
                    {"quasipolynomial", pc::to_json(result.quasipolynomial)}});
    } else if (*check_cmd) {
      if (criterion == "classify") {
        if (check_args.alpha < 1 || check_args.beta < 1) throw UsageError("classify needs --alpha and --beta");
        out.emit(json{{"alpha", check_args.alpha},
                      {"beta", check_args.beta},
                      {"class", pc::to_string(pc::classify_admissible(check_args.alpha, check_args.beta))}});
      } else if (criterion == "reciprocal") {
        const auto parts = split(check_pq);
        if (parts.size() != 2) throw UsageError("reciprocal needs --pq p,q");
        out.emit(pc::to_json(pc::check_reciprocal_criterion(pc::Integer(parts[0]), pc::Integer(parts[1]))));
      } else {
        const auto params = check_args.rational();
        if (!params) throw UsageError(criterion + " needs --pqrs");
        out.emit(pc::to_json(criterion == "collapse" ? pc::check_collapse_criterion(*params)
                                                     : pc::check_pseudo_integral_criterion(*params)));
      }
    } else if (*search_cmd) {
      if (format == "csv") std::cout << pc::search_csv_header() << '\n';
      pc::run_search(
          search_bound,
          [&](const pc::SearchRecord& record) {
            if (format == "csv") std::cout << pc::to_csv(record) << '\n';
            else std::cout << pc::to_json(record).dump() << '\n';
          },
          jobs);
    } else if (*fib_cmd) {
      for (long n = 0; n <= fib_n_max; ++n) {
        json record{{"k", fib_k}, {"n", n}, {"F", pc::to_string(pc::k_fib(fib_k, n))}};
        if (n >= 1) {
          record["coprime"] = pc::verify_coprimality(fib_k, n);
          record["identity"] = pc::verify_cassini(fib_k, n);
        }
        if (n >= 2) record["triangle"] = pc::to_json(pc::fib_triangle(fib_k, n));
        out.emit(record);
      }
    } else if (*tetra_cmd) {
      const auto simplex = tetra_limit ? pc::limit_tetrahedron() : pc::tetra_family(tetra_n);
      const auto samples = pc::collect_samples(
          [&simplex](std::int64_t t) { return pc::count_axis_simplex(simplex, t); }, 0, tetra_t_max + 1, jobs);
      bool all_match = true;
      for (const auto& s : samples) {
        const bool match = pc::Rational(s.value) == pc::tetra_polynomial(s.t);
        all_match = all_match && match;
        out.emit(json{{"t", s.t}, {"count", pc::to_string(s.value)}, {"matches_cubic", match}});
      }
      if (!all_match) return kVerificationFailure;
    } else if (*rec_cmd) {
      const auto [polytope, count] = rec_args.resolve();
      const auto values = values_of(pc::collect_samples(count, 0, rec_t_max + 1, jobs));
      const auto rec = pc::guess_recurrence(values, rec_order, rec_degree);
      out.emit(json{{"polytope", polytope},
                    {"n_values", values.size()},
                    {"recurrence", rec ? pc::to_json(*rec) : json()}});
    } else if (*verify_cmd) {
      if (!pc::is_suite_name(suite)) throw UsageError("unknown suite: " + suite);
      const auto report = pc::run_verify(suite, jobs);
      for (const auto& check : report.checks) out.emit(pc::to_json(check));
      return report.passed() ? 0 : kVerificationFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
