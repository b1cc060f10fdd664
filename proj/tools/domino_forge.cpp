// domino-forge: exact domino-tiling counts by cross-validating methods plus
// the per-tiling constructions (fault lines, traffic-rule Hamiltonian paths,
// side partitions) and figure rendering.
//
// JSON records go to stdout (one per line); human-readable summaries go to
// stderr. Exit codes: 0 ok, 1 usage, 2 inapplicable method/input,
// 3 precision exhausted, 4 cross-method mismatch, 5 search budget exhausted.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domino/board.hpp"
#include "domino/enumerate.hpp"
#include "domino/kasteleyn.hpp"
#include "domino/parallel.hpp"
#include "domino/paths.hpp"
#include "domino/reference.hpp"
#include "domino/render.hpp"
#include "domino/series.hpp"
#include "domino/transfer.hpp"

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitBudget = 5;

std::int64_t elapsed_ns(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                              start)
      .count();
}

domino::Tiling read_tiling_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domino::Error("cannot open tiling file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return domino::tiling_from_text(buf.str());
}

domino::PathVariant parse_variant(const std::string& s) {
  if (s == "A" || s == "a") return domino::PathVariant::A;
  if (s == "B" || s == "b") return domino::PathVariant::B;
  throw domino::Error("variant must be A or B");
}

// ---- count ----------------------------------------------------------------

const std::set<std::string> kMethods = {"oracle", "kasteleyn", "transfer",
                                        "compact", "gf",        "rec7",
                                        "rec20"};

// Width-6 family index n for the series-based methods, or nullopt when the
// board is not a 6 x even (or even x 6) rectangle.
std::optional<int> width6_index(int rows, int cols) {
  if (rows == 6 && cols % 2 == 0) return cols / 2;
  if (cols == 6 && rows % 2 == 0) return rows / 2;
  return std::nullopt;
}

mpz_class count_by_method(const std::string& method, int rows, int cols,
                          const domino::PrecisionConfig& precision) {
  if (method == "oracle") return domino::count_tilings_oracle({rows, cols});
  if (method == "kasteleyn") {
    if (rows % 2 != 0 || cols % 2 != 0)
      throw domino::Error("kasteleyn needs even rows and cols");
    return domino::kasteleyn_count({rows / 2, cols / 2}, precision);
  }
  if (method == "transfer") {
    const int width = std::min(rows, cols);
    return domino::count_via_transfer(width, std::max(rows, cols));
  }
  const auto n = width6_index(rows, cols);
  if (!n)
    throw domino::Error("method " + method +
                        " applies to 6 x even boards only");
  if (method == "compact")
    return domino::matrix_power_entry(
        domino::compact_matrix().to_big_matrix(),
        static_cast<std::uint64_t>(*n), 0, 0);
  if (method == "gf")
    return domino::series_expand(domino::gf6(),
                                 static_cast<std::size_t>(*n) + 1)
        .back();
  if (method == "rec7") {
    auto seed = domino::series_expand(domino::gf6(), 7);
    return domino::apply_recurrence(domino::recurrence_from_gf(domino::gf6()),
                                    seed, static_cast<std::size_t>(*n));
  }
  if (method == "rec20") {
    if (*n < 20)
      throw domino::Error(
          "rec20 extends the sequence from index 20; use rec7/gf below that");
    auto seed = domino::extend_sequence(
        domino::recurrence_from_gf(domino::gf6()),
        domino::series_expand(domino::gf6(), 7), 19);
    return domino::apply_recurrence(domino::symmetric_recurrence_order20(),
                                    seed, static_cast<std::size_t>(*n));
  }
  throw domino::Error("unknown method: " + method);
}

int cmd_count(int rows, int cols, const std::string& method,
              unsigned initial_bits, unsigned max_bits) {
  domino::PrecisionConfig precision{initial_bits, max_bits};
  const auto start = Clock::now();
  mpz_class value = count_by_method(method, rows, cols, precision);
  json record = {{"rows", rows},
                 {"cols", cols},
                 {"method", method},
                 {"count", value.get_str()},
                 {"elapsed_ns", elapsed_ns(start)}};
  std::cout << record.dump() << "\n";
  std::cerr << rows << "x" << cols << " via " << method << ": "
            << value.get_str() << "\n";
  return kExitOk;
}

// ---- sequence --------------------------------------------------------------

int cmd_sequence(int max_n) {
  const auto base = domino::compact_matrix().to_big_matrix();
  std::vector<mpz_class> via_compact;
  via_compact.reserve(static_cast<std::size_t>(max_n) + 1);
  via_compact.emplace_back(1);
  domino::BigMatrix power = base;
  for (int n = 1; n <= max_n; ++n) {
    if (n > 1) power = power.multiply(base);
    via_compact.push_back(power.at(0, 0));
  }

  auto rec7 = domino::recurrence_from_gf(domino::gf6());
  auto via_rec7 = domino::extend_sequence(
      rec7, domino::series_expand(domino::gf6(), 7),
      static_cast<std::size_t>(max_n));

  for (int n = 0; n <= max_n; ++n) {
    if (via_compact[static_cast<std::size_t>(n)] !=
        via_rec7[static_cast<std::size_t>(n)]) {
      std::cerr << "cross-method mismatch at n=" << n
                << ": compact=" << via_compact[static_cast<std::size_t>(n)]
                << " rec7=" << via_rec7[static_cast<std::size_t>(n)] << "\n";
      return kExitMismatch;
    }
  }

  json arr = json::array();
  for (auto& v : via_compact) arr.push_back(v.get_str());
  std::cout << arr.dump() << "\n";
  std::cerr << "c_0..c_" << max_n << " agree across compact and rec7\n";
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifySink {
  int passed = 0;
  int failed = 0;

  void check(const std::string& scope, const std::string& name, bool ok,
             const json& detail = json::object()) {
    json record = {{"scope", scope},
                   {"check", name},
                   {"status", ok ? "pass" : "fail"}};
    if (!detail.empty()) record["detail"] = detail;
    std::cout << record.dump() << "\n";
    ok ? ++passed : ++failed;
    if (!ok) std::cerr << "FAIL [" << scope << "] " << name << "\n";
  }
};

void verify_counts(VerifySink& sink) {
  bool kasteleyn_vs_oracle = true;
  for (int r = 1; r <= 5 && kasteleyn_vs_oracle; ++r)
    for (int n = 1; n <= 5; ++n) {
      if (domino::kasteleyn_count({r, n}) !=
          domino::count_tilings_oracle({2 * r, 2 * n})) {
        kasteleyn_vs_oracle = false;
        break;
      }
    }
  sink.check("counts", "kasteleyn equals oracle on even boards up to 10x10",
             kasteleyn_vs_oracle);

  bool kasteleyn_vs_table = true;
  for (int n = 1; n <= 8; ++n)
    kasteleyn_vs_table =
        kasteleyn_vs_table && domino::kasteleyn_count({3, n}) ==
                                  domino::known_width6_counts()[n];
  sink.check("counts", "kasteleyn matches the width-6 table through c_8",
             kasteleyn_vs_table);

  auto box = domino::kasteleyn_product_interval({3, 3}, 128);
  mpz_class lo_ceil, hi_floor;
  mpz_cdiv_q(lo_ceil.get_mpz_t(), box.lo.get_num_mpz_t(),
             box.lo.get_den_mpz_t());
  mpz_fdiv_q(hi_floor.get_mpz_t(), box.hi.get_num_mpz_t(),
             box.hi.get_den_mpz_t());
  sink.check("counts", "the 6x6 enclosure isolates 6728",
             lo_ceil == 6728 && hi_floor == 6728,
             {{"lo_ceil", lo_ceil.get_str()},
              {"hi_floor", hi_floor.get_str()}});

  bool transfer_vs_oracle = true;
  for (int w = 1; w <= 8 && transfer_vs_oracle; ++w)
    for (int c = 1; c <= 12; ++c)
      if (domino::count_via_transfer(w, c) !=
          domino::count_tilings_oracle({c, w})) {
        transfer_vs_oracle = false;
        break;
      }
  sink.check("counts", "transfer equals oracle for widths <= 8, cols <= 12",
             transfer_vs_oracle);

  bool transpose_ok = true;
  for (int r = 1; r <= 8 && transpose_ok; ++r)
    for (int c = 1; c <= 8; ++c)
      if (domino::count_tilings_oracle({r, c}) !=
          domino::count_tilings_oracle({c, r})) {
        transpose_ok = false;
        break;
      }
  sink.check("counts", "oracle transposition symmetry up to 8x8",
             transpose_ok);
}

void verify_matrix(VerifySink& sink, const std::string& fixture_path) {
  auto c = domino::compact_matrix();
  sink.check("matrix", "fixture is symmetric", c.is_symmetric());
  sink.check("matrix", "trace is 63", c.trace() == 63,
             {{"trace", c.trace()}});
  auto big = c.to_big_matrix();
  auto sq = big.multiply(big);
  sink.check("matrix", "(C^2)[0][0] is 281", sq.at(0, 0) == 281,
             {{"value", sq.at(0, 0).get_str()}});
  auto det = domino::determinant(big);
  sink.check("matrix", "determinant is 1", det == 1,
             {{"det", det.get_str()}});
  auto poly = domino::char_poly(c);
  sink.check("matrix", "characteristic polynomial matches the reference",
             poly == domino::expected_compact_char_poly());
  sink.check("matrix", "characteristic polynomial is palindromic",
             domino::is_palindromic(poly));

  // Cayley-Hamilton by Horner over exact integers.
  domino::BigMatrix horner = domino::BigMatrix::identity(20);
  for (int i = 19; i >= 0; --i) {
    horner = horner.multiply(big);
    const mpz_class& coeff = poly.coeffs[static_cast<std::size_t>(i)];
    for (int d = 0; d < 20; ++d) horner.at(d, d) += coeff;
  }
  sink.check("matrix", "Cayley-Hamilton evaluates to the zero matrix",
             horner.is_zero());

  auto report = domino::verify_compact(c, 30);
  sink.check("matrix", "(C^n)[0][0] equals the transfer count for n <= 30",
             report.ok,
             {{"checked", report.checked},
              {"first_mismatch", report.first_mismatch}});

  if (!fixture_path.empty()) {
    bool loaded_ok = false;
    std::string error;
    try {
      loaded_ok = domino::load_compact_matrix(fixture_path) == c;
    } catch (const domino::Error& e) {
      error = e.what();
    }
    sink.check("matrix", "fixture asset matches the built-in matrix",
               loaded_ok, {{"path", fixture_path}, {"error", error}});
  }
}

void verify_series(VerifySink& sink, unsigned seed) {
  const auto& table = domino::known_width6_counts();
  auto expansion = domino::series_expand(domino::gf6(), 18);
  bool expand_ok = true;
  for (std::size_t i = 0; i < table.size(); ++i)
    expand_ok = expand_ok && expansion[i] == table[i];
  sink.check("series", "gf expansion reproduces c_0..c_17", expand_ok);

  auto rec7 = domino::recurrence_from_gf(domino::gf6());
  auto extended = domino::extend_sequence(
      rec7, std::vector<mpz_class>(expansion.begin(), expansion.begin() + 7),
      100);
  auto long_expansion = domino::series_expand(domino::gf6(), 101);
  sink.check("series", "rec7 extension matches the expansion through n=100",
             extended == long_expansion);

  std::vector<mpz_class> transfer_seq;
  for (int n = 0; n <= 30; ++n)
    transfer_seq.push_back(domino::count_via_transfer(6, 2 * n));

  auto rec20 = domino::symmetric_recurrence_order20();
  bool relation_ok = true;
  for (std::size_t m = 20; m <= 30; ++m) {
    mpz_class predicted = 0;
    for (std::size_t k = 1; k <= 20; ++k)
      predicted += rec20.coeffs[k - 1] * transfer_seq[m - k];
    relation_ok = relation_ok && predicted == transfer_seq[m];
  }
  sink.check("series",
             "symmetric order-20 relation holds at centers n = 10..20",
             relation_ok);

  auto bad = domino::symmetric_recurrence_order20_uncorrected();
  mpz_class bad_c20 = domino::apply_recurrence(
      bad, std::vector<mpz_class>(transfer_seq.begin(),
                                  transfer_seq.begin() + 20),
      20);
  sink.check("series", "uncorrected recurrence variant fails (as expected)",
             bad_c20 != transfer_seq[20]);

  bool limit_ok = false;
  try {
    limit_ok = domino::u_identity_value(mpq_class(1)) == mpq_class(2, 13);
  } catch (const domino::Error&) {
  }
  sink.check("series", "u-identity limit value at x=1 is 2/13", limit_ok);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 1000);
  std::bernoulli_distribution flip(0.5);
  bool points_ok = true;
  for (int i = 0; i < 20; ++i) {
    mpq_class x(dist(rng), dist(rng));
    x.canonicalize();
    if (flip(rng)) x = -x;
    points_ok = points_ok && domino::check_u_identity(x);
  }
  sink.check("series", "u-identity holds at 20 seeded rational points",
             points_ok, {{"seed", seed}});
}

void verify_paths6x6(VerifySink& sink) {
  const auto start = Clock::now();
  auto tilings = domino::enumerate_tilings({6, 6}, {10000});
  sink.check("paths6x6", "enumeration yields exactly 6728 tilings",
             tilings.size() == 6728, {{"count", tilings.size()}});

  std::set<std::string> distinct;
  for (const auto& t : tilings) distinct.insert(domino::tiling_to_text(t));
  sink.check("paths6x6", "all tilings are distinct",
             distinct.size() == tilings.size());

  std::mutex mu;
  std::uint64_t fault_failures = 0, path_failures = 0, check_failures = 0,
                partition_failures = 0, unique_a = 0, unique_b = 0;
  const unsigned workers = domino::resolve_worker_count();
  domino::parallel_for_index(
      tilings.size(), workers, [&](std::size_t i) {
        const domino::Tiling& t = tilings[i];
        std::uint64_t faults = 0, paths = 0, checks = 0, partitions = 0,
                      uniq_a = 0, uniq_b = 0;
        if (domino::find_fault_lines(t).empty()) ++faults;
        for (auto v : {domino::PathVariant::A, domino::PathVariant::B}) {
          auto p = domino::hamiltonian_path(t, v);
          if (!p) {
            ++paths;
            continue;
          }
          if (!domino::is_valid_traffic_path(t, v, *p)) ++checks;
          auto sp = domino::side_partition(t, *p);
          if (sp.groups.size() != 2 || sp.total_dominoes() != 18)
            ++partitions;
          unsigned found = domino::count_hamiltonian_paths(
              t, v, domino::kDefaultSearchBudget, 2);
          if (found == 1)
            v == domino::PathVariant::A ? ++uniq_a : ++uniq_b;
        }
        std::lock_guard<std::mutex> lock(mu);
        fault_failures += faults;
        path_failures += paths;
        check_failures += checks;
        partition_failures += partitions;
        unique_a += uniq_a;
        unique_b += uniq_b;
      });

  sink.check("paths6x6", "every tiling has at least one fault line",
             fault_failures == 0, {{"violations", fault_failures}});
  sink.check("paths6x6", "both path variants found for every tiling",
             path_failures == 0, {{"violations", path_failures}});
  sink.check("paths6x6", "independent checker accepts every path",
             check_failures == 0, {{"violations", check_failures}});
  sink.check("paths6x6",
             "every side partition has exactly 2 groups summing to 18",
             partition_failures == 0, {{"violations", partition_failures}});
  json census = {{"variant_a_unique", unique_a},
                 {"variant_b_unique", unique_b},
                 {"tilings", tilings.size()},
                 {"workers", workers},
                 {"elapsed_ns", elapsed_ns(start)}};
  sink.check("paths6x6", "path uniqueness census recorded", true, census);
  std::cerr << "paths6x6: census unique A=" << unique_a
            << " B=" << unique_b << " of " << tilings.size() << " tilings ("
            << workers << " workers)\n";
}

int cmd_verify(const std::string& scope, unsigned seed,
               const std::string& fixture_path) {
  VerifySink sink;
  if (scope == "counts" || scope == "all") verify_counts(sink);
  if (scope == "matrix" || scope == "all") verify_matrix(sink, fixture_path);
  if (scope == "series" || scope == "all") verify_series(sink, seed);
  if (scope == "paths6x6" || scope == "all") verify_paths6x6(sink);
  std::cerr << "verify " << scope << ": " << sink.passed << "/"
            << (sink.passed + sink.failed) << " checks passed\n";
  return sink.failed == 0 ? kExitOk : kExitMismatch;
}

// ---- bench -----------------------------------------------------------------

int cmd_bench(const std::vector<int>& ns, const std::vector<std::string>& ms) {
  std::map<int, std::vector<mpz_class>> values;
  for (int n : ns) {
    for (const std::string& method : ms) {
      const auto start = Clock::now();
      mpz_class value;
      std::uint64_t ops = 0;
      std::string ops_unit;
      if (method == "compact") {
        domino::PowerStats stats;
        value = domino::matrix_power_entry(
            domino::compact_matrix().to_big_matrix(),
            static_cast<std::uint64_t>(n), 0, 0, &stats);
        ops = stats.multiplications;
        ops_unit = "matrix_mults";
      } else if (method == "rec7") {
        auto seed = domino::series_expand(domino::gf6(), 7);
        value = domino::apply_recurrence(
            domino::recurrence_from_gf(domino::gf6()), seed,
            static_cast<std::size_t>(n));
        ops = n > 6 ? static_cast<std::uint64_t>(n - 6) : 0;
        ops_unit = "recurrence_steps";
      } else if (method == "gf") {
        value = domino::series_expand(domino::gf6(),
                                      static_cast<std::size_t>(n) + 1)
                    .back();
        ops = static_cast<std::uint64_t>(n) + 1;
        ops_unit = "series_terms";
      } else {
        throw domino::Error("bench methods: compact, rec7, gf");
      }
      values[n].push_back(value);
      json record = {{"method", method},
                     {"n", n},
                     {"elapsed_ns", elapsed_ns(start)},
                     {"ops", ops},
                     {"ops_unit", ops_unit},
                     {"digits", value.get_str().size()}};
      std::cout << record.dump() << "\n";
    }
  }
  for (auto& [n, vals] : values)
    for (auto& v : vals)
      if (v != vals.front()) {
        std::cerr << "methods disagree at n=" << n << "\n";
        return kExitMismatch;
      }
  std::cerr << "bench: all methods agree on the computed terms\n";
  return kExitOk;
}

// ---- enumerate / faults / hampath / render ----------------------------------

int cmd_enumerate(int rows, int cols, std::uint64_t cap, bool as_text) {
  auto tilings = domino::enumerate_tilings({rows, cols}, {cap});
  for (std::size_t i = 0; i < tilings.size(); ++i) {
    if (as_text) {
      if (i) std::cout << "\n";
      std::cout << domino::tiling_to_text(tilings[i]);
    } else {
      json record = {{"index", i},
                     {"text", domino::tiling_to_text(tilings[i])}};
      std::cout << record.dump() << "\n";
    }
  }
  std::cerr << rows << "x" << cols << ": " << tilings.size() << " tilings\n";
  return kExitOk;
}

int cmd_faults(const std::string& file) {
  auto t = read_tiling_file(file);
  auto faults = domino::find_fault_lines(t);
  std::cout << domino::fault_lines_to_json(faults) << "\n";
  std::cerr << faults.size() << " fault line(s)\n";
  return kExitOk;
}

int cmd_hampath(const std::string& file, const std::string& variant,
                std::uint64_t budget) {
  auto t = read_tiling_file(file);
  const auto v = parse_variant(variant);
  domino::SearchStats stats;
  auto p = domino::hamiltonian_path(t, v, budget, &stats);
  if (!p) {
    std::cout << "null\n";
    std::cerr << "no path (search space exhausted, absence proved)\n";
    return kExitOk;
  }
  std::cout << domino::grid_path_to_json(*p) << "\n";
  std::cerr << p->vertices.size() << " vertices, "
            << stats.expansions << " expansions\n";
  return kExitOk;
}

int cmd_render(const std::string& file, const std::string& svg_out,
               const std::string& variant, bool with_faults,
               bool with_orientations, int cell_size,
               std::uint64_t budget) {
  auto t = read_tiling_file(file);
  std::optional<domino::GridPath> path;
  if (!variant.empty()) {
    path = domino::hamiltonian_path(t, parse_variant(variant), budget);
    if (!path) throw domino::Error("no traffic-rule path for this tiling");
  }
  if (svg_out.empty()) {
    std::cout << domino::render_ascii(t, path ? &*path : nullptr);
    return kExitOk;
  }
  domino::RenderOptions opts;
  opts.cell_size = cell_size;
  opts.show_path = path.has_value();
  opts.show_fault_lines = with_faults;
  opts.show_orientations = with_orientations;
  auto faults = domino::find_fault_lines(t);
  const std::string svg =
      domino::render_svg(t, path ? &*path : nullptr, &faults, opts);
  std::ofstream out(svg_out, std::ios::binary);
  if (!out) throw domino::Error("cannot write " + svg_out);
  out << svg;
  out.close();
  json record = {{"svg", svg_out}, {"bytes", svg.size()}};
  std::cout << record.dump() << "\n";
  std::cerr << "wrote " << svg_out << " (" << svg.size() << " bytes)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact domino tiling counts and constructions"};
  app.require_subcommand(1);

  // count
  int rows = 0, cols = 0;
  std::string method = "transfer";
  unsigned initial_bits = 64, max_bits = 1u << 20;
  auto* count = app.add_subcommand("count", "count tilings of a board");
  count->add_option("rows", rows, "board rows")->required();
  count->add_option("cols", cols, "board cols")->required();
  count->add_option("--method", method, "counting method")
      ->check(CLI::IsMember(kMethods));
  count->add_option("--initial-bits", initial_bits,
                    "kasteleyn starting precision");
  count->add_option("--max-bits", max_bits, "kasteleyn precision ceiling");

  // sequence
  int seq_n = 17;
  auto* sequence =
      app.add_subcommand("sequence", "width-6 counts c_0..c_N, cross-checked");
  sequence->add_option("N", seq_n, "last index")->required();

  // verify
  std::string scope = "all";
  unsigned seed = 0;
  std::string fixture_path;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("scope", scope, "counts|matrix|series|paths6x6|all")
      ->check(CLI::IsMember(
          std::set<std::string>{"counts", "matrix", "series", "paths6x6",
                                "all"}));
  verify->add_option("--seed", seed, "seed for the randomized checks");
  verify->add_option("--fixture", fixture_path,
                     "compact matrix fixture asset to cross-check");

  // bench
  std::vector<int> bench_ns;
  std::vector<std::string> bench_methods;
  auto* bench = app.add_subcommand("bench", "method timing comparison");
  bench->add_option("--n", bench_ns, "sequence indices");
  bench->add_option("--method", bench_methods, "methods: compact, rec7, gf");

  // enumerate
  int e_rows = 0, e_cols = 0;
  std::uint64_t cap = 1'000'000;
  bool as_text = false;
  auto* enumerate = app.add_subcommand("enumerate", "list all tilings");
  enumerate->add_option("rows", e_rows)->required();
  enumerate->add_option("cols", e_cols)->required();
  enumerate->add_option("--cap", cap, "refuse boards with more tilings");
  enumerate->add_flag("--text", as_text, "raw text blocks instead of JSON");

  // faults
  std::string faults_file;
  auto* faults = app.add_subcommand("faults", "fault lines of a tiling file");
  faults->add_option("file", faults_file)->required();

  // hampath
  std::string ham_file, ham_variant = "A";
  std::uint64_t budget = domino::kDefaultSearchBudget;
  auto* hampath =
      app.add_subcommand("hampath", "traffic-rule Hamiltonian path");
  hampath->add_option("file", ham_file)->required();
  hampath->add_option("--variant", ham_variant, "A or B");
  hampath->add_option("--budget", budget, "node expansion budget");

  // render
  std::string render_file, svg_out, render_variant;
  bool with_faults = false, with_orientations = false;
  int cell_size = 40;
  auto* render = app.add_subcommand("render", "ASCII art or SVG figure");
  render->add_option("file", render_file)->required();
  render->add_option("--svg", svg_out, "write an SVG file here");
  render->add_option("--variant", render_variant,
                     "overlay this path variant (A or B)");
  render->add_flag("--show-faults", with_faults, "overlay fault lines (SVG)");
  render->add_flag("--show-orientations", with_orientations,
                   "overlay traffic arrows (SVG)");
  render->add_option("--cell-size", cell_size, "cell size in pixels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed())
      return cmd_count(rows, cols, method, initial_bits, max_bits);
    if (sequence->parsed()) return cmd_sequence(seq_n);
    if (verify->parsed()) return cmd_verify(scope, seed, fixture_path);
    if (bench->parsed()) {
      if (bench_ns.empty()) bench_ns = {64, 256, 1024, 4096};
      if (bench_methods.empty()) bench_methods = {"compact", "rec7", "gf"};
      return cmd_bench(bench_ns, bench_methods);
    }
    if (enumerate->parsed()) return cmd_enumerate(e_rows, e_cols, cap, as_text);
    if (faults->parsed()) return cmd_faults(faults_file);
    if (hampath->parsed()) return cmd_hampath(ham_file, ham_variant, budget);
    if (render->parsed())
      return cmd_render(render_file, svg_out, render_variant, with_faults,
                        with_orientations, cell_size, budget);
  } catch (const domino::SearchExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const domino::PrecisionExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const domino::AreaTooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const domino::WidthTooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const domino::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const domino::OddDimensionsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const domino::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const domino::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInapplicable;
  }
  return kExitUsage;
}
