#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "emptybox/bounds.hpp"
#include "emptybox/finder.hpp"
#include "emptybox/generators.hpp"
#include "emptybox/io.hpp"
#include "emptybox/oracle.hpp"
#include "emptybox/partitions.hpp"

namespace {

using nlohmann::json;

// Flag misuse that CLI11 cannot catch statically; exits with the usage code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json box_json(const emptybox::AxisBox& box) {
  return {{"lo", box.lo()}, {"hi", box.hi()}, {"volume", box.volume()}};
}

std::string box_text(const emptybox::AxisBox& box) {
  std::string out;
  for (std::size_t i = 0; i < box.dim(); ++i)
    out += "  axis " + std::to_string(i) + ": (" +
           emptybox::format_double(box.lo()[i]) + ", " +
           emptybox::format_double(box.hi()[i]) + ")\n";
  return out;
}

// ---------------------------------------------------------------------------
// shared point input: either a CSV file or one of the generators

struct PointSource {
  std::string input;
  std::string generate;
  std::size_t n = 0;
  std::size_t d = 2;
  std::size_t side = 0;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* d_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--input", input, "point CSV file, '-' for stdin");
    cmd->add_option("--generate", generate,
                    "generate the input instead of reading it")
        ->check(CLI::IsMember({"hammersley", "random", "grid"}));
    cmd->add_option("--n", n, "point count (hammersley, random)");
    d_opt = cmd->add_option("--d", d, "dimension (generators; also the "
                                      "dimension hint for empty CSV input)");
    cmd->add_option("--side", side, "points per axis (grid)");
    seed_opt = cmd->add_option("--seed", seed, "PRNG seed (random)");
  }

  emptybox::PointSet load() const {
    if (!input.empty() && !generate.empty())
      throw UsageError("give --input or --generate, not both");
    if (!input.empty()) {
      const std::size_t hint = d_opt->count() ? d : 0;
      if (input == "-") return emptybox::read_points_csv(std::cin, hint);
      return emptybox::read_points_csv_file(input, hint);
    }
    if (generate == "hammersley") return emptybox::hammersley(n, d);
    if (generate == "random") {
      if (!seed_opt->count())
        throw UsageError("--generate random requires --seed");
      return emptybox::random_uniform(n, d, seed);
    }
    if (generate == "grid") {
      if (side == 0) throw UsageError("--generate grid requires --side");
      return emptybox::grid_points(side, d);
    }
    throw UsageError("no input: give --input FILE or --generate KIND");
  }

  std::vector<std::string> metadata() const {
    if (generate == "hammersley")
      return {"generator=hammersley n=" + std::to_string(n)};
    if (generate == "random")
      return {"generator=random n=" + std::to_string(n) +
              " seed=" + std::to_string(seed)};
    if (generate == "grid")
      return {"generator=grid side=" + std::to_string(side)};
    return {};
  }
};

// ---------------------------------------------------------------------------
// family input: partition lines ("1,2|3,4") or vector lines ("0011")

struct FamilySource {
  std::string input;
  std::string kind = "auto";

  void attach(CLI::App* cmd) {
    cmd->add_option("--input", input, "family file, '-' for stdin")
        ->required();
    cmd->add_option("--kind", kind, "input syntax")
        ->check(CLI::IsMember({"auto", "partitions", "vectors"}));
  }

  std::string slurp() const {
    if (input == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      return buf.str();
    }
    std::ifstream f(input);
    if (!f) throw std::runtime_error("cannot open '" + input + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
  }

  // Partition lines carry ',' or '|'; vector lines are bare symbol strings.
  static bool looks_like_partitions(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return line.find_first_of(",|") != std::string::npos;
    }
    throw std::runtime_error("family input has no data lines");
  }

  emptybox::PartitionFamily load_partitions() const {
    const std::string text = slurp();
    std::istringstream in(text);
    if (kind == "partitions" ||
        (kind == "auto" && looks_like_partitions(text)))
      return emptybox::read_partition_family(in);
    return emptybox::vectors_to_partitions(emptybox::read_vector_family(in));
  }

  emptybox::VectorFamily load_vectors() const {
    const std::string text = slurp();
    std::istringstream in(text);
    if (kind == "partitions" ||
        (kind == "auto" && looks_like_partitions(text)))
      return emptybox::partitions_to_vectors(
          emptybox::read_partition_family(in));
    return emptybox::read_vector_family(in);
  }
};

json witness_json(const emptybox::CoverageWitness& w) {
  std::vector<std::size_t> lines;
  lines.reserve(w.indices.size());
  for (std::size_t i : w.indices) lines.push_back(i + 1);  // 1-based for files
  return {{"vectors", lines}, {"alpha", w.alpha}};
}

// ---------------------------------------------------------------------------

void run_find_box(const PointSource& src, const std::string& format) {
  const emptybox::PointSet s = src.load();
  const emptybox::FinderResult r = emptybox::find_large_empty_box(s);
  const double guarantee = emptybox::volume_lower_bound(s.size(), s.dim());

  json cert;
  if (!r.certificate) {
    cert = {{"case", "WHOLE_SLAB"}};
  } else {
    cert = {{"case", emptybox::to_string(r.certificate->kind)},
            {"axis_i", r.certificate->axis_i}};
    if (r.certificate->kind == emptybox::CollisionCase::DuplicatePair) {
      cert["axis_j"] = r.certificate->axis_j;
      cert["uncovered_combo"] = "01";
    }
  }

  if (format == "json") {
    json j{{"box", box_json(r.box)},
           {"certificate", cert},
           {"certificate_case", cert["case"]},
           {"d", s.dim()},
           {"guarantee", guarantee},
           {"n", s.size()},
           {"slab",
            {{"index", r.slab.slab_index},
             {"k", r.slab.k},
             {"ell", r.slab.ell},
             {"points_inside", r.slab.inside.size()}}},
           {"volume", r.box.volume()}};
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "n: " << s.size() << "  d: " << s.dim() << "\n"
            << "volume: " << emptybox::format_double(r.box.volume()) << "\n"
            << "guarantee: " << emptybox::format_double(guarantee) << "\n"
            << "certificate: " << cert["case"].get<std::string>();
  if (cert.contains("axis_i")) std::cout << "  axis " << r.certificate->axis_i;
  if (cert.contains("axis_j"))
    std::cout << " and " << r.certificate->axis_j << " (uncovered 01)";
  std::cout << "\nslab: index " << r.slab.slab_index << " of "
            << r.slab.k + 1 << ", " << r.slab.inside.size()
            << " points inside\nbox:\n"
            << box_text(r.box);
}

void run_oracle(const PointSource& src, double budget_flag, bool budget_set,
                const std::string& format) {
  const emptybox::PointSet s = src.load();
  emptybox::OracleBudget budget;
  if (budget_set) {
    budget.max_candidates = budget_flag;
  } else if (const char* env = std::getenv("EMPTYBOX_BUDGET")) {
    budget.max_candidates = emptybox::parse_double(env);
  }
  const emptybox::AxisBox box = emptybox::max_empty_box_exact(s, budget);
  if (format == "json") {
    json j{{"box", box_json(box)},
           {"d", s.dim()},
           {"n", s.size()},
           {"volume", box.volume()}};
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "n: " << s.size() << "  d: " << s.dim() << "\n"
            << "volume: " << emptybox::format_double(box.volume()) << "\n"
            << "box:\n"
            << box_text(box);
}

void run_generate(const PointSource& src, const std::string& output) {
  if (src.generate.empty())
    throw UsageError("generate needs --generate KIND");
  const emptybox::PointSet s = src.load();
  if (output.empty() || output == "-") {
    emptybox::write_points_csv(std::cout, s, src.metadata());
    return;
  }
  std::ofstream f(output);
  if (!f) throw std::runtime_error("cannot open '" + output + "'");
  emptybox::write_points_csv(f, s, src.metadata());
}

void run_verify(const FamilySource& src, unsigned t,
                const std::string& format) {
  const emptybox::VectorFamily vf = src.load_vectors();
  const emptybox::PerfectnessReport report = emptybox::verify_perfect(vf, t);
  if (format == "json") {
    json j{{"is_perfect", report.is_perfect},
           {"k", vf.size()},
           {"n", vf.length()},
           {"a", vf.alphabet()},
           {"t", report.t}};
    if (report.witness) j["witness"] = witness_json(*report.witness);
    std::cout << j.dump() << "\n";
    return;
  }
  if (report.is_perfect) {
    std::cout << "perfect at t=" << t << " (" << vf.size() << " vectors, n="
              << vf.length() << ", a=" << vf.alphabet() << ")\n";
  } else {
    std::cout << "NOT perfect at t=" << t << ": vectors";
    for (std::size_t i : report.witness->indices) std::cout << ' ' << i + 1;
    std::cout << " never realize \"" << report.witness->alpha << "\"\n";
  }
}

void print_family(const emptybox::PartitionFamily& pf,
                  const std::string& format) {
  if (format == "json") {
    std::vector<std::string> lines;
    lines.reserve(pf.size());
    for (const auto& p : pf.members())
      lines.push_back(emptybox::partition_to_string(p));
    json j{{"a", pf.parts()},
           {"n", pf.ground()},
           {"size", pf.size()},
           {"partitions", lines}};
    std::cout << j.dump() << "\n";
    return;
  }
  emptybox::write_partition_family(std::cout, pf);
}

void run_random_family(unsigned a, unsigned t, std::uint32_t n, std::size_t k,
                       std::uint64_t seed, unsigned max_attempts,
                       const std::string& format) {
  const emptybox::RandomFamilySearch r =
      emptybox::random_perfect_family(a, t, n, k, seed, max_attempts);
  if (format == "json") {
    json j{{"a", a},     {"t", t},
           {"n", n},     {"k", k},
           {"seed", seed}, {"attempts", r.attempts},
           {"succeeded", r.family.has_value()}};
    if (r.family) {
      std::vector<std::string> lines;
      for (const auto& v : r.family->vectors()) {
        std::string line;
        for (std::uint8_t s : v) line += emptybox::symbol_char(s);
        lines.push_back(std::move(line));
      }
      j["vectors"] = lines;
    } else if (r.last_witness) {
      j["last_witness"] = witness_json(*r.last_witness);
    }
    std::cout << j.dump() << "\n";
  } else if (r.family) {
    emptybox::write_vector_family(std::cout, *r.family);
  } else {
    std::cout << "no perfect family after " << r.attempts << " attempts\n";
  }
  if (!r.family) {
    std::cerr << "error: no perfect family within " << max_attempts
              << " attempts\n";
    std::exit(1);
  }
}

json pbounds_json(const emptybox::PBoundsReport& r) {
  return {{"a", r.a},
          {"t", r.t},
          {"n", r.n},
          {"b", r.b},
          {"k", r.k},
          {"lower", r.lower.str()},
          {"upper", r.upper.str()},
          {"lower_formula", r.lower_formula},
          {"upper_formula", r.upper_formula}};
}

void print_pbounds(const emptybox::PBoundsReport& r,
                   const std::string& format) {
  if (format == "json") {
    std::cout << pbounds_json(r).dump() << "\n";
    return;
  }
  std::cout << r.lower.str() << " <= p(" << r.a << "," << r.t << "," << r.n
            << ") <= " << r.upper.str() << "\n"
            << "lower: " << r.lower_formula << "\n"
            << "upper: " << r.upper_formula << "\n";
}

void run_p(unsigned a, unsigned t, std::uint32_t n, bool exact, double budget,
           const std::string& format) {
  if (exact) {
    const std::size_t p = emptybox::brute_force_p(a, t, n, budget);
    if (format == "json") {
      json j{{"a", a}, {"t", t}, {"n", n}, {"p", p}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "p(" << a << "," << t << "," << n << ") = " << p << "\n";
    }
    return;
  }
  print_pbounds(emptybox::p_bounds(static_cast<int>(a), static_cast<int>(t),
                                   n),
                format);
}

void run_lym(const FamilySource& src, const std::string& format) {
  const emptybox::PartitionFamily pf = src.load_partitions();
  const emptybox::PerfectnessReport check = emptybox::verify_perfect(pf, 2);
  if (!check.is_perfect) {
    std::string msg =
        "family is not pairwise properly overlapping (partitions";
    for (std::size_t i : check.witness->indices)
      msg += ' ' + std::to_string(i + 1);
    msg += " miss \"" + check.witness->alpha + "\")";
    throw std::runtime_error(msg);
  }
  const double sum = emptybox::lym_check(pf);
  if (format == "json") {
    json j{{"a", pf.parts()},
           {"n", pf.ground()},
           {"members", pf.size()},
           {"sum", sum}};
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "sum: " << emptybox::format_double(sum) << "\n";
}

void run_volume_lower(std::uint64_t n, std::uint64_t d,
                      const std::string& format) {
  const double bound = emptybox::volume_lower_bound(n, d);
  if (format == "json") {
    json j{{"n", n}, {"d", d}, {"bound", bound}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << emptybox::format_double(bound) << "\n";
  }
}

void run_volume_upper(std::uint64_t d, const std::string& format) {
  const emptybox::BigInt c = emptybox::volume_upper_bound_const(d);
  if (format == "json") {
    json j{{"d", d}, {"constant", c.str()}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << c.str() << "\n";
  }
}

void run_table1(const std::string& format) {
  json rows = json::array();
  for (int a : {2, 3, 4, 10}) {
    const emptybox::AsymptoticBases b = emptybox::asymptotic_bases(a, 2);
    rows.push_back({{"a", a},
                    {"block_base", b.block_base},
                    {"lambda1", b.lambda1},
                    {"lambda2", b.lambda2}});
  }
  if (format == "json") {
    std::cout << json{{"rows", rows}}.dump() << "\n";
    return;
  }
  std::cout << "a   block_base  lambda1    lambda2\n";
  for (const auto& r : rows) {
    char line[128];
    std::snprintf(line, sizeof line, "%-3d %-11.5f %-10.5f %.5f\n",
                  r["a"].get<int>(), r["block_base"].get<double>(),
                  r["lambda1"].get<double>(), r["lambda2"].get<double>());
    std::cout << line;
  }
}

void run_bench(const std::vector<std::size_t>& ns,
               const std::vector<std::size_t>& ds, std::uint64_t seed,
               unsigned repeats) {
  std::cout << "n,d,millis\n";
  double checksum = 0.0;
  for (std::size_t d : ds)
    for (std::size_t n : ns) {
      const emptybox::PointSet s = emptybox::random_uniform(n, d, seed);
      double best = -1.0;
      for (unsigned r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        const emptybox::FinderResult result =
            emptybox::find_large_empty_box(s);
        const auto stop = std::chrono::steady_clock::now();
        checksum += result.box.volume();
        const double ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        if (best < 0 || ms < best) best = ms;
      }
      std::cout << n << ',' << d << ',' << emptybox::format_double(best)
                << "\n";
    }
  std::cerr << "# volume checksum: " << emptybox::format_double(checksum)
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "empty axis-parallel boxes in the unit cube and properly overlapping "
      "partitions: finder, exact oracle, generators, constructions, bounds"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  // find-box
  auto* find_cmd = app.add_subcommand(
      "find-box", "find a provably large empty box (certificated)");
  PointSource find_src;
  find_src.attach(find_cmd);
  find_cmd->callback([&] { run_find_box(find_src, format); });

  // oracle
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "exact maximum empty box by full enumeration (small inputs)");
  PointSource oracle_src;
  oracle_src.attach(oracle_cmd);
  double budget = 1e8;
  auto* budget_opt = oracle_cmd->add_option(
      "--budget", budget,
      "candidate-count budget (overrides EMPTYBOX_BUDGET)");
  oracle_cmd->callback([&] {
    run_oracle(oracle_src, budget, budget_opt->count() > 0, format);
  });

  // generate
  auto* gen_cmd =
      app.add_subcommand("generate", "emit a point set as CSV");
  PointSource gen_src;
  gen_src.attach(gen_cmd);
  std::string gen_output;
  gen_cmd->add_option("--output", gen_output, "output file (default stdout)");
  gen_cmd->callback([&] { run_generate(gen_src, gen_output); });

  // partitions
  auto* part_cmd = app.add_subcommand(
      "partitions", "perfect vector families / properly overlapping "
                    "partitions");
  part_cmd->require_subcommand(1);

  auto* verify_cmd = part_cmd->add_subcommand(
      "verify", "check the t-wise covering condition");
  FamilySource verify_src;
  verify_src.attach(verify_cmd);
  unsigned verify_t = 2;
  verify_cmd->add_option("--t", verify_t, "tuple size")
      ->capture_default_str();
  verify_cmd->callback([&] { run_verify(verify_src, verify_t, format); });

  auto* opt_cmd = part_cmd->add_subcommand(
      "construct-optimal",
      "optimal binary family: all floor(n/2)-subsets containing 1");
  std::uint32_t opt_n = 0;
  opt_cmd->add_option("--n", opt_n, "ground-set size")->required();
  opt_cmd->callback(
      [&] { print_family(emptybox::construct_binary_optimal(opt_n), format); });

  auto* block_cmd = part_cmd->add_subcommand(
      "construct-block", "block family over C(a,2) blocks");
  unsigned block_a = 0;
  std::uint32_t block_n = 0;
  block_cmd->add_option("--a", block_a, "parts per partition")->required();
  block_cmd->add_option("--n", block_n, "ground-set size")->required();
  block_cmd->callback([&] {
    print_family(emptybox::construct_block_family(block_a, block_n), format);
  });

  auto* rand_cmd = part_cmd->add_subcommand(
      "random", "seeded random search for a perfect family");
  unsigned rand_a = 2, rand_t = 2, rand_attempts = 10;
  std::uint32_t rand_n = 0;
  std::size_t rand_k = 0;
  std::uint64_t rand_seed = 0;
  rand_cmd->add_option("--a", rand_a, "alphabet size")->capture_default_str();
  rand_cmd->add_option("--t", rand_t, "tuple size")->capture_default_str();
  rand_cmd->add_option("--n", rand_n, "vector length")->required();
  rand_cmd->add_option("--k", rand_k, "family size")->required();
  rand_cmd->add_option("--seed", rand_seed, "PRNG seed")->required();
  rand_cmd->add_option("--max-attempts", rand_attempts, "redraw limit")
      ->capture_default_str();
  rand_cmd->callback([&] {
    run_random_family(rand_a, rand_t, rand_n, rand_k, rand_seed,
                      rand_attempts, format);
  });

  auto* p_cmd = part_cmd->add_subcommand(
      "p", "maximum perfect-family size: exact search or closed-form bounds");
  unsigned p_a = 2, p_t = 2;
  std::uint32_t p_n = 0;
  bool p_exact = false;
  double p_budget = 0;
  p_cmd->add_option("--a", p_a, "alphabet size")->capture_default_str();
  p_cmd->add_option("--t", p_t, "tuple size")->capture_default_str();
  p_cmd->add_option("--n", p_n, "vector length")->required();
  p_cmd->add_flag("--exact", p_exact, "run the exact brute-force search");
  p_cmd->add_option("--budget", p_budget,
                    "a^n budget for --exact (0 = mode default)");
  p_cmd->callback([&] { run_p(p_a, p_t, p_n, p_exact, p_budget, format); });

  auto* lym_cmd = part_cmd->add_subcommand(
      "lym", "antichain-style sum over all parts of a verified family");
  FamilySource lym_src;
  lym_src.attach(lym_cmd);
  lym_cmd->callback([&] { run_lym(lym_src, format); });

  // bounds
  auto* bounds_cmd =
      app.add_subcommand("bounds", "closed-form bounds and bases");
  bounds_cmd->require_subcommand(1);

  auto* vl_cmd = bounds_cmd->add_subcommand(
      "volume-lower", "guaranteed empty-box volume for n points in d dims");
  std::uint64_t vl_n = 0, vl_d = 0;
  vl_cmd->add_option("--n", vl_n, "point count")->required();
  vl_cmd->add_option("--d", vl_d, "dimension")->required();
  vl_cmd->callback([&] { run_volume_lower(vl_n, vl_d, format); });

  auto* vu_cmd = bounds_cmd->add_subcommand(
      "volume-upper", "constant C with max empty box < C/n on low-"
                      "discrepancy sets");
  std::uint64_t vu_d = 0;
  vu_cmd->add_option("--d", vu_d, "dimension")->required();
  vu_cmd->callback([&] { run_volume_upper(vu_d, format); });

  auto* ps_cmd = bounds_cmd->add_subcommand(
      "p-sandwich", "closed-form lower/upper bounds on p(a,t,n)");
  int ps_a = 2, ps_t = 2;
  std::uint64_t ps_n = 0;
  ps_cmd->add_option("--a", ps_a, "alphabet size")->capture_default_str();
  ps_cmd->add_option("--t", ps_t, "tuple size")->capture_default_str();
  ps_cmd->add_option("--n", ps_n, "vector length")->required();
  ps_cmd->callback(
      [&] { print_pbounds(emptybox::p_bounds(ps_a, ps_t, ps_n), format); });

  auto* t1_cmd = bounds_cmd->add_subcommand(
      "table1", "asymptotic growth bases for a in {2,3,4,10}");
  t1_cmd->callback([&] { run_table1(format); });

  // bench
  auto* bench_cmd = app.add_subcommand(
      "bench", "timing sweep of find-box over n and d (CSV: n,d,millis)");
  std::vector<std::size_t> bench_n{250000, 500000, 1000000};
  std::vector<std::size_t> bench_d{64};
  std::uint64_t bench_seed = 0;
  unsigned bench_repeats = 3;
  bench_cmd->add_option("--n", bench_n, "point counts")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--d", bench_d, "dimensions")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "PRNG seed")->required();
  bench_cmd->add_option("--repeats", bench_repeats, "best-of repeats")
      ->capture_default_str();
  bench_cmd->callback(
      [&] { run_bench(bench_n, bench_d, bench_seed, bench_repeats); });

  // accept the global --format after a subcommand as well
  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (CLI::App* leaf : sub->get_subcommands(nullptr)) leaf->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
