#include "bipfas/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <future>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "bipfas/c4free.hpp"
#include "bipfas/census.hpp"
#include "bipfas/engine.hpp"
#include "bipfas/error.hpp"
#include "bipfas/generate.hpp"
#include "bipfas/instance_io.hpp"
#include "bipfas/oracles.hpp"
#include "bipfas/packing.hpp"

namespace bipfas::cli {

using nlohmann::json;

namespace {

json to_json(std::span<const Arc> arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back(to_string(a));
  return out;
}

json to_json(const FourCycle& c) {
  json out = json::array();
  for (const VertexRef& v : c.v) out.push_back(to_string(v));
  return out;
}

json to_json(std::span<const FourCycle> cycles) {
  json out = json::array();
  for (const FourCycle& c : cycles) out.push_back(to_json(c));
  return out;
}

json to_json(const LinearOrder& order) {
  json out = json::array();
  for (const VertexRef& v : order.sequence()) out.push_back(to_string(v));
  return out;
}

json to_json(const std::vector<RecursionRecord>& trace) {
  json out = json::array();
  for (const RecursionRecord& r : trace) {
    out.push_back({{"depth", r.depth},
                   {"u", to_string(r.u)},
                   {"case", r.kind == RecursionCase::Direct ? "direct" : "reversed"},
                   {"first", r.first},
                   {"sec", r.sec},
                   {"cut", r.cut_size},
                   {"lambda", r.node_lambda},
                   {"lambda1", r.lambda1},
                   {"lambda2", r.lambda2}});
  }
  return out;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

BipartiteDigraph load_instance(const std::string& path) {
  return io::parse_instance(io::read_file(path));
}

/// Arc list from a certificate file: a JSON document with a "fas" array, a
/// bare JSON array, or whitespace-separated "x0>y1" tokens.
std::vector<Arc> load_arc_list(const std::string& path) {
  const std::string text = io::read_file(path);
  std::vector<Arc> arcs;
  const json doc = json::parse(text, nullptr, false);
  if (!doc.is_discarded() && (doc.is_object() || doc.is_array())) {
    if (doc.is_object() && !doc.contains("fas")) throw Error(ErrorCode::Parse, "no 'fas' key");
    const json& list = doc.is_object() ? doc["fas"] : doc;
    if (!list.is_array()) throw Error(ErrorCode::Parse, "'fas' is not an array");
    for (const json& a : list) {
      if (!a.is_string()) throw Error(ErrorCode::Parse, "arc entry is not a string");
      arcs.push_back(io::parse_arc(a.get<std::string>()));
    }
    return arcs;
  }
  std::istringstream in(text);
  std::string token;
  while (in >> token) arcs.push_back(io::parse_arc(token));
  return arcs;
}

/// Cycle list: a JSON document with a "packing" array (or a bare array) of
/// four-vertex arrays, or one whitespace-separated cycle per line.
std::vector<FourCycle> load_cycle_list(const std::string& path) {
  const std::string text = io::read_file(path);
  std::vector<FourCycle> cycles;
  auto to_cycle = [](const std::vector<std::string>& names) {
    if (names.size() != 4) throw Error(ErrorCode::Parse, "a 4-cycle needs four vertices");
    FourCycle c;
    for (std::size_t k = 0; k < 4; ++k) c.v[k] = io::parse_vertex(names[k]);
    return c;
  };
  const json doc = json::parse(text, nullptr, false);
  if (!doc.is_discarded() && (doc.is_object() || doc.is_array())) {
    if (doc.is_object() && !doc.contains("packing")) {
      throw Error(ErrorCode::Parse, "no 'packing' key");
    }
    const json& list = doc.is_object() ? doc["packing"] : doc;
    if (!list.is_array()) throw Error(ErrorCode::Parse, "'packing' is not an array");
    for (const json& c : list) {
      if (!c.is_array()) throw Error(ErrorCode::Parse, "cycle entry is not an array");
      std::vector<std::string> names;
      for (const json& v : c) {
        if (!v.is_string()) throw Error(ErrorCode::Parse, "vertex entry is not a string");
        names.push_back(v.get<std::string>());
      }
      cycles.push_back(to_cycle(names));
    }
    return cycles;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<std::string> names;
    std::string name;
    while (fields >> name) names.push_back(name);
    if (!names.empty()) cycles.push_back(to_cycle(names));
  }
  return cycles;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::DuplicatePair:
    case ErrorCode::OutOfRange:
    case ErrorCode::SameSideArc:
      return kUsage;
    case ErrorCode::InvariantViolation:
      return kInternal;
    default:
      return kPrecondition;
  }
}

// ---------------------------------------------------------------- commands

struct GenArgs {
  std::string mode;
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double bias = 0.5;
  std::size_t count = 1;
  std::string out;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  std::vector<BipartiteDigraph> instances;
  if (a.mode == "enumerate") {
    for (BipartiteDigraph d : gen::enumerate_bt(a.m, a.n)) instances.push_back(std::move(d));
  } else {
    for (std::size_t i = 0; i < a.count; ++i) {
      const gen::GenSpec spec{a.m, a.n, a.seed + i, a.bias};
      instances.push_back(a.mode == "random" ? gen::random_bt(spec) : gen::random_c4free(spec));
    }
  }

  if (a.out.empty()) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if (instances.size() > 1) out << "c instance " << i << "\n";
      out << io::render_instance(instances[i]);
    }
    return kOk;
  }

  json files = json::array();
  if (instances.size() == 1) {
    io::write_file(a.out, io::render_instance(instances.front()));
    files.push_back(a.out);
  } else {
    std::filesystem::create_directories(a.out);
    for (std::size_t i = 0; i < instances.size(); ++i) {
      std::ostringstream name;
      name << std::setw(6) << std::setfill('0') << i << ".bt";
      const std::string path = (std::filesystem::path(a.out) / name.str()).string();
      io::write_file(path, io::render_instance(instances[i]));
      files.push_back(path);
    }
  }
  emit(out, {{"mode", "gen"}, {"kind", a.mode}, {"count", instances.size()}, {"files", files}});
  return kOk;
}

int run_solve(const std::string& path, std::size_t k, bool trace, std::ostream& out) {
  const BipartiteDigraph t = load_instance(path);
  const SolveOutcome outcome = solve(t, k);
  json doc = {{"mode", "solve"}, {"k", k}, {"lambda", absent_pair_count(t)}};
  if (const auto* c = std::get_if<CycleCertificate>(&outcome)) {
    doc["branch"] = "packing";
    doc["packing"] = to_json(c->cycles);
    doc["bound"] = nullptr;
  } else {
    const FasResult& r = std::get<FasResult>(outcome);
    doc["branch"] = "fas";
    doc["fas"] = to_json(r.fas);
    doc["lemma_part"] = to_json(r.lemma_part);
    doc["backward_part"] = to_json(r.backward_part);
    doc["order"] = to_json(r.order);
    doc["packing"] = to_json(r.packing);
    doc["bound"] = r.bound;
    if (trace) doc["trace"] = to_json(r.lemma.trace);
  }
  emit(out, doc);
  return kOk;
}

int run_fas_c4free(const std::string& path, bool trace, std::ostream& out) {
  const BipartiteDigraph d = load_instance(path);
  const FasCertificate cert = fas_c4free(d);
  json doc = {{"mode", "fas-c4free"},
              {"branch", "fas"},
              {"lambda", absent_pair_count(d)},
              {"fas", to_json(cert.fas)},
              {"bound", cert.bound}};
  if (trace) doc["trace"] = to_json(cert.trace);
  emit(out, doc);
  return kOk;
}

int run_pack(const std::string& path, std::optional<std::size_t> limit, std::ostream& out) {
  const BipartiteDigraph d = load_instance(path);
  const Packing p = greedy_pack(d, limit);
  json doc = {{"mode", "pack"},
              {"lambda", absent_pair_count(d)},
              {"packing", to_json(p.cycles)},
              {"maximal", !find_4cycle(p.residual).has_value()},
              {"residual_lambda", absent_pair_count(p.residual)}};
  doc["limit"] = limit ? json(*limit) : json(nullptr);
  emit(out, doc);
  return kOk;
}

int run_oracle(const std::string& path, bool min_fas, std::size_t cap, std::ostream& out) {
  const BipartiteDigraph d = load_instance(path);
  json doc = {{"mode", "oracle"}, {"lambda", absent_pair_count(d)}};
  if (min_fas) {
    const oracle::MinFasResult r = oracle::min_fas_exact(d);
    doc["quantity"] = "min-fas";
    doc["value"] = r.value;
    doc["fas"] = to_json(r.witness);
  } else {
    const oracle::MaxPackingResult r = oracle::max_c4_packing_exact(d, cap);
    doc["quantity"] = "max-packing";
    doc["value"] = r.value;
    doc["packing"] = to_json(r.witness);
  }
  emit(out, doc);
  return kOk;
}

int run_verify(const std::string& path, const std::string& fas_file,
               const std::string& packing_file, std::optional<std::size_t> k,
               std::ostream& out, std::ostream& err) {
  const BipartiteDigraph d = load_instance(path);
  json doc = {{"mode", "verify"}, {"lambda", absent_pair_count(d)}};
  std::string reason;
  if (!fas_file.empty()) {
    std::vector<Arc> fas = load_arc_list(fas_file);
    doc["kind"] = "fas";
    doc["size"] = fas.size();
    std::sort(fas.begin(), fas.end());
    if (std::adjacent_find(fas.begin(), fas.end()) != fas.end()) {
      reason = "arc listed twice";
    } else if (auto missing = std::find_if(fas.begin(), fas.end(),
                                           [&](const Arc& a) { return !d.has_arc(a); });
               missing != fas.end()) {
      reason = "arc " + to_string(*missing) + " is not in the instance";
    } else if (!is_feedback_arc_set(d, fas)) {
      reason = "deleting the arcs leaves a cycle";
    }
    if (k) {
      const std::int64_t bound = 7 * (static_cast<std::int64_t>(*k) - 1);
      doc["bound"] = bound;
      if (reason.empty() && static_cast<std::int64_t>(fas.size()) > bound) {
        reason = "size exceeds 7(k-1)";
      }
    }
  } else {
    const std::vector<FourCycle> cycles = load_cycle_list(packing_file);
    doc["kind"] = "packing";
    doc["size"] = cycles.size();
    if (!is_valid_packing(d, cycles)) {
      reason = "not a set of arc-disjoint 4-cycles of the instance";
    } else if (k && cycles.size() < *k) {
      reason = "fewer than k cycles";
    }
    if (k) doc["k"] = *k;
  }
  doc["valid"] = reason.empty();
  if (!reason.empty()) doc["reason"] = reason;
  emit(out, doc);
  if (!reason.empty()) {
    err << "verification failed: " << reason << "\n";
    return kPrecondition;
  }
  return kOk;
}

int run_census(const std::string& path, std::ostream& out) {
  const BipartiteDigraph d = load_instance(path);
  const BipartiteDigraph r = reverse(d);
  json vertices = json::array();
  bool agree = true;
  for (const VertexRef& v : d.vertices()) {
    const std::size_t f = first_count(d, v);
    const std::size_t s = sec_count(d, v);
    const std::size_t fe = first_count_enumerated(d, v);
    const std::size_t se = sec_count_enumerated(d, v);
    agree = agree && f == fe && s == se;
    vertices.push_back({{"v", to_string(v)}, {"first", f}, {"sec", s}, {"first_enumerated", fe},
                        {"sec_enumerated", se}});
  }
  const CensusSums sums = census_sums(d);
  const CensusSums rsums = census_sums(r);
  const bool obs3 = sums.sum_first == sums.count2 && sums.sum_sec == sums.count3;
  const bool obs4 = sums.sum_first == rsums.sum_sec && sums.sum_sec == rsums.sum_first;
  emit(out, {{"mode", "census"},
             {"lambda", absent_pair_count(d)},
             {"p4_count", enumerate_induced_p4(d).size()},
             {"vertices", vertices},
             {"sum_first", sums.sum_first},
             {"sum_sec", sums.sum_sec},
             {"classes2", sums.count2},
             {"classes3", sums.count3},
             {"reverse_sum_first", rsums.sum_first},
             {"reverse_sum_sec", rsums.sum_sec},
             {"closed_form_agrees", agree},
             {"class_count_identity", obs3},
             {"reversal_sum_identity", obs4}});
  return agree && obs3 && obs4 ? kOk : kInternal;
}

// ---------------------------------------------------------------- selftest

enum Suite : std::size_t {
  kAcyclicity,
  kDichotomy,
  kFasVsPacking,
  kC4freeBound,
  kCensus,
  kSuiteCount
};

constexpr std::array<const char*, kSuiteCount> kSuiteNames = {
    "topological-order-vs-closure", "solve-dichotomy-k0-5", "min-fas-vs-packing",
    "c4free-bound", "census-identities"};

using Failures = std::array<std::size_t, kSuiteCount>;

Failures check_instance(const BipartiteDigraph& t) {
  Failures f{};
  auto guard = [&](Suite s, auto&& body) {
    try {
      if (!body()) ++f[s];
    } catch (const std::exception&) {
      ++f[s];
    }
  };
  const BipartiteDigraph residual = greedy_pack(t).residual;

  guard(kAcyclicity, [&] {
    return is_acyclic(t) != oracle::has_cycle_bruteforce(t) &&
           is_acyclic(residual) != oracle::has_cycle_bruteforce(residual);
  });
  guard(kDichotomy, [&] {
    for (std::size_t k = 0; k <= 5; ++k)
      if (!is_valid_outcome(t, solve(t, k))) return false;
    return true;
  });
  guard(kFasVsPacking, [&] {
    return oracle::min_fas_exact(t).value <= 7 * oracle::max_c4_packing_exact(t).value;
  });
  guard(kC4freeBound, [&] {
    const FasCertificate c = fas_c4free(residual, {.check_invariants = true});
    return c.fas.size() <= absent_pair_count(residual) && is_feedback_arc_set(residual, c.fas);
  });
  guard(kCensus, [&] {
    for (const BipartiteDigraph* g : {&t, &residual}) {
      const CensusSums s = census_sums(*g);
      const CensusSums r = census_sums(reverse(*g));
      if (s.sum_first != s.count2 || s.sum_sec != s.count3) return false;
      if (s.sum_first != r.sum_sec || s.sum_sec != r.sum_first) return false;
      for (const VertexRef& v : g->vertices()) {
        if (first_count(*g, v) != first_count_enumerated(*g, v)) return false;
        if (sec_count(*g, v) != sec_count_enumerated(*g, v)) return false;
      }
    }
    return true;
  });
  return f;
}

int run_selftest(std::size_t jobs, std::ostream& out) {
  jobs = std::max<std::size_t>(jobs, 1);
  json families = json::array();
  Failures total{};
  std::size_t instances = 0;
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const gen::TournamentRange range = gen::enumerate_bt(m, n);
      std::vector<std::future<Failures>> shards;
      for (std::size_t s = 0; s < jobs; ++s) {
        shards.push_back(std::async(std::launch::async, [&range, s, jobs] {
          Failures f{};
          for (std::uint64_t c = s; c < range.size(); c += jobs) {
            const Failures one = check_instance(range.at(c));
            for (std::size_t i = 0; i < kSuiteCount; ++i) f[i] += one[i];
          }
          return f;
        }));
      }
      Failures fam{};
      for (auto& shard : shards) {
        const Failures f = shard.get();
        for (std::size_t i = 0; i < kSuiteCount; ++i) fam[i] += f[i];
      }
      for (std::size_t i = 0; i < kSuiteCount; ++i) total[i] += fam[i];
      instances += range.size();
      families.push_back({{"m", m}, {"n", n}, {"instances", range.size()}});
    }
  }
  json suites = json::array();
  bool passed = true;
  for (std::size_t i = 0; i < kSuiteCount; ++i) {
    suites.push_back({{"name", kSuiteNames[i]}, {"failures", total[i]}});
    passed = passed && total[i] == 0;
  }
  emit(out, {{"mode", "selftest"},
             {"instances", instances},
             {"families", families},
             {"suites", suites},
             {"passed", passed}});
  return passed ? kOk : kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Options& options) {
  auto diag = [&](const std::string& msg) {
    if (options.color) {
      err << "\033[31merror:\033[0m " << msg << "\n";
    } else {
      err << "error: " << msg << "\n";
    }
  };

  CLI::App app{"Cycle packings and feedback arc sets in bipartite tournaments", "bipfas"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->add_option("mode", gen_args.mode, "random | random-c4free | enumerate")
      ->required()
      ->check(CLI::IsMember({"random", "random-c4free", "enumerate"}));
  gen->add_option("--m", gen_args.m, "Size of side X")->required();
  gen->add_option("--n", gen_args.n, "Size of side Y")->required();
  gen->add_option("--seed", gen_args.seed, "Seed (decimal, 64-bit)");
  gen->add_option("--bias", gen_args.bias, "Probability of an x->y orientation")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--count", gen_args.count, "Instances to generate (seeds seed..seed+count-1)")
      ->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_args.out, "Output file, or directory for several instances");

  std::string file;
  std::size_t k = 0;
  bool trace = false;
  auto* solve_cmd = app.add_subcommand("solve", "k arc-disjoint 4-cycles or a FAS of size <= 7(k-1)");
  solve_cmd->add_option("file", file, "Instance file ('-' for stdin)")->required();
  solve_cmd->add_option("--k", k, "Target number of cycles")->required();
  solve_cmd->add_flag("--trace", trace, "Include the decomposition trace");

  auto* c4free_cmd = app.add_subcommand("fas-c4free", "FAS of size <= Lambda for a 4-cycle-free graph");
  c4free_cmd->add_option("file", file, "Instance file ('-' for stdin)")->required();
  c4free_cmd->add_flag("--trace", trace, "Include the decomposition trace");

  std::optional<std::size_t> limit;
  auto* pack_cmd = app.add_subcommand("pack", "Greedy arc-disjoint 4-cycle packing");
  pack_cmd->add_option("file", file, "Instance file ('-' for stdin)")->required();
  pack_cmd->add_option("--limit", limit, "Stop after this many cycles");

  bool min_fas = false;
  bool max_packing = false;
  std::size_t cycle_cap = oracle::kDefaultCycleCap;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact (exponential-time) optima");
  oracle_cmd->add_option("file", file, "Instance file ('-' for stdin)")->required();
  auto* min_opt = oracle_cmd->add_flag("--min-fas", min_fas, "Minimum feedback arc set");
  auto* max_opt = oracle_cmd->add_flag("--max-packing", max_packing, "Maximum 4-cycle packing");
  min_opt->excludes(max_opt);
  oracle_cmd->add_option("--cycle-cap", cycle_cap, "Refuse packings over more 4-cycles than this");

  std::string fas_file;
  std::string packing_file;
  std::optional<std::size_t> verify_k;
  auto* verify_cmd = app.add_subcommand("verify", "Check a FAS or packing certificate");
  verify_cmd->add_option("file", file, "Instance file ('-' for stdin)")->required();
  auto* fas_opt = verify_cmd->add_option("--fas", fas_file, "FAS certificate file");
  auto* packing_opt = verify_cmd->add_option("--packing", packing_file, "Packing certificate file");
  fas_opt->excludes(packing_opt);
  verify_cmd->add_option("--k", verify_k, "Check |fas| <= 7(k-1) or |packing| >= k");

  auto* census_cmd = app.add_subcommand("census", "Per-vertex first/sec counts and their sums");
  census_cmd->add_option("file", file, "Instance file ('-' for stdin)")->required();

  std::size_t jobs = std::max(1U, std::thread::hardware_concurrency());
  auto* selftest_cmd = app.add_subcommand("selftest", "Exhaustive checks on every tournament with m, n <= 3");
  selftest_cmd->add_option("--jobs", jobs, "Worker threads");

  std::vector<char*> argv;
  std::vector<std::string> storage(args.begin(), args.end());
  if (storage.empty()) storage.emplace_back("bipfas");
  for (std::string& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    diag(e.what());
    return kUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args, out);
    if (solve_cmd->parsed()) return run_solve(file, k, trace, out);
    if (c4free_cmd->parsed()) return run_fas_c4free(file, trace, out);
    if (pack_cmd->parsed()) return run_pack(file, limit, out);
    if (oracle_cmd->parsed()) {
      if (!min_fas && !max_packing) {
        diag("oracle needs --min-fas or --max-packing");
        return kUsage;
      }
      return run_oracle(file, min_fas, cycle_cap, out);
    }
    if (verify_cmd->parsed()) {
      if (fas_file.empty() && packing_file.empty()) {
        diag("verify needs --fas or --packing");
        return kUsage;
      }
      return run_verify(file, fas_file, packing_file, verify_k, out, err);
    }
    if (census_cmd->parsed()) return run_census(file, out);
    if (selftest_cmd->parsed()) return run_selftest(jobs, out);
  } catch (const Error& e) {
    diag(e.what());
    return exit_for(e.code());
  } catch (const std::exception& e) {
    diag(e.what());
    return kInternal;
  }
  return kUsage;
}

}  // namespace bipfas::cli
