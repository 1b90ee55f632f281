// Acceptance suite: one PASS/FAIL line per criterion, each with a wall-clock
// limit. Exits 1 if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "bipfas/c4free.hpp"
#include "bipfas/census.hpp"
#include "bipfas/cli.hpp"
#include "bipfas/engine.hpp"
#include "bipfas/generate.hpp"
#include "bipfas/instance_io.hpp"
#include "bipfas/oracles.hpp"
#include "fixtures.hpp"

using namespace bipfas;

namespace {

/// Check count, failure count and the first failure message of a criterion.
struct Report {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<void(Report&)> body;
};

std::string seed_label(const char* kind, std::uint64_t seed) {
  return std::string(kind) + " seed " + std::to_string(seed);
}

// ------------------------------------------------------------------ criteria

void c4free_bound(Report& rep) {
  auto check_one = [&](const BipartiteDigraph& d, const std::string& label) {
    const FasCertificate c = fas_c4free(d, {.check_invariants = true});
    rep.check(c.fas.size() <= absent_pair_count(d), label + ": |fas| > lambda");
    rep.check(c.bound == absent_pair_count(d), label + ": bound != lambda");
    rep.check(!oracle::has_cycle_bruteforce(delete_arcs(d, c.fas)), label + ": residual cyclic");
  };
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const gen::GenSpec spec{2 + seed % 7, 2 + (seed / 7) % 7, seed, 0.5};
    check_one(gen::random_c4free(spec), seed_label("random_c4free", seed));
  }
  std::size_t c4free = 0;
  for (const BipartiteDigraph& t : gen::enumerate_bt(3, 3)) {
    if (find_4cycle(t)) continue;
    ++c4free;
    check_one(t, "3+3 tournament " + io::render_instance(t));
  }
  rep.check(c4free > 0, "no 4-cycle-free 3+3 tournament found");
}

void dichotomy(Report& rep) {
  auto check_one = [&](const BipartiteDigraph& t, const std::string& label) {
    for (std::size_t k = 0; k <= 5; ++k) {
      const std::string at = label + " k=" + std::to_string(k);
      const SolveOutcome out = solve(t, k);
      rep.check(is_valid_outcome(t, out), at + ": outcome failed verification");
      if (const auto* c = std::get_if<CycleCertificate>(&out)) {
        rep.check(c->cycles.size() >= k && is_valid_packing(t, c->cycles), at + ": bad packing");
        continue;
      }
      const FasResult& r = std::get<FasResult>(out);
      const std::int64_t slots = static_cast<std::int64_t>(k) - 1;
      rep.check(k >= 1, at + ": FAS branch at k = 0");
      rep.check(static_cast<std::int64_t>(r.fas.size()) <= 7 * slots, at + ": |fas| > 7(k-1)");
      rep.check(static_cast<std::int64_t>(r.lemma_part.size()) <= 4 * slots, at + ": |F| > 4(k-1)");
      rep.check(static_cast<std::int64_t>(r.backward_part.size()) <= 3 * slots,
                at + ": |F'| > 3(k-1)");
      rep.check(!oracle::has_cycle_bruteforce(delete_arcs(t, r.fas)), at + ": residual cyclic");
    }
  };
  for (const BipartiteDigraph& t : gen::enumerate_bt(3, 3)) check_one(t, "3+3 enumerated");
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    check_one(gen::random_bt({4 + seed % 3, 4 + (seed / 3) % 3, seed, 0.5}),
              seed_label("random_bt", seed));
  }
}

void corollary(Report& rep) {
  for (const auto& [m, n] : {std::pair<std::size_t, std::size_t>{3, 3}, {2, 3}}) {
    std::uint64_t code = 0;
    for (const BipartiteDigraph& t : gen::enumerate_bt(m, n)) {
      const std::size_t fas = oracle::min_fas_exact(t).value;
      const std::size_t pack = oracle::max_c4_packing_exact(t).value;
      rep.check(fas <= 7 * pack, std::to_string(m) + "+" + std::to_string(n) + " code " +
                                     std::to_string(code) + ": min fas > 7 max packing");
      ++code;
    }
  }
}

void census_identities(Report& rep) {
  std::vector<BipartiteDigraph> family;
  for (const BipartiteDigraph& t : gen::enumerate_bt(2, 2)) {
    const std::vector<Arc> arcs = t.arcs();
    family.push_back(t);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      family.push_back(delete_arcs(t, std::vector<Arc>{arcs[a]}));
      for (std::size_t b = a + 1; b < arcs.size(); ++b)
        family.push_back(delete_arcs(t, std::vector<Arc>{arcs[a], arcs[b]}));
    }
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i)
    family.push_back(fixtures::random_digraph(rng, 1 + rng() % 7, 1 + rng() % 7, 0.3));

  for (std::size_t idx = 0; idx < family.size(); ++idx) {
    const BipartiteDigraph& d = family[idx];
    const BipartiteDigraph r = reverse(d);
    const std::string label = "family member " + std::to_string(idx);
    const CensusSums s = census_sums(d);
    const CensusSums rs = census_sums(r);
    rep.check(s.sum_first == s.count2 && s.sum_sec == s.count3, label + ": sums != class counts");
    rep.check(s.sum_first == rs.sum_sec && s.sum_sec == rs.sum_first,
              label + ": reversal swaps sums failed");

    const auto c2 = classes2(d);
    const auto c3r = classes3(r);
    bool bijection = c2.size() == c3r.size();
    for (const auto& [k, members] : c2) {
      const auto it = c3r.find({k.fourth, k.third, k.first});
      if (it == c3r.end()) {
        bijection = false;
        break;
      }
      std::vector<P4> back;
      for (const P4& p : it->second) back.push_back(p.reversed());
      std::sort(back.begin(), back.end());
      bijection = bijection && back == members;
    }
    rep.check(bijection, label + ": class bijection under reversal failed");

    for (const VertexRef& v : d.vertices()) {
      rep.check(first_count(d, v) == first_count_enumerated(d, v),
                label + ": first mismatch at " + to_string(v));
      rep.check(sec_count(d, v) == sec_count_enumerated(d, v),
                label + ": sec mismatch at " + to_string(v));
    }
  }
}

std::string cli_output(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  std::vector<std::string> full{"bipfas"};
  full.insert(full.end(), args.begin(), args.end());
  cli::run(full, out, err);
  return out.str();
}

void hand_goldens(Report& rep) {
  const BipartiteDigraph six = fixtures::six_cycle();
  const FasCertificate c = fas_c4free(six);
  rep.check(absent_pair_count(six) == 3, "six-cycle lambda != 3");
  rep.check(c.fas == std::vector<Arc>{{xv(1), yv(1)}}, "six-cycle fas != {x1>y1}");
  rep.check(oracle::min_fas_exact(six).value == 1, "six-cycle exact minimum != 1");

  const SolveOutcome out = solve(fixtures::four_cycle_bt(), 2);
  const auto* r = std::get_if<FasResult>(&out);
  rep.check(r != nullptr, "4-cycle k=2 did not take the FAS branch");
  if (r) {
    rep.check(r->fas.size() == 2, "4-cycle k=2 |fas| != 2");
    rep.check(r->order.sequence() == std::vector<VertexRef>{xv(0), xv(1), yv(0), yv(1)},
              "4-cycle k=2 order != x0 x1 y0 y1");
  }

  const std::string dir = GOLDEN_DIR;
  const std::array<std::pair<std::vector<std::string>, const char*>, 4> files{{
      {{"solve", dir + "/four_cycle.bt", "--k", "2"}, "four_cycle_solve_k2.json"},
      {{"solve", dir + "/four_cycle.bt", "--k", "1"}, "four_cycle_solve_k1.json"},
      {{"fas-c4free", dir + "/six_cycle.bt", "--trace"}, "six_cycle_fas_trace.json"},
      {{"gen", "random", "--m", "2", "--n", "3", "--seed", "1"}, "random_2_3_seed1.bt"},
  }};
  for (const auto& [args, file] : files) {
    rep.check(cli_output(args) == io::read_file(dir + "/" + file),
              std::string("golden mismatch: ") + file);
  }
}

void backward_range(Report& rep) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t side = 2 + rng() % 4;
    std::vector<VertexRef> vs;
    for (std::size_t i = 0; i < side; ++i) {
      vs.push_back(xv(i));
      vs.push_back(yv(i));
    }
    std::shuffle(vs.begin(), vs.end(), rng);
    const std::size_t x = rng() % side;
    const std::size_t x2 = (x + 1 + rng() % (side - 1)) % side;
    const std::size_t y = rng() % side;
    const std::size_t y2 = (y + 1 + rng() % (side - 1)) % side;
    const std::size_t back =
        backward_arcs(LinearOrder(vs), {{xv(x), yv(y), xv(x2), yv(y2)}}).size();
    rep.check(back >= 1 && back <= 3, "trial " + std::to_string(trial) + ": " +
                                          std::to_string(back) + " backward arcs");
  }
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  if (status != 0) out += "<exit " + std::to_string(status) + ">";
  return out;
}

void duality_and_determinism(Report& rep) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const BipartiteDigraph d = fixtures::random_digraph(rng, 1 + rng() % 6, 1 + rng() % 6, 0.2);
    const std::vector<Arc> f = fixtures::random_arc_subset(rng, d, 0.3);
    std::vector<Arc> fr;
    for (const Arc& a : f) fr.push_back(a.reversed());
    rep.check(is_feedback_arc_set(d, f) == is_feedback_arc_set(reverse(d), fr),
              "trial " + std::to_string(trial) + ": duality failed");
  }

  const std::string exe = BIPFAS_EXE;
  for (const std::string& args :
       {std::string("gen random --m 6 --n 5 --seed 123456789 --count 3"),
        std::string("gen random-c4free --m 7 --n 7 --seed 18446744073709551615")}) {
    const std::string cmd = "'" + exe + "' " + args;
    const std::string a = capture(cmd);
    const std::string b = capture(cmd);
    rep.check(a == b && a.find("p bt") != std::string::npos, "nondeterministic: " + args);
  }
  const std::string pipeline = "'" + exe + "' gen random --m 6 --n 6 --seed 31 --bias 0.8 | '" +
                               exe + "' solve - --k 3 --trace";
  const std::string a = capture(pipeline);
  rep.check(a == capture(pipeline) && a.find("\"mode\": \"solve\"") != std::string::npos,
            "nondeterministic solve pipeline");
}

}  // namespace

int main() {
  const std::array<Criterion, 7> criteria{{
      {"1 fas_c4free size <= lambda, acyclic residual", 10.0, c4free_bound},
      {"2 solve dichotomy with component bounds, k = 0..5", 30.0, dichotomy},
      {"3 min fas <= 7 max packing on exhaustive families", 60.0, corollary},
      {"4 census identities and closed forms", 30.0, census_identities},
      {"5 hand-traced and CLI goldens", 1.0, hand_goldens},
      {"6 backward arcs of a 4-cycle in 1..3", 1.0, backward_range},
      {"7 reversal duality and cross-process determinism", 5.0, duality_and_determinism},
  }};

  int failed = 0;
  for (const Criterion& c : criteria) {
    Report rep;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(rep);
    } catch (const std::exception& e) {
      rep.check(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = rep.failures == 0 && in_time;
    failed += ok ? 0 : 1;

    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (ok ? "PASS " : "FAIL ") << c.name << " (" << rep.checks << " checks, " << secs
         << " s / limit " << c.limit_seconds << " s)";
    if (rep.failures > 0) line << " -- " << rep.failures << " failed, first: " << rep.first;
    if (!in_time) line << " -- over time limit";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
