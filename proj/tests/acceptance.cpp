// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any blocking criterion fails.

#include <algorithm>
#include <array>
#include <cstdio>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lin3/bounds.hpp"
#include "lin3/codec.hpp"
#include "lin3/constructions.hpp"
#include "lin3/counts_table.hpp"
#include "lin3/error.hpp"
#include "lin3/io.hpp"
#include "lin3/search.hpp"
#include "support/oracles.hpp"

using namespace lin3;

namespace {

// Exact values from the brute-force oracle in tests/oracles/frozen_values.py.
const std::map<int, long> kPaving{{3, 1}, {4, 5}, {5, 31}, {6, 352}, {7, 8389}};
const std::map<int, long> kLinear{{3, 2}, {4, 5}, {5, 26}, {6, 271}, {7, 5596}};

struct Outcome {
  bool pass = true;
  std::string summary;
  std::ostringstream log;  // exact outputs, compared across worker counts

  void require(bool ok, const std::string& what) {
    if (!ok && pass) summary = "first failure: " + what;
    pass = pass && ok;
  }
};

struct PavingList {
  std::vector<PavingLines> items;
  PavingList& operator+=(const PavingList& o) {
    items.insert(items.end(), o.items.begin(), o.items.end());
    return *this;
  }
};

struct SystemList {
  std::vector<TripleSystem> items;
  SystemList& operator+=(const SystemList& o) {
    items.insert(items.end(), o.items.begin(), o.items.end());
    return *this;
  }
};

std::vector<PavingLines> all_paving(int n, const SearchBudget& b) {
  return fold_paving<PavingList>(n, b, [](PavingList& acc, const PavingLines& p) { acc.items.push_back(p); })
      .items;
}

std::vector<TripleSystem> all_linear(int n, const SearchBudget& b) {
  return fold_linear_systems<SystemList>(n, SystemPredicate::all(), b, [](SystemList& acc, const TripleSystem& h) {
           acc.items.push_back(h);
         }).items;
}

bool linear_ok(const TripleSystem& h) {
  try {
    std::vector<Triple> edges(h.edges().begin(), h.edges().end());
    return TripleSystem::make(h.n(), edges) == h;
  } catch (const Error&) {
    return false;
  }
}

bool isomorphic_by_matcher(const TripleSystem& a, const TripleSystem& b) {
  if (a.n() != b.n() || a.size() != b.size()) return false;
  return contains_pattern(a, Pattern{"target", b}, MatchMode::Induced);
}

std::vector<PavingLines> codec_corpus(const SearchBudget& b, std::size_t& enumerated) {
  std::vector<PavingLines> corpus;
  for (int n = 3; n <= 7; ++n) {
    auto ps = all_paving(n, b);
    corpus.insert(corpus.end(), ps.begin(), ps.end());
  }
  enumerated = corpus.size();
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10000; ++i) corpus.push_back(oracle::random_paving(9, rng, 3 + i % 12));
  return corpus;
}

// ---------------------------------------------------------------------------

void c1_round_trip(Outcome& o, const SearchBudget& b) {
  for (int n = 3; n <= 7; ++n) {
    const auto count = all_paving(n, b).size();
    o.log << "p(" << n << ")=" << count << ' ';
    o.require(static_cast<long>(count) == kPaving.at(n), "paving enumeration size at n=" + std::to_string(n));
  }
  std::size_t enumerated = 0;
  const auto corpus = codec_corpus(b, enumerated);
  std::size_t failures = 0;
  for (const auto& p : corpus)
    if (decode(encode(p)) != p) ++failures;
  o.log << "failures=" << failures;
  o.require(failures == 0, "decode(encode(P)) != P");
  o.summary = o.pass ? std::to_string(enumerated) + " enumerated + 10000 random at n=9, 0 failures" : o.summary;
}

void c2_validity(Outcome& o, const SearchBudget& b) {
  std::size_t enumerated = 0;
  const auto corpus = codec_corpus(b, enumerated);
  std::size_t failures = 0;
  for (const auto& p : corpus) {
    const auto pair = encode(p);
    if (!linear_ok(pair.even) || !linear_ok(pair.odd)) ++failures;
    if (p.n() >= 4) {
      std::vector<PointSet> even;
      std::vector<PointSet> odd;
      for (const auto& t : pair.even.edges()) even.push_back({t.v.begin(), t.v.end()});
      for (const auto& t : pair.odd.edges()) odd.push_back({t.v.begin(), t.v.end()});
      try {
        validate_sparse(p.n(), 3, even);
        validate_sparse(p.n(), 3, odd);
      } catch (const Error&) {
        ++failures;
      }
    }
  }
  o.log << "failures=" << failures;
  o.require(failures == 0, "an encoded half is not linear");
  if (o.pass) o.summary = std::to_string(corpus.size()) + " encodings, both halves linear and sparse";
}

void c3_freeness(Outcome& o, const SearchBudget& b) {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t oracle_mismatch = 0;
  for (int n = 4; n <= 7; ++n)
    for (const auto& p : all_paving(n, b)) {
      if (!is_x_free(p)) continue;
      ++checked;
      const auto pair = encode(p);
      for (const auto* half : {&pair.even, &pair.odd}) {
        const auto s = sparse_from_hypergraph(*half);
        if (!is_x_free(s)) ++failures;
        if (n <= 6 && !oracle::x_free_by_permutations(s)) ++oracle_mismatch;
      }
    }
  o.log << "x-free=" << checked << " failures=" << failures << " oracle=" << oracle_mismatch;
  o.require(failures == 0 && oracle_mismatch == 0, "a half of an X-free matroid has a W3/M(K4) restriction");
  if (o.pass) o.summary = std::to_string(checked) + " X-free matroids on n<=7, both halves X-free";
}

void c4_pair_bound(Outcome& o, const SearchBudget& b) {
  std::ostringstream values;
  for (int n = 4; n <= 7; ++n) {
    const auto p = count_paving(n, PavingPredicate::XFree, b);
    const auto s = count_linear_systems(n, SystemPredicate::rs(), b);
    CountsTable t;
    t.put({n, 3, std::string(classes::kPavingX)}, p, "exhaustive");
    t.put({n, 3, std::string(classes::kSparsePavingX)}, s, "exhaustive");
    const auto rep = pair_encoding_bound(t, n);
    o.log << "n=" << n << ":" << p << "<=" << rep.right << ' ';
    values << " n=" << n << ": " << p << " <= " << s << "^2=" << rep.right << ";";
    o.require(rep.holds(), "p_X > s_X^2 at n=" + std::to_string(n));
  }
  if (o.pass) o.summary = "p_X(n,3) <= s_X(n,3)^2:" + values.str();
}

void c5_equivalences(Outcome& o, const SearchBudget&) {
  const std::array<Pattern, 2> x{whirl3(), mk4()};
  std::size_t systems = 0;
  std::size_t bad = 0;
  auto test = [&](const TripleSystem& h) {
    ++systems;
    const bool six = oracle::six_sets_span_at_most_two(h);
    const bool w3_free = !contains_pattern(h, whirl3(), MatchMode::Subgraph);
    const bool induced = is_free(h, x, MatchMode::Induced);
    bool ok = six == is_rs(h) && six == w3_free && six == induced;
    if (h.n() >= 4) ok = ok && six == is_x_free(sparse_from_hypergraph(h));
    if (!ok) ++bad;
  };
  for (int n = 3; n <= 6; ++n)
    for (const auto& h : oracle::all_linear_systems_by_subsets(n)) test(h);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10000; ++i) test(oracle::random_linear_system(8, rng, 4 + i % 16));
  o.log << "systems=" << systems << " discrepancies=" << bad;
  o.require(bad == 0, "equivalence discrepancy");
  if (o.pass) o.summary = std::to_string(systems) + " systems (all n<=6, 10000 random n=8), 0 discrepancies";
}

void c6_shadow_entropy(Outcome& o, const SearchBudget& b) {
  std::size_t rs_systems = 0;
  for (int n = 3; n <= 6; ++n) {
    std::set<std::vector<std::pair<int, int>>> shadows;
    std::size_t here = 0;
    for (const auto& h : oracle::all_linear_systems_by_subsets(n)) {
      if (!is_rs(h)) continue;
      ++here;
      const auto g = shadow(h);
      o.require(unique_triangle_property(g), "unique-triangle property fails");
      shadows.insert({g.edges().begin(), g.edges().end()});
    }
    o.require(shadows.size() == here, "shadow map not injective at n=" + std::to_string(n));
    rs_systems += here;
  }
  std::ostringstream ent;
  for (int n = 6; n <= 7; ++n) {
    const int rs = rs_max(n, b).edges;
    const auto rep = entropy_count_bound(n, rs);
    o.log << "entropy(" << n << "," << rs << ")=" << rep.left << "/" << rep.right << ' ';
    ent << " n=" << n << " rs=" << rs << ": " << rep.left << " <= " << rep.right << ";";
    o.require(rep.holds(), "entropy bound fails at n=" + std::to_string(n));
  }
  if (o.pass) o.summary = std::to_string(rs_systems) + " RS systems, injective shadows;" + ent.str();
}

void c7_extremal(Outcome& o, const SearchBudget& b) {
  const auto b3 = bose_burton(3);
  const std::array<Pattern, 1> f{fan()};
  const auto a = extremal_max(6, f, MatchMode::Subgraph, b);
  const std::array<Pattern, 2> wf{whirl3(), fano()};
  const auto c = extremal_max(6, wf, MatchMode::Induced, b);
  o.log << a.edges << ' ' << io::serialize(a.witness) << c.edges << ' ' << io::serialize(c.witness);
  o.require(a.edges == 4 && isomorphic_by_matcher(a.witness, b3), "ex_lin(6,F) != 4 or witness not B3");
  o.require(c.edges == 4 && isomorphic_by_matcher(c.witness, b3), "ex_ind(6,{W3,F7}) != 4 or witness not B3");
  if (o.pass) o.summary = "ex_lin(6,F)=4, ex_ind(6,{W3,F7})=4, witnesses isomorphic to B3 (n^2/9=4)";
}

void c8_fan_forcing(Outcome& o, const SearchBudget& b) {
  const std::array<Pattern, 2> wf{whirl3(), fano()};
  const std::array<Pattern, 1> f{fan()};
  const auto all = all_linear(7, b);
  std::size_t free = 0;
  std::size_t bad = 0;
  for (const auto& h : all) {
    if (!is_free(h, wf, MatchMode::Induced)) continue;
    ++free;
    if (!is_free(h, f, MatchMode::Subgraph)) ++bad;
  }
  o.log << all.size() << ' ' << free << ' ' << bad;
  o.require(static_cast<long>(all.size()) == kLinear.at(7), "linear enumeration size at n=7");
  o.require(bad == 0, "induced-{W3,F7}-free system contains a fan");
  if (o.pass)
    o.summary = std::to_string(all.size()) + " systems on n=7, " + std::to_string(free) +
                " induced-{W3,F7}-free, all fan-free";
}

void c9_bose_burton(Outcome& o, const SearchBudget&) {
  const std::array<Pattern, 1> f{fan()};
  const std::array<Pattern, 2> wf{whirl3(), fano()};
  for (int r = 2; r <= 4; ++r) {
    const auto h = bose_burton(r);
    const int n = 3 << (r - 2);
    const std::size_t m = std::size_t{1} << (2 * (r - 2));
    o.log << "B" << r << ":" << h.n() << "," << h.size() << ' ';
    o.require(h.n() == n && h.size() == m, "B_r size");
    o.require(is_free(h, f, MatchMode::Subgraph), "B_r contains a fan");
    o.require(is_free(h, wf, MatchMode::Induced), "B_r contains induced W3 or F7");
  }
  o.require(isomorphic_by_matcher(bose_burton(3), mk4().system), "B3 not isomorphic to M(K4)");
  if (o.pass) o.summary = "B2, B3, B4: sizes 3/1, 6/4, 12/16; F-free, induced-{W3,F7}-free; B3 ~ M(K4)";
}

void c10_graham_sloane(Outcome& o, const SearchBudget& b) {
  std::size_t classes_checked = 0;
  for (int n = 2; n <= 10; ++n)
    for (int r = 1; r <= n - 1; ++r) {
      std::set<PointSet> seen;
      std::size_t largest = 0;
      bool disjoint = true;
      for (int k = 0; k < n; ++k) {
        SparsePaving c;
        try {
          c = graham_sloane(n, r, k);
        } catch (const Error&) {
          o.require(false, "class not stable at n=" + std::to_string(n));
          continue;
        }
        ++classes_checked;
        largest = std::max(largest, c.ch.size());
        for (const auto& x : c.ch) disjoint = seen.insert(x).second && disjoint;
      }
      o.require(disjoint && Count(seen.size()) == binomial(n, r), "classes do not partition");
      o.require(Count(largest) * n >= binomial(n, r), "max class below C(n,r)/n");
    }
  CountsTable t;
  fill_sparse_paving(t, 4, 7, b);
  for (int n = 4; n <= 7; ++n) {
    const auto rep = gs_lower_check(t, n);
    o.log << "gs(" << n << ")=" << rep.left << "/" << rep.right << ' ';
    o.require(rep.holds(), "gs_lower_check fails at n=" + std::to_string(n));
  }
  if (o.pass) o.summary = std::to_string(classes_checked) + " classes on n<=10 stable and partitioning; gs check n=4..7";
}

void c11_blowup(Outcome& o, const SearchBudget& b) {
  CountsTable t;
  fill_sparse_paving(t, 0, 7, b);
  std::size_t instances = 0;
  for (int n = 0; n <= 7; ++n)
    for (int r = 0; r <= n; ++r)
      for (int tt = 0; tt <= r; ++tt) {
        ++instances;
        o.require(verify_blowup(t, classes::kSparsePaving, n, r, tt).holds(),
                  "blowup fails at (" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(tt) + ")");
      }
  const auto s73 = t.value({7, 3, std::string(classes::kSparsePaving)});
  const auto s74 = t.value({7, 4, std::string(classes::kSparsePaving)});
  o.log << instances << " s73=" << s73 << " s74=" << s74;
  o.require(s73 == kLinear.at(7) && s74 == kLinear.at(7), "s(7,3) or s(7,4) disagrees with the oracle");
  if (o.pass) o.summary = std::to_string(instances) + " (n,r,t) instances; s(7,3)=" + s73.str() + ", s(7,4)=" + s74.str();
}

void c12_counts(Outcome& o, const SearchBudget& b) {
  o.require(count_linear_systems(4, SystemPredicate::all(), b) == 5, "count_linear_systems(4)");
  o.require(count_linear_systems(5, SystemPredicate::all(), b) == 26, "count_linear_systems(5)");
  o.require(count_sparse_paving(4, 2, b) == 10, "s(4,2)");
  o.require(count_sparse_paving(5, 2, b) == 26, "s(5,2)");
  o.require(count_rank3(4, PavingPredicate::All, b) == 15, "m(4,3)");
  for (int n = 3; n <= 6; ++n) {
    const auto composed = count_rank3(n, PavingPredicate::All, b);
    const auto composed_x = count_rank3(n, PavingPredicate::XFree, b);
    const auto dedup = oracle::rank3_by_dedup(n, false).size();
    const auto dedup_x = oracle::rank3_by_dedup(n, true).size();
    o.log << "m(" << n << ")=" << composed << "/" << dedup << " mX=" << composed_x << "/" << dedup_x << ' ';
    o.require(composed == dedup && composed_x == dedup_x, "composition disagrees with dedup at n=" + std::to_string(n));
  }
  std::ostringstream fs;
  for (int n = 4; n <= 6; ++n) {
    const auto f = count_f(n, b);
    const auto rep = trivial_f_bound(n, f);
    o.log << "f(" << n << ")=" << f << "<=" << rep.right << ' ';
    fs << " f(" << n << ")=" << f << "<=" << rep.right;
    o.require(rep.holds(), "f bound fails at n=" + std::to_string(n));
  }
  o.require(trivial_f_limit(6) == 6196, "f bound at n=6 is not 6196");
  if (o.pass) o.summary = "fixed counts match; composition = dedup for n<=6;" + fs.str();
}

struct Criterion {
  int id;
  const char* name;
  void (*run)(Outcome&, const SearchBudget&);
};

const Criterion kCriteria[] = {
    {1, "codec round trip", c1_round_trip},
    {2, "encoded halves are linear", c2_validity},
    {3, "X-freeness passes to both halves", c3_freeness},
    {4, "pair encoding bound", c4_pair_bound},
    {5, "RS equivalences", c5_equivalences},
    {6, "shadow injectivity and entropy bound", c6_shadow_entropy},
    {7, "extremal values at n=6", c7_extremal},
    {8, "fan forcing on n=7", c8_fan_forcing},
    {9, "Bose-Burton family", c9_bose_burton},
    {10, "Graham-Sloane classes", c10_graham_sloane},
    {11, "blowup inequality", c11_blowup},
    {12, "counting cross-checks", c12_counts},
};

SearchBudget with_workers(int w) {
  SearchBudget b;
  b.workers = w;
  return b;
}

bool run_one(const Criterion& c, const SearchBudget& b, std::string& log, bool quiet = false) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    c.run(o, b);
  } catch (const std::exception& e) {
    o.pass = false;
    o.summary = std::string("exception: ") + e.what();
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  log = o.log.str() + (o.pass ? "" : " FAIL " + o.summary);
  if (quiet) return o.pass;
  std::printf("[%s] %2d %-38s %6.1fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, dt.count(),
              o.summary.c_str());
  std::fflush(stdout);
  return o.pass;
}

void stretch(double seconds) {
  SearchBudget b = with_workers(SearchBudget::default_workers());
  b.time_limit = std::chrono::duration<double>(seconds);
  const std::array<Pattern, 2> wf{whirl3(), fano()};
  const auto start = std::chrono::steady_clock::now();
  std::string status;
  bool pass = false;
  try {
    const auto r = extremal_max(12, wf, MatchMode::Induced, b);
    pass = r.edges == 16 && isomorphic_by_matcher(r.witness, bose_burton(4));
    status = "value " + std::to_string(r.edges) + (pass ? ", witness isomorphic to B4" : "");
  } catch (const Error& e) {
    status = std::string("not reached: ") + e.what();
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  std::printf("[%s] 7s %-38s %6.1fs  %s (non-blocking, budget %.0fs)\n", pass ? "PASS" : "MISS",
              "stretch: ex_ind(12,{W3,F7}) = 16", dt.count(), status.c_str(), seconds);
}

}  // namespace

int main(int argc, char** argv) {
  double stretch_seconds = 60;
  if (const char* env = std::getenv("LIN3_STRETCH_SECONDS")) stretch_seconds = std::atof(env);
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--stretch-seconds" && i + 1 < argc) stretch_seconds = std::atof(argv[++i]);

  bool all = true;
  std::map<int, std::string> logs;
  for (const auto& c : kCriteria) all = run_one(c, with_workers(1), logs[c.id]) && all;
  if (stretch_seconds > 0) stretch(stretch_seconds);

  // 13: rerun 1..12 with more workers; logs must match byte for byte.
  const auto start = std::chrono::steady_clock::now();
  bool same = true;
  std::string detail;
  for (int w : {4, 16}) {
    for (const auto& c : kCriteria) {
      std::string log;
      run_one(c, with_workers(w), log, true);
      if (log != logs[c.id]) {
        same = false;
        if (detail.empty()) detail = "criterion " + std::to_string(c.id) + " differs at " + std::to_string(w) + " workers";
      }
    }
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  std::printf("[%s] 13 %-38s %6.1fs  %s\n", same ? "PASS" : "FAIL", "determinism at 1, 4 and 16 workers", dt.count(),
              same ? "identical outputs for criteria 1-12" : detail.c_str());
  all = all && same;
  std::printf("%s\n", all ? "ALL BLOCKING CRITERIA PASS" : "SOME BLOCKING CRITERIA FAIL");
  return all ? 0 : 1;
}
