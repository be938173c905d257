#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lin3/bounds.hpp"
#include "lin3/codec.hpp"
#include "lin3/constructions.hpp"
#include "lin3/counts_table.hpp"
#include "lin3/error.hpp"
#include "lin3/io.hpp"
#include "lin3/search.hpp"

namespace lin3::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "human";
  int workers = SearchBudget::default_workers();
  double budget_seconds = 0;
  bool timing = false;
  std::string table;
  std::string output;
  std::string free;
  std::string mode = "subgraph";
};

class Printer {
 public:
  Printer(std::ostream& out, const Options& opt) : out_(out), opt_(opt), start_(Clock::now()) {}

  void emit(Json record, const std::string& human) {
    if (opt_.timing) {
      const std::chrono::duration<double> dt = Clock::now() - start_;
      record["elapsed"] = std::round(dt.count() * 1000) / 1000;
    }
    if (opt_.format == "json-lines") {
      out_ << record.dump() << '\n';
    } else {
      out_ << human;
      if (opt_.timing) out_ << "  (" << record["elapsed"].get<double>() << " s)";
      out_ << '\n';
    }
  }

  std::ostream& raw() { return out_; }

 private:
  using Clock = std::chrono::steady_clock;
  std::ostream& out_;
  const Options& opt_;
  Clock::time_point start_;
};

SearchBudget budget_of(const Options& opt) {
  SearchBudget b;
  b.workers = opt.workers;
  if (opt.budget_seconds > 0) b.time_limit = std::chrono::duration<double>(opt.budget_seconds);
  return b;
}

MatchMode mode_of(const std::string& s) {
  if (s == "subgraph") return MatchMode::Subgraph;
  if (s == "induced") return MatchMode::Induced;
  throw UsageError("--mode must be 'subgraph' or 'induced', got '" + s + "'");
}

std::vector<Pattern> patterns_of(const std::string& list) {
  std::vector<Pattern> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    if (auto p = pattern_by_name(name)) {
      out.push_back(*p);
    } else if (fs::is_regular_file(name)) {
      out.push_back(Pattern{fs::path(name).stem().string(), io::parse_l3h(io::read_file(name))});
    } else {
      throw UsageError("unknown pattern '" + name + "' (known: w3, mk4, fan, fano, or a .l3h file)");
    }
  }
  if (out.empty()) throw UsageError("--free needs at least one pattern");
  return out;
}

std::string names_of(const std::vector<Pattern>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ",") + p.name;
  return s;
}

Json triples_json(const TripleSystem& h) {
  Json a = Json::array();
  for (const auto& t : h.edges()) a.push_back({t.v[0], t.v[1], t.v[2]});
  return a;
}

void write_or_print(Printer& pr, const std::string& path, const std::string& text) {
  if (path.empty()) {
    pr.raw() << text;
  } else {
    io::write_file(path, text);
  }
}

bool is_pav(const std::string& path) { return fs::path(path).extension() == ".pav"; }

// ---------------------------------------------------------------------------
// counts

Count compute(const CountKey& key, const SearchBudget& budget, std::string& provenance) {
  const auto& c = key.predicate;
  const int n = key.n;
  if (c == classes::kSparsePaving) {
    if (key.r == 3 && n >= 4 && binomial(n, 3) > kMaxJohnsonVertices) {
      provenance = "exhaustive";
      return count_linear_systems(n, SystemPredicate::all(), budget);
    }
    provenance = "stable-set-count";
    return count_sparse_paving(n, key.r, budget);
  }
  if (key.r != 3) throw UsageError("class '" + c + "' is defined for rank 3 only");
  provenance = "exhaustive";
  if (c == classes::kSparsePavingX) {
    if (n < 4) return count_sparse_paving(n, 3, budget);
    return count_linear_systems(n, SystemPredicate::rs(), budget);
  }
  if (c == classes::kPaving) return count_paving(n, PavingPredicate::All, budget);
  if (c == classes::kPavingX) return count_paving(n, PavingPredicate::XFree, budget);
  if (c == classes::kF) return count_f(n, budget);
  if (c == classes::kRsMax) {
    provenance = "extremal";
    return rs_max(n, budget).edges;
  }
  provenance = "composed";
  if (c == classes::kRank3) return count_rank3(n, PavingPredicate::All, budget);
  if (c == classes::kRank3X) return count_rank3(n, PavingPredicate::XFree, budget);
  throw UsageError("unknown class '" + c +
                   "' (known: sparse-paving, sparse-paving/x-free, paving, paving/x-free, matroid, "
                   "matroid/x-free, f, rs-max, linear)");
}

CountsTable load_table(const std::string& path) {
  if (path.empty() || !fs::exists(path)) return {};
  return CountsTable::load(path);
}

void record_count(Printer& pr, const Options& opt, CountsTable& table, const CountKey& key,
                  const Count& value, const std::string& provenance) {
  table.put(key, value, provenance);
  if (!opt.table.empty()) table.append(opt.table, key);
  Json rec;
  rec["key"] = key.str();
  rec["n"] = key.n;
  rec["r"] = key.r;
  rec["predicate"] = key.predicate;
  rec["value"] = value.str();
  rec["provenance"] = provenance;
  pr.emit(rec, key.str() + " = " + value.str() + "  [" + provenance + "]");
}

// ---------------------------------------------------------------------------
// subcommands

int do_construct(Printer& pr, const Options& opt, const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw UsageError("construct " + name + " takes " + std::to_string(k) + " integer parameter(s)");
  };
  std::string text;
  if (auto p = pattern_by_name(name)) {
    need(0);
    text = io::serialize(p->system);
  } else if (name == "bose-burton") {
    need(1);
    text = io::serialize(bose_burton(params[0]));
  } else if (name == "graham-sloane") {
    need(3);
    text = io::serialize(graham_sloane(params[0], params[1], params[2]));
  } else {
    throw UsageError("unknown construction '" + name + "' (known: w3, mk4, fan, fano, bose-burton, graham-sloane)");
  }
  write_or_print(pr, opt.output, text);
  return kOk;
}

struct CheckFlags {
  bool rs = false;
  bool x_free = false;
};

int do_check(Printer& pr, const Options& opt, const std::string& file, const CheckFlags& flags) {
  const auto text = io::read_file(file);
  bool all = true;
  auto report = [&](const std::string& what, bool holds, const Json& extra = {}) {
    all = all && holds;
    Json rec;
    rec["file"] = file;
    rec["check"] = what;
    rec["holds"] = holds;
    if (!extra.is_null()) rec["witness"] = extra;
    pr.emit(rec, file + ": " + what + " " + (holds ? "true" : "false"));
  };

  auto check_free = [&](const HostIndex& host) {
    if (opt.free.empty()) return;
    const auto ps = patterns_of(opt.free);
    const auto mode = mode_of(opt.mode);
    for (const auto& p : ps) {
      const auto phi = find_embedding(host, p, mode);
      report(std::string(to_string(mode)) + "-free(" + p.name + ")", !phi,
             phi ? Json(*phi) : Json());
    }
  };

  if (is_pav(file)) {
    PavingLines p;
    try {
      p = io::parse_pav(text);
    } catch (const Error& e) {
      if (e.code() != Errc::InvalidLines) throw;
      report("paving", false);
      return kFalse;
    }
    report("paving", true);
    if (flags.rs) {
      if (!p.all_lines_short()) throw UsageError("--rs needs a sparse paving input (3-point lines only)");
      report("rs", is_rs(hypergraph_from_sparse(p)));
    }
    if (flags.x_free) report("x-free", is_x_free(p));
    const auto deps = dependent_triples(p);
    check_free(HostIndex(p.n(), deps));
  } else {
    TripleSystem h;
    try {
      h = io::parse_l3h(text);
    } catch (const Error& e) {
      if (e.code() != Errc::NotLinear && e.code() != Errc::NotATriple) throw;
      report("linear", false);
      return kFalse;
    }
    report("linear", true);
    if (flags.rs) report("rs", is_rs(h));
    if (flags.x_free) {
      const std::array<Pattern, 2> x{whirl3(), mk4()};
      report("x-free", is_free(h, x, MatchMode::Induced));
    }
    check_free(HostIndex(h));
  }
  return all ? kOk : kFalse;
}

int do_encode(Printer& pr, const Options& opt, const std::string& file) {
  if (opt.output.empty()) throw UsageError("encode needs -o <directory>");
  const auto pair = encode(io::parse_pav(io::read_file(file)));
  const fs::path dir(opt.output);
  fs::create_directories(dir);
  io::write_file(dir / "even.l3h", io::serialize(pair.even));
  io::write_file(dir / "odd.l3h", io::serialize(pair.odd));
  Json rec;
  rec["input"] = file;
  rec["even"] = pair.even.size();
  rec["odd"] = pair.odd.size();
  pr.emit(rec, file + ": " + std::to_string(pair.even.size()) + " even and " +
                   std::to_string(pair.odd.size()) + " odd triples written to " + dir.string());
  return kOk;
}

int do_decode(Printer& pr, const Options& opt, const std::vector<std::string>& inputs) {
  fs::path even;
  fs::path odd;
  if (inputs.size() == 1 && fs::is_directory(inputs[0])) {
    even = fs::path(inputs[0]) / "even.l3h";
    odd = fs::path(inputs[0]) / "odd.l3h";
  } else if (inputs.size() == 2) {
    even = inputs[0];
    odd = inputs[1];
  } else {
    throw UsageError("decode takes a directory holding even.l3h and odd.l3h, or the two files");
  }
  const CodecPair pair{io::parse_l3h(io::read_file(even)), io::parse_l3h(io::read_file(odd))};
  write_or_print(pr, opt.output, io::serialize(decode(pair)));
  return kOk;
}

int do_count(Printer& pr, const Options& opt, const std::string& cls, int n, int r, bool rs) {
  auto table = load_table(opt.table);
  const auto budget = budget_of(opt);
  if (cls == "linear") {
    SystemPredicate pred;
    if (rs && !opt.free.empty()) throw UsageError("use either --rs or --free");
    if (rs) pred = SystemPredicate::rs();
    if (!opt.free.empty()) pred = SystemPredicate::free(patterns_of(opt.free), mode_of(opt.mode));
    const CountKey key{n, 3, "linear/" + pred.name()};
    record_count(pr, opt, table, key, count_linear_systems(n, pred, budget), "exhaustive");
    return kOk;
  }
  std::string provenance;
  const CountKey key{n, r, cls};
  const auto value = compute(key, budget, provenance);
  record_count(pr, opt, table, key, value, provenance);
  return kOk;
}

int do_extremal(Printer& pr, const Options& opt, int n) {
  if (opt.free.empty()) throw UsageError("extremal needs --free <patterns>");
  const auto ps = patterns_of(opt.free);
  const auto mode = mode_of(opt.mode);
  const auto res = extremal_max(n, ps, mode, budget_of(opt));
  if (!opt.output.empty()) io::write_file(opt.output, io::serialize(res.witness));
  const std::string key = "ex(n=" + std::to_string(n) + "," + std::string(to_string(mode)) + "-free(" +
                          names_of(ps) + "))";
  Json rec;
  rec["key"] = key;
  rec["n"] = n;
  rec["mode"] = to_string(mode);
  rec["patterns"] = names_of(ps);
  rec["value"] = res.edges;
  rec["witness"] = triples_json(res.witness);
  pr.emit(rec, key + " = " + std::to_string(res.edges) + "  witness " + rec["witness"].dump());
  return kOk;
}

int do_rs_max(Printer& pr, const Options& opt, int n) {
  auto table = load_table(opt.table);
  const auto res = rs_max(n, budget_of(opt));
  if (!opt.output.empty()) io::write_file(opt.output, io::serialize(res.witness));
  const CountKey key{n, 3, std::string(classes::kRsMax)};
  table.put(key, res.edges, "extremal");
  if (!opt.table.empty()) table.append(opt.table, key);
  Json rec;
  rec["key"] = key.str();
  rec["n"] = n;
  rec["r"] = 3;
  rec["predicate"] = key.predicate;
  rec["value"] = std::to_string(res.edges);
  rec["provenance"] = "extremal";
  rec["witness"] = triples_json(res.witness);
  pr.emit(rec, key.str() + " = " + std::to_string(res.edges) + "  witness " + rec["witness"].dump());
  return kOk;
}

int do_verify(Printer& pr, const Options& opt, const std::string& which, const std::vector<int>& params,
              const std::string& cls) {
  auto table = load_table(opt.table);
  const auto budget = budget_of(opt);
  auto ensure = [&](const CountKey& key) {
    if (table.find(key)) return;
    std::string provenance;
    const auto value = compute(key, budget, provenance);
    table.put(key, value, provenance);
  };
  auto need = [&](std::size_t lo, std::size_t hi, const char* usage) {
    if (params.size() < lo || params.size() > hi) throw UsageError(std::string("usage: verify ") + usage);
  };
  const std::string sp(classes::kSparsePaving);

  BoundReport rep;
  if (which == "entropy") {
    need(1, 2, "entropy <n> [rs]");
    int rs = 0;
    if (params.size() == 2) {
      rs = params[1];
    } else {
      const CountKey key{params[0], 3, std::string(classes::kRsMax)};
      ensure(key);
      rs = table.value(key).convert_to<int>();
    }
    rep = entropy_count_bound(params[0], rs);
  } else if (which == "blowup") {
    need(3, 3, "blowup <n> <r> <t> [--class name]");
    const int n = params[0], r = params[1], t = params[2];
    if (t < 0 || t > r || r > n) throw UsageError("blowup needs 0 <= t <= r <= n");
    ensure({n, r, cls});
    ensure({n - t, r - t, cls});
    rep = verify_blowup(table, cls, n, r, t);
  } else if (which == "gs") {
    need(1, 1, "gs <n>");
    for (int r = 0; r <= params[0]; ++r) ensure({params[0], r, sp});
    rep = gs_lower_check(table, params[0]);
  } else if (which == "f-trivial") {
    need(1, 2, "f-trivial <n> [f]");
    Count f;
    if (params.size() == 2) {
      f = params[1];
    } else {
      const CountKey key{params[0], 3, std::string(classes::kF)};
      ensure(key);
      f = table.value(key);
    }
    rep = trivial_f_bound(params[0], f);
  } else if (which == "pair") {
    need(1, 1, "pair <n>");
    ensure({params[0], 3, std::string(classes::kPavingX)});
    ensure({params[0], 3, std::string(classes::kSparsePavingX)});
    rep = pair_encoding_bound(table, params[0]);
  } else {
    throw UsageError("unknown inequality '" + which + "' (known: entropy, blowup, gs, f-trivial, pair)");
  }

  Json rec;
  rec["inequality"] = rep.inequality;
  rec["parameters"] = rep.parameters;
  rec["left"] = rep.left;
  rec["right"] = rep.right;
  rec["verdict"] = to_string(rep.verdict);
  rec["slack"] = rep.slack;
  pr.emit(rec, rep.inequality + "(" + rep.parameters + "): " + rep.left + " <= " + rep.right + "  " +
                   std::string(to_string(rep.verdict)));
  return rep.holds() ? kOk : kFalse;
}

int do_report(Printer& pr, const Options& opt) {
  if (opt.table.empty()) throw UsageError("report needs --table <file>");
  const auto table = CountsTable::load(opt.table);
  if (opt.format == "json-lines") {
    pr.raw() << table.to_json_lines();
    return kOk;
  }
  std::size_t wk = 3;
  std::size_t wv = 5;
  for (const auto& [k, e] : table.entries()) {
    wk = std::max(wk, k.str().size());
    wv = std::max(wv, e.value.str().size());
  }
  auto& out = pr.raw();
  out << std::left << std::setw(static_cast<int>(wk)) << "key" << "  " << std::right
      << std::setw(static_cast<int>(wv)) << "value" << "  provenance\n";
  for (const auto& [k, e] : table.entries()) {
    out << std::left << std::setw(static_cast<int>(wk)) << k.str() << "  " << std::right
        << std::setw(static_cast<int>(wv)) << e.value.str() << "  " << e.provenance << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Linear 3-uniform hypergraphs and rank-3 matroids"};
  app.name("lin3");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "human or json-lines")
      ->check(CLI::IsMember({"human", "json-lines"}));
  app.add_option("--workers", opt.workers, "worker threads (default: LIN3_WORKERS or 1)")
      ->envname("LIN3_WORKERS")
      ->check(CLI::Range(1, 1024));
  app.add_option("--budget-seconds", opt.budget_seconds, "wall-clock limit for searches")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timing", opt.timing, "add elapsed seconds to every record");

  std::function<int(Printer&)> action;

  std::string name;
  std::vector<int> params;
  auto* construct = app.add_subcommand("construct", "emit a named instance as .l3h or .sp");
  construct->add_option("name", name, "w3, mk4, fan, fano, bose-burton, graham-sloane")->required();
  construct->add_option("params", params, "integer parameters");
  construct->add_option("-o,--output", opt.output, "output file");
  construct->callback([&] { action = [&](Printer& pr) { return do_construct(pr, opt, name, params); }; });

  std::string file;
  CheckFlags flags;
  auto* check = app.add_subcommand("check", "linearity, RS property and pattern freeness of a file");
  check->add_option("file", file, ".l3h or .pav input")->required()->check(CLI::ExistingFile);
  check->add_flag("--rs", flags.rs, "Ruzsa-Szemeredi property");
  check->add_flag("--x-free", flags.x_free, "no W3 or M(K4) restriction");
  check->add_option("--free", opt.free, "comma-separated patterns");
  check->add_option("--mode", opt.mode, "subgraph or induced");
  check->callback([&] { action = [&](Printer& pr) { return do_check(pr, opt, file, flags); }; });

  auto* enc = app.add_subcommand("encode", "split a .pav matroid into a pair of .l3h systems");
  enc->add_option("file", file, ".pav input")->required()->check(CLI::ExistingFile);
  enc->add_option("-o,--output", opt.output, "output directory")->required();
  enc->callback([&] { action = [&](Printer& pr) { return do_encode(pr, opt, file); }; });

  std::vector<std::string> inputs;
  auto* dec = app.add_subcommand("decode", "rebuild a .pav matroid from an encoded pair");
  dec->add_option("inputs", inputs, "directory, or even.l3h odd.l3h")->required()->expected(1, 2);
  dec->add_option("-o,--output", opt.output, "output .pav file");
  dec->callback([&] { action = [&](Printer& pr) { return do_decode(pr, opt, inputs); }; });

  std::string cls;
  int n = 0;
  int r = 3;
  bool rs = false;
  auto* count = app.add_subcommand("count", "exact labeled counts");
  count->add_option("class", cls, "sparse-paving, sparse-paving/x-free, paving, paving/x-free, matroid, "
                                  "matroid/x-free, f, rs-max, linear")
      ->required();
  count->add_option("n", n, "ground set size")->required();
  count->add_option("--rank", r, "rank (sparse-paving only)");
  count->add_flag("--rs", rs, "linear: keep RS systems");
  count->add_option("--free", opt.free, "linear: comma-separated patterns");
  count->add_option("--mode", opt.mode, "subgraph or induced");
  count->add_option("--table", opt.table, "append the result to this counts table");
  count->callback([&] { action = [&](Printer& pr) { return do_count(pr, opt, cls, n, r, rs); }; });

  auto* ext = app.add_subcommand("extremal", "maximum edges of a pattern-free linear system");
  ext->add_option("n", n, "ground set size")->required();
  ext->add_option("--free", opt.free, "comma-separated patterns")->required();
  ext->add_option("--mode", opt.mode, "subgraph or induced");
  ext->add_option("-o,--output", opt.output, "write the witness as .l3h");
  ext->callback([&] { action = [&](Printer& pr) { return do_extremal(pr, opt, n); }; });

  auto* rsm = app.add_subcommand("rs-max", "rs(n) with a witness");
  rsm->add_option("n", n, "ground set size")->required();
  rsm->add_option("-o,--output", opt.output, "write the witness as .l3h");
  rsm->add_option("--table", opt.table, "append the result to this counts table");
  rsm->callback([&] { action = [&](Printer& pr) { return do_rs_max(pr, opt, n); }; });

  auto* fc = app.add_subcommand("f-count", "linear systems without induced W3 or Fano plane");
  fc->add_option("n", n, "ground set size")->required();
  fc->add_option("--table", opt.table, "append the result to this counts table");
  fc->callback([&] {
    action = [&](Printer& pr) { return do_count(pr, opt, std::string(classes::kF), n, 3, false); };
  });

  std::string which;
  std::string blowup_class(classes::kSparsePaving);
  auto* ver = app.add_subcommand("verify", "check one counting inequality");
  ver->add_option("inequality", which, "entropy, blowup, gs, f-trivial, pair")->required();
  ver->add_option("params", params, "integer parameters");
  ver->add_option("--class", blowup_class, "count class for blowup");
  ver->add_option("--table", opt.table, "counts table; missing values are computed");
  ver->callback([&] {
    action = [&](Printer& pr) { return do_verify(pr, opt, which, params, blowup_class); };
  });

  auto* rep = app.add_subcommand("report", "render a counts table");
  rep->add_option("--table", opt.table, "counts table")->required();
  rep->callback([&] { action = [&](Printer& pr) { return do_report(pr, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Printer printer(out, opt);
  try {
    return action(printer);
  } catch (const Error& e) {
    err << "lin3: " << e.what() << '\n';
    return e.code() == Errc::BudgetExceeded ? kBudget : kUsage;
  } catch (const UsageError& e) {
    err << "lin3: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "lin3: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace lin3::cli
