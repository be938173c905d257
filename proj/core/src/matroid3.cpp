#include "lin3/matroid3.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include "lin3/constructions.hpp"
#include "lin3/error.hpp"

namespace lin3 {

namespace {

std::string set_str(const PointSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::size_t intersection_size(const PointSet& a, const PointSet& b) {
  std::size_t k = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++k;
      ++i;
      ++j;
    }
  }
  return k;
}

void normalize_set(PointSet& s, int n, Errc dup_code) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error(dup_code, "set " + set_str(s) + " repeats an element");
  if (!s.empty() && (s.front() < 1 || s.back() > n))
    throw Error(Errc::OutOfRange, "set " + set_str(s) + " leaves [1," + std::to_string(n) + "]");
}

}  // namespace

PavingLines PavingLines::make(int n, std::vector<PointSet> lines) {
  if (n < 3) throw Error(Errc::InvalidLines, "a rank-3 matroid needs n >= 3, got " + std::to_string(n));
  std::map<std::pair<int, int>, std::size_t> owner;
  for (auto& line : lines) normalize_set(line, n, Errc::InvalidLines);
  std::sort(lines.begin(), lines.end());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const int size = static_cast<int>(line.size());
    if (size < 3 || size > n - 1) {
      throw Error(Errc::InvalidLines, "line " + set_str(line) + " must have between 3 and " +
                                          std::to_string(n - 1) + " points");
    }
    for (std::size_t a = 0; a < line.size(); ++a)
      for (std::size_t b = a + 1; b < line.size(); ++b) {
        auto [it, fresh] = owner.try_emplace({line[a], line[b]}, i);
        if (!fresh) {
          throw Error(Errc::InvalidLines, "lines " + set_str(lines[it->second]) + " and " +
                                              set_str(line) + " share two points");
        }
      }
  }
  PavingLines p;
  p.n_ = n;
  p.lines_ = std::move(lines);
  return p;
}

bool PavingLines::all_lines_short() const noexcept {
  return std::all_of(lines_.begin(), lines_.end(), [](const PointSet& l) { return l.size() == 3; });
}

std::vector<Triple> dependent_triples(const PavingLines& p) {
  std::vector<Triple> out;
  for (const auto& line : p.lines()) {
    const std::size_t k = line.size();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        for (std::size_t c = b + 1; c < k; ++c) out.push_back(Triple{{line[a], line[b], line[c]}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

PavingLines sparse_from_hypergraph(const TripleSystem& h) {
  if (h.n() < 4) {
    throw Error(Errc::GroundTooSmall,
                "rank-3 sparse paving needs n >= 4, got " + std::to_string(h.n()));
  }
  std::vector<PointSet> lines;
  lines.reserve(h.size());
  for (const auto& t : h.edges()) lines.push_back({t.v[0], t.v[1], t.v[2]});
  return PavingLines::make(h.n(), std::move(lines));
}

TripleSystem hypergraph_from_sparse(const PavingLines& p) {
  std::vector<Triple> edges;
  for (const auto& line : p.lines()) {
    if (line.size() != 3)
      throw Error(Errc::InvalidLines, "line " + set_str(line) + " is not a 3-point line");
    edges.push_back(Triple{{line[0], line[1], line[2]}});
  }
  return TripleSystem::make(p.n(), std::move(edges));
}

namespace {

Pattern restriction_pattern(const PavingLines& q) {
  if (!q.all_lines_short())
    throw Error(Errc::InvalidLines, "restriction targets must have only 3-point lines");
  return Pattern{"restriction", hypergraph_from_sparse(q)};
}

}  // namespace

bool has_restriction(const PavingLines& p, const PavingLines& q) {
  const auto deps = dependent_triples(p);
  return contains_pattern(HostIndex(p.n(), deps), restriction_pattern(q), MatchMode::Induced);
}

bool is_x_free(const PavingLines& p) {
  static const Pattern targets[] = {whirl3(), mk4()};
  const auto deps = dependent_triples(p);
  return is_free(HostIndex(p.n(), deps), targets, MatchMode::Induced);
}

bool weak_map_leq(const PavingLines& a, const PavingLines& b) {
  if (a.n() != b.n()) {
    throw Error(Errc::GroundMismatch, "ground sizes " + std::to_string(a.n()) + " and " +
                                          std::to_string(b.n()) + " differ");
  }
  const auto da = dependent_triples(a);
  const auto db = dependent_triples(b);
  return std::includes(db.begin(), db.end(), da.begin(), da.end());
}

Rank3Matroid Rank3Matroid::make(int n, PointSet loops, std::vector<PointSet> classes,
                                PavingLines structure) {
  normalize_set(loops, n, Errc::InvalidPartition);
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int x : loops) seen[x] = 1;
  for (auto& block : classes) {
    if (block.empty()) throw Error(Errc::InvalidPartition, "empty parallel class");
    normalize_set(block, n, Errc::InvalidPartition);
    for (int x : block) {
      if (seen[x]) throw Error(Errc::InvalidPartition, "element " + std::to_string(x) + " used twice");
      seen[x] = 1;
    }
  }
  for (int x = 1; x <= n; ++x)
    if (!seen[x]) throw Error(Errc::InvalidPartition, "element " + std::to_string(x) + " not covered");
  if (!std::is_sorted(classes.begin(), classes.end(),
                      [](const PointSet& a, const PointSet& b) { return a.front() < b.front(); })) {
    throw Error(Errc::InvalidPartition, "parallel classes must be ordered by their minimum element");
  }
  const int k = static_cast<int>(classes.size());
  if (k < 3) throw Error(Errc::InvalidPartition, "rank 3 needs at least 3 parallel classes");
  if (structure.n() != k) {
    throw Error(Errc::GroundMismatch, "structure on " + std::to_string(structure.n()) +
                                          " points but " + std::to_string(k) + " classes");
  }
  Rank3Matroid m;
  m.n_ = n;
  m.loops_ = std::move(loops);
  m.classes_ = std::move(classes);
  m.structure_ = std::move(structure);
  return m;
}

std::vector<PointSet> Rank3Matroid::lifted_lines() const {
  std::vector<PointSet> out;
  for (const auto& line : structure_.lines()) {
    PointSet lifted;
    for (int point : line) {
      const auto& block = classes_[point - 1];
      lifted.insert(lifted.end(), block.begin(), block.end());
    }
    std::sort(lifted.begin(), lifted.end());
    out.push_back(std::move(lifted));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_minor_w3_mk4(const Rank3Matroid& m) { return !is_x_free(m.structure()); }

SparsePaving validate_sparse(int n, int r, std::vector<PointSet> ch) {
  if (r < 1 || r > n - 1) {
    throw Error(Errc::OutOfRange, "rank " + std::to_string(r) + " outside [1," +
                                      std::to_string(n - 1) + "]");
  }
  for (auto& member : ch) {
    normalize_set(member, n, Errc::OutOfRange);
    if (static_cast<int>(member.size()) != r) {
      throw Error(Errc::OutOfRange,
                  "member " + set_str(member) + " does not have " + std::to_string(r) + " elements");
    }
  }
  std::sort(ch.begin(), ch.end());
  ch.erase(std::unique(ch.begin(), ch.end()), ch.end());
  for (std::size_t i = 0; i < ch.size(); ++i)
    for (std::size_t j = i + 1; j < ch.size(); ++j) {
      if (intersection_size(ch[i], ch[j]) + 1 == static_cast<std::size_t>(r)) {
        throw Error(Errc::ExchangeViolation,
                    set_str(ch[i]) + " and " + set_str(ch[j]) + " differ by a single exchange");
      }
    }
  return SparsePaving{n, r, std::move(ch)};
}

}  // namespace lin3
