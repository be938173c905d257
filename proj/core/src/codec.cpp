#include "lin3/codec.hpp"

#include <algorithm>
#include <numeric>

#include "lin3/error.hpp"

namespace lin3 {

TripleChain consecutive_triples(std::span<const int> line) {
  if (line.size() < 3)
    throw Error(Errc::LineTooShort, "a line needs 3 points, got " + std::to_string(line.size()));
  for (std::size_t i = 1; i < line.size(); ++i) {
    if (line[i - 1] >= line[i])
      throw Error(Errc::OutOfRange, "line points must be distinct and increasing");
  }
  TripleChain chain;
  chain.reserve(line.size() - 2);
  for (std::size_t i = 0; i + 2 < line.size(); ++i)
    chain.push_back(Triple{{line[i], line[i + 1], line[i + 2]}});
  return chain;
}

CodecPair encode(const PavingLines& p) {
  std::vector<Triple> halves[2];
  for (const auto& line : p.lines()) {
    const auto chain = consecutive_triples(line);
    for (std::size_t i = 0; i < chain.size(); ++i) halves[i % 2].push_back(chain[i]);
  }
  try {
    return CodecPair{TripleSystem::make(p.n(), std::move(halves[0])),
                     TripleSystem::make(p.n(), std::move(halves[1]))};
  } catch (const Error& e) {
    throw Error(Errc::InternalLinearityFailure, std::string("encoded half is not linear: ") + e.what());
  }
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<std::size_t> parent;
};

}  // namespace

PavingLines decode(const CodecPair& pair) {
  if (pair.even.n() != pair.odd.n()) {
    throw Error(Errc::GroundMismatch, "halves on " + std::to_string(pair.even.n()) + " and " +
                                          std::to_string(pair.odd.n()) + " points");
  }
  const int n = pair.even.n();
  std::vector<Triple> all(pair.even.edges().begin(), pair.even.edges().end());
  all.insert(all.end(), pair.odd.edges().begin(), pair.odd.edges().end());

  DisjointSets sets(all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i].shared(all[j]) >= 2) sets.unite(i, j);

  std::vector<PointSet> merged(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto& line = merged[sets.find(i)];
    line.insert(line.end(), all[i].v.begin(), all[i].v.end());
  }
  std::vector<PointSet> lines;
  for (auto& line : merged) {
    if (line.empty()) continue;
    std::sort(line.begin(), line.end());
    line.erase(std::unique(line.begin(), line.end()), line.end());
    lines.push_back(std::move(line));
  }

  PavingLines decoded;
  try {
    decoded = PavingLines::make(n, std::move(lines));
  } catch (const Error& e) {
    throw Error(Errc::NotDecodable, std::string("merged lines are not a paving matroid: ") + e.what());
  }
  if (encode(decoded) != pair)
    throw Error(Errc::NotDecodable, "pair is not the encoding of any paving matroid");
  return decoded;
}

}  // namespace lin3
