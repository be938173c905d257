#include "lin3/constructions.hpp"

#include <array>
#include <unordered_map>

#include "lin3/error.hpp"

namespace lin3 {

namespace {

Pattern named(const char* name, int n, std::initializer_list<std::array<int, 3>> edges) {
  const std::vector<std::array<int, 3>> raw(edges);
  return Pattern{name, make_system(n, raw)};
}

}  // namespace

Pattern whirl3() { return named("w3", 6, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}}); }

Pattern mk4() { return named("mk4", 6, {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}, {4, 5, 6}}); }

Pattern fan() { return named("fan", 7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {3, 5, 7}}); }

Pattern fano() {
  return named("fano", 7,
               {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

std::optional<Pattern> pattern_by_name(std::string_view name) {
  if (name == "w3") return whirl3();
  if (name == "mk4") return mk4();
  if (name == "fan") return fan();
  if (name == "fano") return fano();
  return std::nullopt;
}

std::vector<std::string_view> pattern_names() { return {"w3", "mk4", "fan", "fano"}; }

SparsePaving graham_sloane(int n, int r, int k) {
  if (r < 1 || r > n - 1 || k < 0 || k >= n) {
    throw Error(Errc::OutOfRange, "graham_sloane needs 1 <= r <= n-1 and 0 <= k < n (n=" +
                                      std::to_string(n) + ", r=" + std::to_string(r) +
                                      ", k=" + std::to_string(k) + ")");
  }
  std::vector<PointSet> members;
  PointSet current;
  // Lexicographic walk over r-subsets with running sum.
  auto walk = [&](auto&& self, int next, int sum) -> void {
    if (static_cast<int>(current.size()) == r) {
      if (sum % n == k) members.push_back(current);
      return;
    }
    for (int x = next; x <= n - (r - static_cast<int>(current.size())) + 1; ++x) {
      current.push_back(x);
      self(self, x + 1, sum + x);
      current.pop_back();
    }
  };
  walk(walk, 1, 0);
  return validate_sparse(n, r, std::move(members));
}

std::vector<GF2Vector> bose_burton_points(int r) {
  if (r < 2 || r > 20) throw Error(Errc::OutOfRange, "bose_burton needs 2 <= r <= 20");
  std::vector<GF2Vector> points;
  const std::uint64_t low = std::uint64_t{1} << (r - 2);
  for (std::uint64_t bits = low; bits < (std::uint64_t{1} << r); ++bits)
    points.push_back(GF2Vector{r, bits});
  return points;
}

TripleSystem bose_burton(int r) {
  const auto points = bose_burton_points(r);
  std::unordered_map<std::uint64_t, int> label;
  for (std::size_t i = 0; i < points.size(); ++i) label[points[i].bits] = static_cast<int>(i) + 1;

  std::vector<Triple> edges;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      // x + y + z = 0 forces z = x + y; it qualifies iff x and y lie in different groups.
      if (points[i].group() == points[j].group()) continue;
      const int z = label.at(points[i].bits ^ points[j].bits);
      if (z > static_cast<int>(j) + 1)
        edges.push_back(Triple{{static_cast<int>(i) + 1, static_cast<int>(j) + 1, z}});
    }
  return TripleSystem::make(static_cast<int>(points.size()), std::move(edges));
}

}  // namespace lin3
