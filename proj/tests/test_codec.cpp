#include <array>
#include <random>

#include "lin3/codec.hpp"
#include "lin3/constructions.hpp"
#include "lin3/search.hpp"
#include "support/check.hpp"
#include "support/oracles.hpp"

using namespace lin3;

namespace {

TripleSystem sys(int n, std::initializer_list<std::array<int, 3>> ts) {
  std::vector<std::array<int, 3>> v(ts);
  return make_system(n, v);
}

struct PavingList {
  std::vector<PavingLines> items;
  PavingList& operator+=(const PavingList& o) {
    items.insert(items.end(), o.items.begin(), o.items.end());
    return *this;
  }
};

std::vector<PavingLines> all_paving(int n) {
  SearchBudget budget;
  budget.workers = 1;
  return fold_paving<PavingList>(n, budget, [](PavingList& acc, const PavingLines& p) {
           acc.items.push_back(p);
         }).items;
}

}  // namespace

TEST_CASE("consecutive triples") {
  const std::array<int, 4> a{2, 4, 5, 7};
  CHECK(consecutive_triples(a) == TripleChain{Triple::make(2, 4, 5), Triple::make(4, 5, 7)});
  const std::array<int, 3> b{1, 2, 3};
  CHECK(consecutive_triples(b) == TripleChain{Triple::make(1, 2, 3)});
  const std::array<int, 5> c{1, 3, 5, 7, 9};
  CHECK(consecutive_triples(c) ==
        TripleChain{Triple::make(1, 3, 5), Triple::make(3, 5, 7), Triple::make(5, 7, 9)});
  const std::array<int, 2> d{1, 2};
  CHECK_ERRC(consecutive_triples(d), Errc::LineTooShort);
  const std::array<int, 3> e{3, 1, 2};
  CHECK_ERRC(consecutive_triples(e), Errc::OutOfRange);
}

TEST_CASE("chain intersections") {
  const std::array<int, 7> line{1, 2, 4, 5, 8, 9, 11};
  const auto chain = consecutive_triples(line);
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      CHECK(chain[i] < chain[j]);
      CHECK((chain[i].shared(chain[j]) == 2) == (j == i + 1));
    }
}

TEST_CASE("encode examples") {
  const auto a = encode(PavingLines::make(6, {{1, 2, 3, 4, 5}}));
  CHECK(a.even == sys(6, {{1, 2, 3}, {3, 4, 5}}));
  CHECK(a.odd == sys(6, {{2, 3, 4}}));
  const auto b = encode(PavingLines::make(4, {{1, 2, 3}}));
  CHECK(b.even == sys(4, {{1, 2, 3}}));
  CHECK(b.odd.empty());
  std::vector<PointSet> fano_lines;
  const auto fano_sys = fano().system;
  for (const auto& t : fano_sys.edges()) fano_lines.push_back({t.v.begin(), t.v.end()});
  const auto fano_pav = PavingLines::make(7, fano_lines);
  const auto c = encode(fano_pav);
  CHECK(c.even == fano().system);
  CHECK(c.odd.empty());
  CHECK(decode(c) == fano_pav);
}

TEST_CASE("decode examples and rejection") {
  CHECK(decode({sys(5, {{1, 2, 3}}), sys(5, {{2, 3, 4}})}) == PavingLines::make(5, {{1, 2, 3, 4}}));
  CHECK_ERRC(decode({sys(5, {{1, 2, 3}}), sys(6, {})}), Errc::GroundMismatch);
  // Union covers all of [4]: the merged line is too long.
  CHECK_ERRC(decode({sys(4, {{1, 2, 3}}), sys(4, {{2, 3, 4}})}), Errc::NotDecodable);
  // Valid line, but not the encoding of it: {1,2,4} is not a consecutive window of {1,2,3,4}.
  CHECK_ERRC(decode({sys(6, {{1, 2, 3}}), sys(6, {{1, 2, 4}})}), Errc::NotDecodable);
  // Merged lines meeting in two points.
  CHECK_ERRC(decode({sys(7, {{1, 2, 3}, {1, 4, 5}}), sys(7, {{2, 3, 4}})}), Errc::NotDecodable);
}

TEST_CASE("round trip, validity and weak maps on n <= 6") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& p : all_paving(n)) {
      const auto pair = encode(p);
      CHECK(decode(pair) == p);
      if (n >= 4) {
        CHECK(weak_map_leq(sparse_from_hypergraph(pair.even), p));
        CHECK(weak_map_leq(sparse_from_hypergraph(pair.odd), p));
      }
    }
}

TEST_CASE("enumeration matches the subset oracle on n <= 5") {
  for (int n = 3; n <= 5; ++n) {
    auto a = all_paving(n);
    auto b = oracle::all_paving_by_subsets(n);
    auto key = [](const PavingLines& x, const PavingLines& y) {
      return std::lexicographical_compare(x.lines().begin(), x.lines().end(), y.lines().begin(),
                                          y.lines().end());
    };
    std::sort(a.begin(), a.end(), key);
    std::sort(b.begin(), b.end(), key);
    CHECK(a == b);
  }
}

TEST_CASE("random round trips") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const int n = 8 + i % 2;
    const auto p = oracle::random_paving(n, rng, 10);
    const auto pair = encode(p);
    CHECK(decode(pair) == p);
  }
}

TEST_CASE("X-freeness is inherited on n <= 6") {
  for (int n = 4; n <= 6; ++n)
    for (const auto& p : all_paving(n)) {
      if (!is_x_free(p)) continue;
      const auto pair = encode(p);
      CHECK(is_x_free(sparse_from_hypergraph(pair.even)));
      CHECK(is_x_free(sparse_from_hypergraph(pair.odd)));
    }
}
