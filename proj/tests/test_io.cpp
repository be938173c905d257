#include <random>

#include "lin3/constructions.hpp"
#include "lin3/io.hpp"
#include "support/check.hpp"
#include "support/oracles.hpp"

using namespace lin3;

TEST_CASE("l3h round trip") {
  const auto b4 = bose_burton(4);
  CHECK(io::parse_l3h(io::serialize(b4)) == b4);
  CHECK(io::serialize(whirl3().system) == "6 3\n1 2 3\n1 5 6\n3 4 5\n");
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto h = oracle::random_linear_system(10, rng, 20);
    const auto text = io::serialize(h);
    CHECK(io::parse_l3h(text) == h);
    CHECK(io::serialize(io::parse_l3h(text)) == text);
  }
}

TEST_CASE("l3h comments and errors") {
  CHECK(io::parse_l3h("# w3\n6 3\n\n1 2 3 # first\n3 4 5\n1 5 6\n") == whirl3().system);
  CHECK_ERRC(io::parse_l3h(""), Errc::Parse);
  CHECK_ERRC(io::parse_l3h("6 2\n1 2 3\n"), Errc::Parse);
  CHECK_ERRC(io::parse_l3h("6 1\n1 2\n"), Errc::Parse);
  CHECK_ERRC(io::parse_l3h("6 1\n3 2 1\n"), Errc::Parse);
  CHECK_ERRC(io::parse_l3h("6 1\n1 2 x\n"), Errc::Parse);
  CHECK_ERRC(io::parse_l3h("6\n"), Errc::Parse);
  CHECK_ERRC(io::parse_l3h("6 2\n1 2 3\n1 2 4\n"), Errc::NotLinear);
  CHECK_ERRC(io::parse_l3h("6 1\n1 2 7\n"), Errc::OutOfRange);
  try {
    io::parse_l3h("6 1\n\n1 2\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("pav round trip") {
  const auto p = PavingLines::make(9, {{1, 2, 3, 4}, {1, 5, 6}, {2, 5, 7, 8, 9}});
  const auto text = io::serialize(p);
  CHECK(text == "9 3\n1 2 3 4\n1 5 6\n2 5 7 8 9\n");
  CHECK(io::parse_pav(text) == p);
  CHECK_ERRC(io::parse_pav("5 1\n1 2 3 4 5\n"), Errc::InvalidLines);
  CHECK_ERRC(io::parse_pav("5 2\n1 2 3\n"), Errc::Parse);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto q = oracle::random_paving(9, rng, 10);
    CHECK(io::parse_pav(io::serialize(q)) == q);
  }
}

TEST_CASE("sp round trip") {
  const auto s = graham_sloane(7, 4, 2);
  CHECK(io::parse_sp(io::serialize(s)) == s);
  CHECK_ERRC(io::parse_sp("4 2 2\n1 2\n1 3\n"), Errc::ExchangeViolation);
  CHECK_ERRC(io::parse_sp("4 2\n"), Errc::Parse);
}

TEST_CASE("rank3 round trip") {
  const auto m = Rank3Matroid::make(8, {8}, {{1, 7}, {2}, {3, 6}, {4}, {5}},
                                    PavingLines::make(5, {{1, 2, 3}}));
  const auto text = io::serialize(m);
  CHECK(text == "rank3 8\nloops 8\nclass 1 7\nclass 2\nclass 3 6\nclass 4\nclass 5\n5 1\n1 2 3\n");
  CHECK(io::parse_rank3(text) == m);
  CHECK_ERRC(io::parse_rank3("rank 3\n"), Errc::Parse);
  CHECK_ERRC(io::parse_rank3("rank3 3\nclass 1\n"), Errc::Parse);
  CHECK_ERRC(io::parse_rank3("rank3 4\nloops\nclass 1\nclass 2\nclass 3\n3 0\n"), Errc::InvalidPartition);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "lin3_test_io.l3h";
  io::write_file(path, io::serialize(fano().system));
  CHECK(io::parse_l3h(io::read_file(path)) == fano().system);
  std::filesystem::remove(path);
  CHECK_ERRC(io::read_file(path), Errc::Parse);
}
