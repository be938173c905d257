#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lin3/hypergraph.hpp"
#include "lin3/matroid3.hpp"

namespace lin3::io {

// .l3h: "n m", then m lines "a b c" with a < b < c.
// .pav: "n k", then k lines, each the points of one long line.
// .sp:  "n r m", then m lines of r elements (general-rank sparse paving).
// rank-3 matroid: "rank3 n", "loops ...", one "class ..." line per parallel
// class, then an embedded .pav block for the simplification.
// Blank lines and '#' comments are ignored everywhere; errors are Errc::Parse
// with the offending line number, or the validation error of the payload.

std::string serialize(const TripleSystem& h);
TripleSystem parse_l3h(std::string_view text);

std::string serialize(const PavingLines& p);
PavingLines parse_pav(std::string_view text);

std::string serialize(const SparsePaving& s);
SparsePaving parse_sp(std::string_view text);

std::string serialize(const Rank3Matroid& m);
Rank3Matroid parse_rank3(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace lin3::io
