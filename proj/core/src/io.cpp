#include "lin3/io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "lin3/error.hpp"

namespace lin3::io {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + msg);
}

int to_int(const Line& line, std::string_view tok) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    fail(line.number, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

std::vector<int> ints(const Line& line, std::size_t from = 0) {
  std::vector<int> out;
  for (std::size_t i = from; i < line.tokens.size(); ++i) out.push_back(to_int(line, line.tokens[i]));
  return out;
}

std::vector<int> expect_header(const std::vector<Line>& lines, std::size_t arity, const char* what) {
  if (lines.empty()) throw Error(Errc::Parse, std::string("empty ") + what + " input");
  auto header = ints(lines.front());
  if (header.size() != arity) fail(lines.front().number, std::string("malformed ") + what + " header");
  for (int v : header)
    if (v < 0) fail(lines.front().number, "negative header value");
  return header;
}

void join(std::ostringstream& os, const std::vector<int>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
}

PavingLines pav_from_lines(const std::vector<Line>& lines) {
  const auto header = expect_header(lines, 2, ".pav");
  const auto k = static_cast<std::size_t>(header[1]);
  if (lines.size() - 1 != k)
    fail(lines.front().number, "header announces " + std::to_string(k) + " lines, found " +
                                   std::to_string(lines.size() - 1));
  std::vector<PointSet> body;
  for (std::size_t i = 1; i < lines.size(); ++i) body.push_back(ints(lines[i]));
  return PavingLines::make(header[0], std::move(body));
}

}  // namespace

std::string serialize(const TripleSystem& h) {
  std::ostringstream os;
  os << h.n() << ' ' << h.size() << '\n';
  for (const auto& t : h.edges()) os << t.v[0] << ' ' << t.v[1] << ' ' << t.v[2] << '\n';
  return os.str();
}

TripleSystem parse_l3h(std::string_view text) {
  const auto lines = tokenize(text);
  const auto header = expect_header(lines, 2, ".l3h");
  const auto m = static_cast<std::size_t>(header[1]);
  if (lines.size() - 1 != m)
    fail(lines.front().number, "header announces " + std::to_string(m) + " edges, found " +
                                   std::to_string(lines.size() - 1));
  std::vector<std::array<int, 3>> triples;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto xs = ints(lines[i]);
    if (xs.size() != 3) fail(lines[i].number, "an edge needs exactly 3 vertices");
    if (!(xs[0] < xs[1] && xs[1] < xs[2])) fail(lines[i].number, "edge vertices must satisfy a < b < c");
    triples.push_back({xs[0], xs[1], xs[2]});
  }
  return make_system(header[0], triples);
}

std::string serialize(const PavingLines& p) {
  std::ostringstream os;
  os << p.n() << ' ' << p.lines().size() << '\n';
  for (const auto& line : p.lines()) {
    join(os, line);
    os << '\n';
  }
  return os.str();
}

PavingLines parse_pav(std::string_view text) { return pav_from_lines(tokenize(text)); }

std::string serialize(const SparsePaving& s) {
  std::ostringstream os;
  os << s.n << ' ' << s.r << ' ' << s.ch.size() << '\n';
  for (const auto& member : s.ch) {
    join(os, member);
    os << '\n';
  }
  return os.str();
}

SparsePaving parse_sp(std::string_view text) {
  const auto lines = tokenize(text);
  const auto header = expect_header(lines, 3, ".sp");
  const auto m = static_cast<std::size_t>(header[2]);
  if (lines.size() - 1 != m)
    fail(lines.front().number, "header announces " + std::to_string(m) + " members, found " +
                                   std::to_string(lines.size() - 1));
  std::vector<PointSet> members;
  for (std::size_t i = 1; i < lines.size(); ++i) members.push_back(ints(lines[i]));
  return validate_sparse(header[0], header[1], std::move(members));
}

std::string serialize(const Rank3Matroid& m) {
  std::ostringstream os;
  os << "rank3 " << m.n() << "\nloops";
  for (int x : m.loops()) os << ' ' << x;
  os << '\n';
  for (const auto& block : m.classes()) {
    os << "class";
    for (int x : block) os << ' ' << x;
    os << '\n';
  }
  os << serialize(m.structure());
  return os.str();
}

Rank3Matroid parse_rank3(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() < 2 || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "rank3")
    throw Error(Errc::Parse, "expected 'rank3 n' header");
  const int n = to_int(lines[0], lines[0].tokens[1]);
  if (lines[1].tokens.front() != "loops") fail(lines[1].number, "expected 'loops' line");
  PointSet loops = ints(lines[1], 1);

  std::vector<PointSet> classes;
  std::size_t i = 2;
  for (; i < lines.size() && lines[i].tokens.front() == "class"; ++i)
    classes.push_back(ints(lines[i], 1));
  const std::vector<Line> rest(lines.begin() + static_cast<std::ptrdiff_t>(i), lines.end());
  return Rank3Matroid::make(n, std::move(loops), std::move(classes), pav_from_lines(rest));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Parse, "cannot write " + path.string());
  out << contents;
}

}  // namespace lin3::io
