#include "lts/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace lts {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void located_error(ErrorCode code, std::size_t line, const std::string& what) {
  Error err(code, "line " + std::to_string(line) + ": " + what);
  err.with_line(line);
  throw err;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  located_error(ErrorCode::SyntaxError, line, what);
}

std::int64_t integer(const Line& line, std::string_view token) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    syntax_error(line.number, "expected an integer, got '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

TripleSystem parse_system(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    auto tokens = split_ws(raw);
    if (!tokens.empty() && tokens.front().front() != '#') lines.push_back({number, std::move(tokens)});
    start = end + 1;
  }

  if (lines.empty()) syntax_error(1, "missing 'lts 1' header");
  const auto& header = lines[0];
  if (header.tokens.size() != 2 || header.tokens[0] != "lts") {
    syntax_error(header.number, "expected header 'lts 1'");
  }
  if (header.tokens[1] != "1") {
    syntax_error(header.number, "unsupported format version '" + std::string(header.tokens[1]) + "'");
  }
  if (lines.size() < 2) syntax_error(header.number + 1, "missing counts line 'n m'");
  const auto& counts = lines[1];
  if (counts.tokens.size() != 2) syntax_error(counts.number, "expected counts line 'n m'");
  const auto n = integer(counts, counts.tokens[0]);
  const auto m = integer(counts, counts.tokens[1]);
  if (n < 0 || m < 0) syntax_error(counts.number, "counts must be non-negative");
  if (static_cast<std::size_t>(m) != lines.size() - 2) {
    syntax_error(counts.number, "declared " + std::to_string(m) + " triples but found " +
                                    std::to_string(lines.size() - 2));
  }

  std::vector<RawTriple> triples;
  std::vector<std::size_t> line_of;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 3) syntax_error(line.number, "expected three vertices");
    RawTriple t{integer(line, line.tokens[0]), integer(line, line.tokens[1]), integer(line, line.tokens[2])};
    for (auto v : t) {
      if (v < 0 || v >= n) {
        located_error(ErrorCode::VertexOutOfRange, line.number,
                      "vertex " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
      }
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      located_error(ErrorCode::DegenerateTriple, line.number, "repeated vertex");
    }
    if (!(t[0] < t[1] && t[1] < t[2])) syntax_error(line.number, "triple entries must be increasing");
    if (!triples.empty() && !(triples.back() < t)) {
      syntax_error(line.number, "triple lines must be strictly increasing");
    }
    triples.push_back(t);
    line_of.push_back(line.number);
  }

  try {
    return build_system(static_cast<std::size_t>(n), triples);
  } catch (Error& err) {
    if (err.code() != ErrorCode::DuplicatePairCoverage || !err.pair()) throw;
    // Report the second line covering the pair.
    auto [x, y] = *err.pair();
    std::size_t hits = 0;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const auto& t = triples[i];
      auto has = [&](std::int64_t v) { return t[0] == v || t[1] == v || t[2] == v; };
      if (has(x) && has(y) && ++hits == 2) {
        Error located(err.code(), "line " + std::to_string(line_of[i]) + ": " + err.detail());
        located.with_pair(x, y).with_line(line_of[i]);
        throw located;
      }
    }
    throw;
  }
}

std::string serialize(const TripleSystem& sys) {
  std::ostringstream out;
  out << "lts 1\n" << sys.n() << ' ' << sys.size() << '\n';
  for (const auto& t : sys.triples()) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
  return out.str();
}

TripleSystem read_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_system(buffer.str());
}

void write_system_file(const std::string& path, const TripleSystem& sys) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize(sys);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace lts
