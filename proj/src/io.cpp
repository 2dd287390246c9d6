#include "sos/io.hpp"

#include <fstream>
#include <sstream>

namespace sos::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// One entry per input line (comments stripped), blank lines included so the
// polyline parser can see separators.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{n, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& msg, const std::string& token) {
  throw ParseError(name + ":" + std::to_string(line) + ": " + msg, token);
}

Rational number(const std::string& name, const Line& line, std::size_t k) {
  try {
    return parse_exact(line.tokens[k]);
  } catch (const ParseError& e) {
    fail(name, line.number, e.what(), e.token());
  }
}

void expect_width(const std::string& name, const Line& line, std::size_t width) {
  if (line.tokens.size() != width)
    fail(name, line.number,
         "expected " + std::to_string(width) + " values, found " + std::to_string(line.tokens.size()),
         line.tokens.empty() ? std::string() : line.tokens.back());
}

template <std::size_t D>
Point<D> point(const std::string& name, const Line& line) {
  expect_width(name, line, D);
  Point<D> p;
  for (std::size_t k = 0; k < D; ++k) p[k] = number(name, line, k);
  return p;
}

std::size_t count(const std::string& name, const Line& line, std::size_t k) {
  const std::string& t = line.tokens[k];
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 9)
    fail(name, line.number, "expected a non-negative integer, got '" + t + "'", t);
  return std::stoul(t);
}

}  // namespace

std::vector<Point2> parse_points2(const std::string& text, const std::string& name) {
  std::vector<Point2> out;
  for (const auto& line : tokenize(text))
    if (!line.tokens.empty()) out.push_back(point<2>(name, line));
  return out;
}

std::vector<Point3> parse_points3(const std::string& text, const std::string& name) {
  std::vector<Point3> out;
  for (const auto& line : tokenize(text))
    if (!line.tokens.empty()) out.push_back(point<3>(name, line));
  return out;
}

std::vector<std::vector<Point2>> parse_polylines(const std::string& text, const std::string& name) {
  std::vector<std::vector<Point2>> out;
  bool open = false;
  for (const auto& line : tokenize(text)) {
    if (line.tokens.empty()) {
      open = false;
      continue;
    }
    if (!open) out.emplace_back();
    open = true;
    out.back().push_back(point<2>(name, line));
  }
  return out;
}

CubeFile parse_cubes(const std::string& text, const std::string& name) {
  CubeFile out;
  bool have_side = false;
  for (const auto& line : tokenize(text)) {
    if (line.tokens.empty()) continue;
    if (!have_side) {
      if (line.tokens.size() != 2 || line.tokens[0] != "side")
        fail(name, line.number, "expected header 'side <rational>'", line.tokens[0]);
      out.side = number(name, line, 1);
      if (out.side.sign() != Sign::Positive)
        fail(name, line.number, "side must be positive", line.tokens[1]);
      have_side = true;
      continue;
    }
    out.lows.push_back(point<3>(name, line));
  }
  if (!have_side) fail(name, 1, "missing 'side' header", "");
  return out;
}

OffMesh parse_off(const std::string& text, const std::string& name) {
  std::vector<Line> lines;
  for (auto& line : tokenize(text))
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  if (lines.empty() || lines[0].tokens[0] != "OFF")
    fail(name, lines.empty() ? 1 : lines[0].number, "expected 'OFF' header",
         lines.empty() ? std::string() : lines[0].tokens[0]);

  // The counts may share the header line.
  std::size_t at = 1;
  Line counts = lines[0];
  counts.tokens.erase(counts.tokens.begin());
  if (counts.tokens.empty()) {
    if (lines.size() < 2) fail(name, lines[0].number, "missing counts line", "");
    counts = lines[at++];
  }
  if (counts.tokens.size() < 2 || counts.tokens.size() > 3)
    fail(name, counts.number, "expected 'vertices faces [edges]'", counts.tokens.empty() ? "" : counts.tokens[0]);
  const std::size_t nv = count(name, counts, 0), nf = count(name, counts, 1);
  if (lines.size() - at != nv + nf)
    fail(name, lines.back().number,
         "expected " + std::to_string(nv) + " vertex and " + std::to_string(nf) + " face lines, found " +
             std::to_string(lines.size() - at),
         "");

  OffMesh out;
  for (std::size_t k = 0; k < nv; ++k) out.vertices.push_back(point<3>(name, lines[at++]));
  for (std::size_t k = 0; k < nf; ++k) {
    const Line& line = lines[at++];
    if (line.tokens[0] != "3") fail(name, line.number, "faces must be triangles", line.tokens[0]);
    expect_width(name, line, 4);
    Triangle t;
    for (int j = 0; j < 3; ++j) {
      const std::size_t v = count(name, line, j + 1);
      if (v >= nv) fail(name, line.number, "vertex index out of range", line.tokens[j + 1]);
      t[j] = static_cast<std::uint32_t>(v);
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      fail(name, line.number, "triangle repeats a vertex", line.tokens[1]);
    out.triangles.push_back(t);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sos::io
