// Text input for the CLI and tests.  Every number uses the parse_exact
// syntax; '#' starts a comment.  Errors are ParseError with "file:line: ..."
// messages.

#pragma once

#include <string>
#include <vector>

#include "sos/cubes.hpp"
#include "sos/mesh3d.hpp"

namespace sos::io {

struct CubeFile {
  Rational side;
  std::vector<Point3> lows;
};

struct OffMesh {
  std::vector<Point3> vertices;
  std::vector<Triangle> triangles;
};

// Parsers take the text plus a name used in error messages.
std::vector<Point2> parse_points2(const std::string& text, const std::string& name);
std::vector<Point3> parse_points3(const std::string& text, const std::string& name);
/// Polylines are separated by one or more blank lines.
std::vector<std::vector<Point2>> parse_polylines(const std::string& text, const std::string& name);
CubeFile parse_cubes(const std::string& text, const std::string& name);
OffMesh parse_off(const std::string& text, const std::string& name);

/// Whole file as a string; throws ParseError naming the path if unreadable.
std::string read_file(const std::string& path);

}  // namespace sos::io
