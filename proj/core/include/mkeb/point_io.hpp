#pragma once

#include "mkeb/geometry.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

namespace mkeb {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Point file: a header line "m n" followed by m lines of n whitespace
// separated decimal coordinates. Scientific notation is accepted.
PointSet read_points(std::istream& in);
PointSet read_points(const std::filesystem::path& path);

// Writes with 17 significant digits so a read-back reproduces every double.
void write_points(std::ostream& out, const PointSet& ps);
void write_points(const std::filesystem::path& path, const PointSet& ps);

}  // namespace mkeb
