#include "mkeb/point_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace mkeb {

namespace {

double parse_double(const std::string& token, std::size_t line) {
  // std::from_chars for double handles "1e-3", "-2.5E+04" and friends.
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line) + ": not a number: '" + token + "'");
  }
  return value;
}

}  // namespace

PointSet read_points(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_nonblank = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_nonblank()) throw ParseError("empty point file");
  long long m = 0;
  long long n = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> m >> n) || (header >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected header 'm n'");
    }
  }
  if (m < 1 || n < 1) throw ParseError("header must have m >= 1 and n >= 1");

  Eigen::MatrixXd cols(n, m);
  for (long long j = 0; j < m; ++j) {
    if (!next_nonblank()) {
      throw ParseError("expected " + std::to_string(m) + " points, found " + std::to_string(j));
    }
    std::istringstream row(line);
    std::string token;
    long long i = 0;
    while (row >> token) {
      if (i >= n) throw ParseError("line " + std::to_string(line_no) + ": too many coordinates");
      cols(i++, j) = parse_double(token, line_no);
    }
    if (i != n) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                       " coordinates, found " + std::to_string(i));
    }
  }
  if (next_nonblank()) throw ParseError("line " + std::to_string(line_no) + ": trailing data");
  try {
    return PointSet(std::move(cols));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

PointSet read_points(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return read_points(in);
}

void write_points(std::ostream& out, const PointSet& ps) {
  out << ps.size() << ' ' << ps.dimension() << '\n';
  char buf[32];
  for (std::size_t j = 0; j < ps.size(); ++j) {
    for (std::size_t i = 0; i < ps.dimension(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", ps.coords()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      if (i > 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

void write_points(const std::filesystem::path& path, const PointSet& ps) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  write_points(out, ps);
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace mkeb
