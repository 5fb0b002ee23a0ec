#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weldkit/diagram.hpp"
#include "weldkit/movie.hpp"

namespace weld {

/// Raised for every rejected input; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedDiagram {
  std::string name;
  PlanarDiagram diagram;
};

/// Parses one word (a single line of tokens) and validates it.
PlanarDiagram parse_word(std::string_view line, std::size_t line_no = 1);

/// Classical-only word, checked structurally but not for planarity.
GaussCode parse_gauss_code(std::string_view line, std::size_t line_no = 1);

/// Accepts either a bare word or a single `diagram NAME` record.
PlanarDiagram parse_diagram(std::string_view text);

/// All `diagram` records of a file, in order.
std::vector<NamedDiagram> parse_diagram_file(std::string_view text);

std::string serialize_diagram(const PlanarDiagram& d);
std::string serialize_record(const NamedDiagram& d);

Movie parse_movie(std::string_view text);
std::string serialize_movie(const Movie& m);

}  // namespace weld
