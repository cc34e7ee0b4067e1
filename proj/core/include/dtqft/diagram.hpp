#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dtqft/bimodule.hpp"
#include "dtqft/registry.hpp"

namespace dtqft {

/// Error located in diagram source text (1-based line and column).
class DiagramError : public std::runtime_error {
 public:
  DiagramError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ParseError : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

class TypeError : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

/// Cell kinds. For a generator X from A to B the cap and cup cells are
///
///   kind    map          consumes        produces
///   capL    ev_X         (X,-) (X,+)     1_A
///   cupL    coev_X       1_B             (X,+) (X,-)
///   capR    ev~_X        (X,+) (X,-)     1_B
///   cupR    coev~_X      1_A             (X,-) (X,+)
///
/// id:X:s is the identity strand on (X,s) and box:f the registered 2-morphism f.
enum class CellKind { id, box, cap_l, cup_l, cap_r, cup_r };

struct Cell {
  CellKind kind = CellKind::id;
  std::string name;
  Sign sign = Sign::plus;  // only meaningful for id
  std::size_t line = 0;
  std::size_t column = 0;

  std::string to_string() const;
};

/// Rows bottom to top, cells left to right as drawn.
struct Diagram {
  std::vector<std::vector<Cell>> rows;
  /// Phases at the far left and far right, from an "@ambient L R" line.
  std::optional<std::string> ambient_left;
  std::optional<std::string> ambient_right;
  std::size_t ambient_line = 0;

  std::string to_text() const;
};

/// Grammar: one row per line, whitespace-separated cells
/// (id:<name>:<+|->, box:<name>, capL:<name>, cupL:<name>, capR:<name>,
/// cupR:<name>); '#' starts a comment; blank lines are ignored; an optional
/// "@ambient <left> <right>" line names the outer phases.
Diagram parse_diagram(std::string_view text);

/// Boundary words, bottom first: the input of row 1, then the output of each row.
/// An empty diagram has the single interface 1_ambient, or none without an ambient.
std::vector<OneMorWord> typecheck(const Diagram& d, const Registry& reg);

/// Rows fold horizontally and stack vertically. An empty diagram needs an
/// ambient phase and evaluates to its identity.
TwoMorphism evaluate(const Diagram& d, const Registry& reg);

}  // namespace dtqft
