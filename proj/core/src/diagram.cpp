#include "dtqft/diagram.hpp"

#include <cctype>

#include "dtqft/pivotal.hpp"

namespace dtqft {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back(Token{std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::vector<std::string> split_colons(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t c = s.find(':', start);
    parts.push_back(s.substr(start, c == std::string::npos ? std::string::npos : c - start));
    if (c == std::string::npos) break;
    start = c + 1;
  }
  return parts;
}

Cell parse_cell(const Token& tok, std::size_t line) {
  auto parts = split_colons(tok.text);
  Cell cell;
  cell.line = line;
  cell.column = tok.column;
  const std::string& kind = parts[0];
  if (kind == "id") {
    if (parts.size() != 3 || parts[1].empty() || (parts[2] != "+" && parts[2] != "-")) {
      throw ParseError("malformed identity cell '" + tok.text + "', expected id:<name>:<+|->", line, tok.column);
    }
    cell.kind = CellKind::id;
    cell.name = parts[1];
    cell.sign = parts[2] == "+" ? Sign::plus : Sign::minus;
    return cell;
  }
  if (kind == "box") {
    cell.kind = CellKind::box;
  } else if (kind == "capL") {
    cell.kind = CellKind::cap_l;
  } else if (kind == "cupL") {
    cell.kind = CellKind::cup_l;
  } else if (kind == "capR") {
    cell.kind = CellKind::cap_r;
  } else if (kind == "cupR") {
    cell.kind = CellKind::cup_r;
  } else {
    throw ParseError("unknown cell kind '" + kind + "' in '" + tok.text + "'", line, tok.column);
  }
  if (parts.size() != 2 || parts[1].empty()) {
    throw ParseError("malformed cell '" + tok.text + "', expected " + kind + ":<name>", line, tok.column);
  }
  cell.name = parts[1];
  return cell;
}

struct CellType {
  OneMorWord in;
  OneMorWord out;
};

BimodulePtr lookup_bimodule(const Registry& reg, const Cell& c) {
  try {
    return reg.bimodule(c.name);
  } catch (const UnknownName& e) {
    throw TypeError(e.what(), c.line, c.column);
  }
}

CellType cell_type(const Cell& c, const Registry& reg) {
  if (c.kind == CellKind::box) {
    try {
      const TwoMorphism& phi = reg.morphism(c.name);
      return CellType{phi.source, phi.target};
    } catch (const UnknownName& e) {
      throw TypeError(e.what(), c.line, c.column);
    }
  }
  BimodulePtr m = lookup_bimodule(reg, c);
  if (c.kind == CellKind::id) {
    OneMorWord w({Letter{m, c.sign}});
    return CellType{w, w};
  }
  OneMorWord x({Letter{m, Sign::plus}});
  OneMorWord dag = x.adjoint();
  switch (c.kind) {
    case CellKind::cap_l:
      return CellType{concat(dag, x), OneMorWord::empty(m->source())};
    case CellKind::cup_l:
      return CellType{OneMorWord::empty(m->target()), concat(x, dag)};
    case CellKind::cap_r:
      return CellType{concat(x, dag), OneMorWord::empty(m->target())};
    case CellKind::cup_r:
      return CellType{OneMorWord::empty(m->source()), concat(dag, x)};
    default:
      break;
  }
  throw std::logic_error("unhandled cell kind");
}

TwoMorphism cell_value(const Cell& c, const Registry& reg) {
  switch (c.kind) {
    case CellKind::id:
      return TwoMorphism::identity(OneMorWord({Letter{reg.bimodule(c.name), c.sign}}));
    case CellKind::box:
      return reg.morphism(c.name);
    case CellKind::cap_l:
      return adjunction_maps(reg.bimodule(c.name))->ev;
    case CellKind::cup_l:
      return adjunction_maps(reg.bimodule(c.name))->coev;
    case CellKind::cap_r:
      return adjunction_maps(reg.bimodule(c.name))->ev_tilde;
    case CellKind::cup_r:
      return adjunction_maps(reg.bimodule(c.name))->coev_tilde;
  }
  throw std::logic_error("unhandled cell kind");
}

AlgebraPtr ambient(const Registry& reg, const std::optional<std::string>& name, std::size_t line) {
  if (!name) return nullptr;
  try {
    return reg.algebra(*name);
  } catch (const UnknownName& e) {
    throw TypeError(e.what(), line, 1);
  }
}

const char* kind_name(CellKind k) {
  switch (k) {
    case CellKind::id:
      return "id";
    case CellKind::box:
      return "box";
    case CellKind::cap_l:
      return "capL";
    case CellKind::cup_l:
      return "cupL";
    case CellKind::cap_r:
      return "capR";
    case CellKind::cup_r:
      return "cupR";
  }
  return "?";
}

}  // namespace

std::string Cell::to_string() const {
  std::string s = std::string(kind_name(kind)) + ":" + name;
  if (kind == CellKind::id) s += sign == Sign::plus ? ":+" : ":-";
  return s;
}

std::string Diagram::to_text() const {
  std::string out;
  if (ambient_left && ambient_right) out += "@ambient " + *ambient_left + " " + *ambient_right + "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? " " : "") + row[i].to_string();
    out += "\n";
  }
  return out;
}

Diagram parse_diagram(std::string_view text) {
  Diagram d;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (!tokens.empty()) {
      if (tokens[0].text.front() == '@') {
        if (tokens[0].text != "@ambient") {
          throw ParseError("unknown directive '" + tokens[0].text + "'", line_no, tokens[0].column);
        }
        if (tokens.size() != 3) throw ParseError("@ambient takes exactly two phase names", line_no, tokens[0].column);
        if (d.ambient_left) throw ParseError("duplicate @ambient directive", line_no, tokens[0].column);
        d.ambient_left = tokens[1].text;
        d.ambient_right = tokens[2].text;
        d.ambient_line = line_no;
      } else {
        std::vector<Cell> row;
        for (const auto& t : tokens) row.push_back(parse_cell(t, line_no));
        d.rows.push_back(std::move(row));
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return d;
}

std::vector<OneMorWord> typecheck(const Diagram& d, const Registry& reg) {
  AlgebraPtr left = ambient(reg, d.ambient_left, d.ambient_line);
  AlgebraPtr right = ambient(reg, d.ambient_right, d.ambient_line);
  std::vector<OneMorWord> interfaces;
  if (d.rows.empty()) {
    if (left && !same_algebra(*left, *right)) {
      throw TypeError("an empty diagram needs equal ambient phases", d.ambient_line, 1);
    }
    if (left) interfaces.push_back(OneMorWord::empty(left));
    return interfaces;
  }
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    const auto& row = d.rows[r];
    std::vector<CellType> types;
    for (const auto& c : row) types.push_back(cell_type(c, reg));
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      const AlgebraPtr& a = types[i].in.source();
      const AlgebraPtr& b = types[i + 1].in.target();
      if (!same_algebra(*a, *b)) {
        throw TypeError("phase mismatch: " + row[i].to_string() + " has " + a->name() + " on its right but " +
                            row[i + 1].to_string() + " has " + b->name() + " on its left",
                        row[i + 1].line, row[i + 1].column);
      }
    }
    if (left && !same_algebra(*types.front().in.target(), *left)) {
      throw TypeError("leftmost phase is " + types.front().in.target()->name() + ", ambient is " + left->name(),
                      row.front().line, row.front().column);
    }
    if (right && !same_algebra(*types.back().in.source(), *right)) {
      throw TypeError("rightmost phase is " + types.back().in.source()->name() + ", ambient is " + right->name(),
                      row.back().line, row.back().column);
    }
    OneMorWord in = types.back().in;
    OneMorWord out = types.back().out;
    for (std::size_t i = types.size() - 1; i-- > 0;) {
      in = concat(types[i].in, in);
      out = concat(types[i].out, out);
    }
    if (r == 0) {
      interfaces.push_back(in);
    } else if (!(interfaces.back() == in)) {
      throw TypeError("row consumes " + in.to_string() + " but the row below produces " + interfaces.back().to_string(),
                      row.front().line, row.front().column);
    }
    interfaces.push_back(out);
  }
  return interfaces;
}

TwoMorphism evaluate(const Diagram& d, const Registry& reg) {
  auto interfaces = typecheck(d, reg);
  if (d.rows.empty()) {
    if (interfaces.empty()) throw TypeError("an empty diagram needs an @ambient phase", 1, 1);
    return TwoMorphism::identity(interfaces.front());
  }
  std::optional<TwoMorphism> result;
  for (const auto& row : d.rows) {
    TwoMorphism value = cell_value(row.back(), reg);
    for (std::size_t i = row.size() - 1; i-- > 0;) value = compose_horizontal(cell_value(row[i], reg), value);
    result = result ? compose_vertical(value, *result) : value;
  }
  return *result;
}

}  // namespace dtqft
