#include "dtqft/registry.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace dtqft {

void Registry::add_algebra(AlgebraPtr a) {
  if (a->field() != field_) throw FieldMismatch("algebra '" + a->name() + "' is over " + a->field().to_string());
  if (!algebras_.emplace(a->name(), a).second) throw std::invalid_argument("duplicate algebra name '" + a->name() + "'");
}

void Registry::add_bimodule(BimodulePtr m) {
  for (const auto& alg : {m->left_algebra(), m->right_algebra()}) {
    if (!has_algebra(alg->name())) {
      throw UnknownName("bimodule '" + m->name() + "' refers to unregistered algebra '" + alg->name() + "'");
    }
  }
  if (!bimodules_.emplace(m->name(), m).second) throw std::invalid_argument("duplicate bimodule name '" + m->name() + "'");
}

void Registry::add_morphism(std::string name, TwoMorphism phi) {
  if (!morphisms_.emplace(name, std::move(phi)).second) {
    throw std::invalid_argument("duplicate morphism name '" + name + "'");
  }
}

AlgebraPtr Registry::algebra(std::string_view name) const {
  auto it = algebras_.find(std::string(name));
  if (it == algebras_.end()) throw UnknownName("unknown algebra '" + std::string(name) + "'");
  return it->second;
}

BimodulePtr Registry::bimodule(std::string_view name) const {
  auto it = bimodules_.find(std::string(name));
  if (it == bimodules_.end()) throw UnknownName("unknown bimodule '" + std::string(name) + "'");
  return it->second;
}

const TwoMorphism& Registry::morphism(std::string_view name) const {
  auto it = morphisms_.find(std::string(name));
  if (it == morphisms_.end()) throw UnknownName("unknown morphism '" + std::string(name) + "'");
  return it->second;
}

AlgebraPtr Registry::ground() const {
  if (auto it = algebras_.find("k"); it != algebras_.end() && it->second->dim() == 1) return it->second;
  for (const auto& [name, a] : algebras_) {
    if (a->dim() == 1) return a;
  }
  return nullptr;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<Letter> parse_letters(const Registry& reg, std::string_view text) {
  std::vector<Letter> letters;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    std::size_t colon = item.rfind(':');
    if (colon == std::string::npos || colon + 2 != item.size() || (item.back() != '+' && item.back() != '-')) {
      throw std::invalid_argument("bad word letter '" + item + "': expected <bimodule>:+ or <bimodule>:-");
    }
    letters.push_back(Letter{reg.bimodule(item.substr(0, colon)), item.back() == '+' ? Sign::plus : Sign::minus});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return letters;
}

bool is_unit_word(const std::string& t) { return t.rfind("1@", 0) == 0; }

Scalar scalar_from_json(const nlohmann::json& j, Field field) {
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::from_int(field, j.get<long>());
  throw std::invalid_argument("expected a rational string or integer, got " + j.dump());
}

std::vector<Scalar> scalars_from_json(const nlohmann::json& j, Field field, std::size_t expected, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  if (j.size() != expected) {
    throw std::invalid_argument(std::string(what) + " has " + std::to_string(j.size()) + " entries, expected " +
                                std::to_string(expected));
  }
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(scalar_from_json(e, field));
  return out;
}

std::vector<Matrix> action_from_json(const nlohmann::json& j, Field field, std::size_t dim, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of matrices");
  std::vector<Matrix> out;
  for (const auto& m : j) {
    Matrix mat = matrix_from_json(m, field);
    if (dim == 0 && mat.rows() == 0) mat = Matrix(field, 0, 0);
    out.push_back(std::move(mat));
  }
  return out;
}

nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw WorkspaceError(p.string() + ": cannot open file");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw WorkspaceError(p.string() + ": " + e.what());
  }
}

std::vector<std::filesystem::path> listed(const nlohmann::json& manifest, const char* kind,
                                          const std::filesystem::path& base) {
  std::vector<std::filesystem::path> out;
  if (!manifest.contains(kind)) return out;
  if (!manifest[kind].is_array()) throw WorkspaceError(std::string("manifest field '") + kind + "' must be a list");
  for (const auto& p : manifest[kind]) out.push_back(base / p.get<std::string>());
  return out;
}

}  // namespace

OneMorWord parse_word(const Registry& reg, std::string_view text) {
  std::string t = trim(text);
  if (is_unit_word(t)) return OneMorWord::empty(reg.algebra(t.substr(2)));
  return OneMorWord(parse_letters(reg, t));
}

DefectCircle parse_circle(const Registry& reg, std::string_view text) {
  std::string t = trim(text);
  DefectCircle c;
  if (is_unit_word(t)) {
    c.phase = reg.algebra(t.substr(2));
  } else {
    c.letters = parse_letters(reg, t);
  }
  c.check();
  return c;
}

Matrix matrix_from_json(const nlohmann::json& j, Field field) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be a list of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw std::invalid_argument("matrix rows have unequal lengths");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], field);
  }
  return m;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

FrobeniusAlgebra algebra_from_json(const nlohmann::json& j, Field field) {
  const std::size_t n = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("basis")) labels = j.at("basis").get<std::vector<std::string>>();
  return FrobeniusAlgebra(j.at("name").get<std::string>(), std::move(labels),
                          scalars_from_json(j.at("mult"), field, n * n * n, "mult"),
                          scalars_from_json(j.at("unit"), field, n, "unit"),
                          scalars_from_json(j.at("form"), field, n, "form"));
}

nlohmann::json algebra_to_json(const FrobeniusAlgebra& a) {
  auto strings = [](const auto& range) {
    auto out = nlohmann::json::array();
    for (const auto& s : range) out.push_back(s.to_string());
    return out;
  };
  return nlohmann::json{{"name", a.name()},
                        {"dim", a.dim()},
                        {"basis", a.basis_labels()},
                        {"mult", strings(a.structure_constants())},
                        {"unit", strings(a.unit().data())},
                        {"form", strings(a.form_values())}};
}

GroupTable group_from_json(const nlohmann::json& j) {
  GroupTable g;
  g.name = j.at("name").get<std::string>();
  const std::size_t n = j.at("order").get<std::size_t>();
  const auto& t = j.at("table");
  if (t.size() == n * n && (n == 0 || !t[0].is_array())) {
    g.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n * n; ++i) g.table[i / n][i % n] = t[i].get<std::size_t>();
  } else {
    g.table = t.get<std::vector<std::vector<std::size_t>>>();
  }
  if (g.order() != n) throw std::invalid_argument("group '" + g.name + "': table does not match order");
  return g;
}

Bimodule bimodule_from_json(const nlohmann::json& j, const Registry& reg) {
  const std::string name = j.at("name").get<std::string>();
  AlgebraPtr left = reg.algebra(j.at("left_alg").get<std::string>());
  AlgebraPtr right = reg.algebra(j.at("right_alg").get<std::string>());
  const std::size_t dim = j.at("dim").get<std::size_t>();
  return Bimodule(name, left, right, dim, action_from_json(j.at("left_action"), reg.field(), dim, "left_action"),
                  action_from_json(j.at("right_action"), reg.field(), dim, "right_action"));
}

nlohmann::json bimodule_to_json(const Bimodule& m) {
  auto actions = [](const std::vector<Matrix>& ms) {
    auto out = nlohmann::json::array();
    for (const auto& x : ms) out.push_back(matrix_to_json(x));
    return out;
  };
  return nlohmann::json{{"name", m.name()},
                        {"left_alg", m.left_algebra()->name()},
                        {"right_alg", m.right_algebra()->name()},
                        {"dim", m.dim()},
                        {"left_action", actions(m.left_action())},
                        {"right_action", actions(m.right_action())}};
}

TwoMorphism morphism_from_json(const nlohmann::json& j, const Registry& reg, std::string* name) {
  if (name) *name = j.at("name").get<std::string>();
  OneMorWord source = parse_word(reg, j.at("source").get<std::string>());
  OneMorWord target = parse_word(reg, j.at("target").get<std::string>());
  Matrix m = matrix_from_json(j.at("matrix"), reg.field());
  if (m.rows() == 0) m = Matrix(reg.field(), 0, composite(source)->module.dim());
  return TwoMorphism{std::move(source), std::move(target), std::move(m)};
}

Registry load_workspace(const std::filesystem::path& manifest_path, Field field) {
  nlohmann::json manifest = read_json(manifest_path);
  const std::filesystem::path base = manifest_path.parent_path();
  Registry reg(field);

  auto guarded = [](const std::filesystem::path& p, auto&& body) {
    try {
      body();
    } catch (const WorkspaceError&) {
      throw;
    } catch (const std::exception& e) {
      throw WorkspaceError(p.string() + ": " + e.what());
    }
  };
  auto require_valid = [](const ValidationReport& r) {
    if (r.all_passed()) return;
    for (const auto& e : r.entries()) {
      if (!e.passed) throw std::invalid_argument("validation failed: " + e.name + " [" + e.inputs + "] " + e.witness);
    }
  };

  for (const auto& p : listed(manifest, "algebras", base)) {
    nlohmann::json j = read_json(p);
    guarded(p, [&] {
      auto a = std::make_shared<const FrobeniusAlgebra>(algebra_from_json(j, field));
      require_valid(validate(*a));
      reg.add_algebra(a);
    });
  }
  for (const auto& p : listed(manifest, "groups", base)) {
    nlohmann::json j = read_json(p);
    guarded(p, [&] {
      GroupTable g = group_from_json(j);
      std::optional<Scalar> scale;
      if (j.contains("scale")) scale = scalar_from_json(j.at("scale"), field);
      FrobeniusAlgebra a = group_algebra(g, field, scale);
      if (j.contains("algebra")) {
        a = FrobeniusAlgebra(j.at("algebra").get<std::string>(), a.basis_labels(), a.structure_constants(),
                             {a.unit().data().begin(), a.unit().data().end()}, a.form_values());
      }
      auto ptr = std::make_shared<const FrobeniusAlgebra>(std::move(a));
      require_valid(validate(*ptr));
      reg.add_algebra(ptr);
    });
  }
  for (const auto& p : listed(manifest, "bimodules", base)) {
    nlohmann::json j = read_json(p);
    guarded(p, [&] {
      auto m = std::make_shared<const Bimodule>(bimodule_from_json(j, reg));
      require_valid(validate(*m));
      reg.add_bimodule(m);
    });
  }
  for (const auto& p : listed(manifest, "morphisms", base)) {
    nlohmann::json j = read_json(p);
    guarded(p, [&] {
      std::string name;
      TwoMorphism phi = morphism_from_json(j, reg, &name);
      require_intertwiner(phi);
      reg.add_morphism(std::move(name), std::move(phi));
    });
  }
  for (const auto& p : listed(manifest, "diagrams", base)) {
    if (!std::filesystem::exists(p)) throw WorkspaceError(p.string() + ": diagram file not found");
    reg.add_diagram_path(p);
  }
  return reg;
}

}  // namespace dtqft
