#pragma once

// Brute-force reference computations. They deliberately avoid the library's
// linear algebra and use plain GMP rationals and explicit enumeration.

#include <gmpxx.h>

#include <cstddef>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace oracle {

using Table = std::vector<std::vector<std::size_t>>;
using RationalMatrix = std::vector<std::vector<mpq_class>>;

inline std::size_t identity_of(const Table& t) {
  for (std::size_t e = 0; e < t.size(); ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < t.size() && ok; ++g) ok = t[e][g] == g && t[g][e] == g;
    if (ok) return e;
  }
  return t.size();
}

inline std::size_t inverse_of(const Table& t, std::size_t g) {
  const std::size_t e = identity_of(t);
  for (std::size_t h = 0; h < t.size(); ++h) {
    if (t[g][h] == e) return h;
  }
  return t.size();
}

/// Number of orbits of G acting on itself by conjugation.
inline std::size_t conjugacy_classes(const Table& t) {
  std::set<std::set<std::size_t>> classes;
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::set<std::size_t> orbit;
    for (std::size_t g = 0; g < t.size(); ++g) orbit.insert(t[t[g][x]][inverse_of(t, g)]);
    classes.insert(orbit);
  }
  return classes.size();
}

/// |Hom(pi_1(closed orientable genus-g surface), G)|: tuples
/// (a_1, b_1, ..., a_g, b_g) whose product of commutators is the identity.
inline std::size_t surface_group_homs(const Table& t, unsigned genus) {
  const std::size_t n = t.size();
  const std::size_t e = identity_of(t);
  std::vector<std::size_t> tuple(2 * genus, 0);
  std::size_t count = 0;
  while (true) {
    std::size_t prod = e;
    for (unsigned i = 0; i < genus; ++i) {
      std::size_t a = tuple[2 * i];
      std::size_t b = tuple[2 * i + 1];
      std::size_t comm = t[t[t[a][b]][inverse_of(t, a)]][inverse_of(t, b)];
      prod = t[prod][comm];
    }
    if (prod == e) ++count;
    std::size_t pos = 0;
    while (pos < tuple.size() && ++tuple[pos] == n) tuple[pos++] = 0;
    if (pos == tuple.size()) break;
  }
  return count;
}

/// Rank by fraction-exact Gaussian elimination.
inline std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// dim A - rank span{xy - yx} for structure constants mult[(i*n + j)*n + k].
inline std::size_t hh0_by_commutators(const std::vector<mpq_class>& mult, std::size_t n) {
  RationalMatrix rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<mpq_class> v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = mult[(i * n + j) * n + k] - mult[(j * n + i) * n + k];
      rows.push_back(v);
    }
  }
  return n - rank(rows);
}

/// Trace of a square matrix, summed directly.
inline mpq_class trace(const RationalMatrix& m) {
  mpq_class t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

inline nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

inline Table table_from_json(const nlohmann::json& j) { return j.at("table").get<Table>(); }

inline std::vector<mpq_class> rationals_from_json(const nlohmann::json& j) {
  std::vector<mpq_class> out;
  for (const auto& e : j) out.emplace_back(e.is_string() ? mpq_class(e.get<std::string>()) : mpq_class(e.get<long>()));
  for (auto& q : out) q.canonicalize();
  return out;
}

}  // namespace oracle
