#include "dtqft/frobenius.hpp"

#include <array>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "dtqft/linalg.hpp"

namespace dtqft {

struct FrobeniusAlgebra::Cache {
  std::once_flag once;
  std::optional<DualData> dual;
  std::once_flag generators_once;
  std::vector<std::size_t> generators;
};

namespace {

Field common_field(const std::vector<Scalar>& mult, const std::vector<Scalar>& unit, const std::vector<Scalar>& form) {
  if (unit.empty()) throw std::invalid_argument("algebra must have positive dimension");
  Field f = unit.front().field();
  auto check = [&](const std::vector<Scalar>& v) {
    for (const auto& s : v) {
      if (s.field() != f) throw FieldMismatch("algebra data mixes fields");
    }
  };
  check(mult);
  check(unit);
  check(form);
  return f;
}

}  // namespace

FrobeniusAlgebra::FrobeniusAlgebra(std::string name, std::vector<std::string> basis_labels, std::vector<Scalar> mult,
                                   std::vector<Scalar> unit, std::vector<Scalar> form)
    : name_(std::move(name)),
      dim_(unit.size()),
      field_(common_field(mult, unit, form)),
      labels_(std::move(basis_labels)),
      mult_(std::move(mult)),
      unit_(Matrix::column(unit)),
      form_(std::move(form)),
      cache_(std::make_shared<Cache>()) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (labels_.size() != dim_ || form_.size() != dim_ || mult_.size() != dim_ * dim_ * dim_) {
    throw std::invalid_argument("algebra '" + name_ + "': inconsistent sizes (dim " + std::to_string(dim_) +
                                ", labels " + std::to_string(labels_.size()) + ", form " +
                                std::to_string(form_.size()) + ", mult " + std::to_string(mult_.size()) + ")");
  }
  left_.reserve(dim_);
  right_.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Matrix l(field_, dim_, dim_);
    Matrix r(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        l(k, j) = structure_constant(i, j, k);
        r(k, j) = structure_constant(j, i, k);
      }
    }
    left_.push_back(std::move(l));
    right_.push_back(std::move(r));
  }
}

Matrix FrobeniusAlgebra::left_mult_by(const Matrix& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x(i, 0).is_zero()) m += left_[i] * x(i, 0);
  }
  return m;
}

Matrix FrobeniusAlgebra::right_mult_by(const Matrix& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x(i, 0).is_zero()) m += right_[i] * x(i, 0);
  }
  return m;
}

Matrix FrobeniusAlgebra::multiply(const Matrix& x, const Matrix& y) const { return left_mult_by(x) * y; }

Scalar FrobeniusAlgebra::form(const Matrix& x) const {
  Scalar s = Scalar::zero(field_);
  for (std::size_t i = 0; i < dim_; ++i) s += form_[i] * x(i, 0);
  return s;
}

Matrix FrobeniusAlgebra::gram() const {
  Matrix g(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      Scalar s = Scalar::zero(field_);
      for (std::size_t k = 0; k < dim_; ++k) s += structure_constant(i, j, k) * form_[k];
      g(i, j) = s;
    }
  }
  return g;
}

DualData dual_data(const FrobeniusAlgebra& a) {
  DualData d;
  d.gram = a.gram();
  auto inv = inverse(d.gram);
  if (!inv) throw NotSeparable("algebra '" + a.name() + "': Gram matrix of the form is singular");
  d.gram_inv = std::move(*inv);
  d.window = Matrix(a.field(), a.dim(), 1);
  for (std::size_t j = 0; j < a.dim(); ++j) {
    d.dual_basis.push_back(d.gram_inv.col(j));
    d.window += a.multiply(a.basis_vector(j), d.dual_basis.back());
  }
  // w central, so w^-1 is the solution of L_w x = 1.
  if (auto x = solve(a.left_mult_by(d.window), a.unit()); x && a.multiply(*x, d.window) == a.unit()) {
    d.window_inv = std::move(*x);
  }
  return d;
}

const DualData& FrobeniusAlgebra::dual_data() const {
  std::call_once(cache_->once, [this] {
    try {
      cache_->dual = ::dtqft::dual_data(*this);
    } catch (const NotSeparable&) {
      cache_->dual.reset();
    }
  });
  if (!cache_->dual) throw NotSeparable("algebra '" + name_ + "': Gram matrix of the form is singular");
  return *cache_->dual;
}

bool FrobeniusAlgebra::is_separable() const {
  try {
    return dual_data().window_inv.has_value();
  } catch (const NotSeparable&) {
    return false;
  }
}

namespace {

// Dimension of the unital subalgebra generated by the given basis elements.
std::size_t generated_dimension(const FrobeniusAlgebra& a, const std::vector<std::size_t>& gens) {
  std::vector<Matrix> span{a.unit()};
  for (std::size_t next = 0; next < span.size(); ++next) {
    for (std::size_t g : gens) {
      Matrix candidate = a.right_mult(g) * span[next];
      std::vector<Matrix> trial = span;
      trial.push_back(candidate);
      if (rank(hstack(trial)) > span.size()) span.push_back(std::move(candidate));
    }
  }
  return span.size();
}

}  // namespace

const std::vector<std::size_t>& FrobeniusAlgebra::generators() const {
  std::call_once(cache_->generators_once, [this] {
    std::vector<std::size_t> gens;
    std::size_t reached = generated_dimension(*this, gens);
    for (std::size_t i = 0; i < dim_ && reached < dim_; ++i) {
      gens.push_back(i);
      std::size_t now = generated_dimension(*this, gens);
      if (now == reached) {
        gens.pop_back();
      } else {
        reached = now;
      }
    }
    cache_->generators = std::move(gens);
  });
  return cache_->generators;
}

ValidationReport validate(const FrobeniusAlgebra& a) {
  ValidationReport report;
  const std::size_t n = a.dim();
  const std::string who = "algebra " + a.name();

  std::string witness;
  for (std::size_t i = 0; i < n && witness.empty(); ++i) {
    for (std::size_t j = 0; j < n && witness.empty(); ++j) {
      Matrix ij = a.multiply(a.basis_vector(i), a.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (a.multiply(ij, a.basis_vector(k)) != a.multiply(a.basis_vector(i), a.left_mult(j).col(k))) {
          witness = "(" + a.basis_labels()[i] + ", " + a.basis_labels()[j] + ", " + a.basis_labels()[k] + ")";
          break;
        }
      }
    }
  }
  report.add("associativity", who, witness.empty(), witness);

  witness.clear();
  Matrix l1 = a.left_mult_by(a.unit());
  Matrix r1 = a.right_mult_by(a.unit());
  for (std::size_t i = 0; i < n && witness.empty(); ++i) {
    if (l1.col(i) != a.basis_vector(i) || r1.col(i) != a.basis_vector(i)) witness = "(1, " + a.basis_labels()[i] + ")";
  }
  report.add("unit", who, witness.empty(), witness);

  witness.clear();
  Matrix g = a.gram();
  for (std::size_t i = 0; i < n && witness.empty(); ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g(i, j) != g(j, i)) {
        witness = "(" + a.basis_labels()[i] + ", " + a.basis_labels()[j] + "): " + g(i, j).to_string() +
                  " != " + g(j, i).to_string();
        break;
      }
    }
  }
  report.add("symmetry", who, witness.empty(), witness);

  std::size_t r = rank(g);
  report.add("nondegeneracy", who, r == n, r == n ? "" : "Gram rank " + std::to_string(r) + " < " + std::to_string(n));
  if (r != n) {
    report.add("window_invertible", who, false, "no dual basis");
    report.add("window_central", who, false, "no dual basis");
    return report;
  }

  DualData d = dual_data(a);
  report.add("window_invertible", who, d.window_inv.has_value(),
             d.window_inv ? "" : "w = " + d.window.transpose().to_string());
  witness.clear();
  for (std::size_t i = 0; i < n && witness.empty(); ++i) {
    if (a.multiply(d.window, a.basis_vector(i)) != a.multiply(a.basis_vector(i), d.window)) {
      witness = "w does not commute with " + a.basis_labels()[i];
    }
  }
  report.add("window_central", who, witness.empty(), witness);
  return report;
}

Matrix Center::coordinates(const Matrix& x) const {
  auto c = solve(basis, x);
  if (!c) throw std::invalid_argument("element is not central");
  return *c;
}

Center center(const FrobeniusAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back(a.right_mult(i) - a.left_mult(i));
  Center c;
  c.basis = kernel_basis(vstack(blocks));
  // Column echelon form so that coordinates are easy to read off.
  c.basis = column_space_basis(c.basis);
  c.product.resize(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (std::size_t j = 0; j < c.dim(); ++j) {
      c.product[i].push_back(c.coordinates(a.multiply(c.basis.col(i), c.basis.col(j))));
    }
  }
  c.unit = c.coordinates(a.unit());
  return c;
}

void GroupTable::check() const {
  const std::size_t n = order();
  if (n == 0) throw std::invalid_argument("group '" + name + "' is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("group '" + name + "': table is not square");
    for (auto v : row) {
      if (v >= n) throw std::invalid_argument("group '" + name + "': entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw std::invalid_argument("group '" + name + "': not associative at (" + std::to_string(a) + ", " +
                                      std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  for (std::size_t g = 0; g < n; ++g) (void)inverse(g);
}

std::size_t GroupTable::identity() const {
  for (std::size_t e = 0; e < order(); ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < order() && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) return e;
  }
  throw std::invalid_argument("group '" + name + "' has no identity");
}

std::size_t GroupTable::inverse(std::size_t g) const {
  std::size_t e = identity();
  for (std::size_t h = 0; h < order(); ++h) {
    if (table[g][h] == e && table[h][g] == e) return h;
  }
  throw std::invalid_argument("group '" + name + "': element " + std::to_string(g) + " has no inverse");
}

GroupTable cyclic_group(std::size_t n) {
  GroupTable g{"Z" + std::to_string(n), {}};
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  }
  return g;
}

GroupTable symmetric_group_3() {
  using Perm = std::array<std::size_t, 3>;
  const std::vector<Perm> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  GroupTable g{"S3", {}};
  g.table.assign(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      Perm ab{};
      for (std::size_t x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];
      for (std::size_t c = 0; c < 6; ++c) {
        if (perms[c] == ab) g.table[a][b] = c;
      }
    }
  }
  return g;
}

FrobeniusAlgebra group_algebra(const GroupTable& group, Field field, std::optional<Scalar> scale) {
  group.check();
  const std::size_t n = group.order();
  Scalar s = scale ? *scale : Scalar::from_int(field, static_cast<long>(n));
  std::vector<Scalar> mult(n * n * n, Scalar::zero(field));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mult[(i * n + j) * n + group.table[i][j]] = Scalar::one(field);
  }
  std::size_t e = group.identity();
  std::vector<Scalar> unit(n, Scalar::zero(field));
  unit[e] = Scalar::one(field);
  std::vector<Scalar> form(n, Scalar::zero(field));
  form[e] = s;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == e ? "e" : "g" + std::to_string(i));
  std::string name = group.name.empty() ? "kG" : "q" + group.name;
  return FrobeniusAlgebra(name, std::move(labels), std::move(mult), std::move(unit), std::move(form));
}

FrobeniusAlgebra matrix_algebra(std::size_t n, Field field, std::optional<Scalar> scale, std::string name) {
  if (n == 0) throw std::invalid_argument("matrix algebra of size 0");
  Scalar s = scale ? *scale : Scalar::from_int(field, static_cast<long>(n));
  if (s.is_zero()) throw std::invalid_argument("matrix algebra form scale must be nonzero");
  const std::size_t d = n * n;
  std::vector<Scalar> mult(d * d * d, Scalar::zero(field));
  // E_ij E_kl = delta_jk E_il
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) mult[((i * n + j) * d + (j * n + l)) * d + (i * n + l)] = Scalar::one(field);
    }
  }
  std::vector<Scalar> unit(d, Scalar::zero(field));
  std::vector<Scalar> form(d, Scalar::zero(field));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      if (i == j) {
        unit[i * n + j] = Scalar::one(field);
        form[i * n + j] = s;
      }
    }
  }
  if (name.empty()) name = "M" + std::to_string(n);
  return FrobeniusAlgebra(std::move(name), std::move(labels), std::move(mult), std::move(unit), std::move(form));
}

FrobeniusAlgebra trivial_algebra(Field field, std::string name) {
  return FrobeniusAlgebra(std::move(name), {"1"}, {Scalar::one(field)}, {Scalar::one(field)}, {Scalar::one(field)});
}

FrobeniusAlgebra tensor_algebra(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b, std::string name) {
  if (a.field() != b.field()) throw FieldMismatch("tensor of algebras over different fields");
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na * nb;
  Field f = a.field();
  std::vector<Scalar> mult(n * n * n, Scalar::zero(f));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t k = 0; k < na; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          for (std::size_t p = 0; p < na; ++p) {
            const Scalar& ca = a.structure_constant(i, k, p);
            if (ca.is_zero()) continue;
            for (std::size_t q = 0; q < nb; ++q) {
              const Scalar& cb = b.structure_constant(j, l, q);
              if (!cb.is_zero()) mult[((i * nb + j) * n + (k * nb + l)) * n + (p * nb + q)] = ca * cb;
            }
          }
        }
      }
    }
  }
  std::vector<Scalar> unit(n, Scalar::zero(f));
  std::vector<Scalar> form(n, Scalar::zero(f));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      unit[i * nb + j] = a.unit()(i, 0) * b.unit()(j, 0);
      form[i * nb + j] = a.form_values()[i] * b.form_values()[j];
      labels.push_back(a.basis_labels()[i] + "*" + b.basis_labels()[j]);
    }
  }
  if (name.empty()) name = a.name() + "(x)" + b.name();
  return FrobeniusAlgebra(std::move(name), std::move(labels), std::move(mult), std::move(unit), std::move(form));
}

FrobeniusAlgebra opposite(const FrobeniusAlgebra& a, std::string name) {
  const std::size_t n = a.dim();
  std::vector<Scalar> mult(n * n * n, Scalar::zero(a.field()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) mult[(i * n + j) * n + k] = a.structure_constant(j, i, k);
    }
  }
  std::vector<Scalar> unit(a.unit().data().begin(), a.unit().data().end());
  if (name.empty()) name = a.name() + "^op";
  return FrobeniusAlgebra(std::move(name), a.basis_labels(), std::move(mult), std::move(unit), a.form_values());
}

FrobeniusAlgebra rescaled(const FrobeniusAlgebra& a, const Scalar& lambda, std::string name) {
  if (lambda.is_zero()) throw std::invalid_argument("form rescaling by zero");
  std::vector<Scalar> form = a.form_values();
  for (auto& f : form) f *= lambda;
  std::vector<Scalar> unit(a.unit().data().begin(), a.unit().data().end());
  if (name.empty()) name = a.name() + "*" + lambda.to_string();
  return FrobeniusAlgebra(std::move(name), a.basis_labels(), a.structure_constants(), std::move(unit), std::move(form));
}

}  // namespace dtqft
