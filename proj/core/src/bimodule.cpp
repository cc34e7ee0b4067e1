#include "dtqft/bimodule.hpp"

#include <stdexcept>
#include <utility>

#include "memo.hpp"

namespace dtqft {

bool same_algebra(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b) {
  return &a == &b || a.name() == b.name();
}

namespace {

void check_actions(const std::string& who, const FrobeniusAlgebra& alg, std::size_t dim,
                   const std::vector<Matrix>& action, const char* side) {
  if (action.size() != alg.dim()) {
    throw std::invalid_argument("bimodule '" + who + "': " + side + " action has " + std::to_string(action.size()) +
                                " matrices, algebra '" + alg.name() + "' has dimension " + std::to_string(alg.dim()));
  }
  for (std::size_t i = 0; i < action.size(); ++i) {
    const Matrix& m = action[i];
    if (m.rows() != dim || m.cols() != dim) {
      throw std::invalid_argument("bimodule '" + who + "': " + side + " action matrix " + std::to_string(i) +
                                  " is not " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (dim > 0 && m.field() != alg.field()) throw FieldMismatch("bimodule '" + who + "': action over another field");
  }
}

Matrix combine(const std::vector<Matrix>& basis_action, const Matrix& x, Field field, std::size_t dim) {
  Matrix m(field, dim, dim);
  for (std::size_t i = 0; i < basis_action.size(); ++i) {
    if (!x(i, 0).is_zero()) m += basis_action[i] * x(i, 0);
  }
  return m;
}

std::string sign_char(Sign s) { return s == Sign::plus ? "+" : "-"; }

}  // namespace

Bimodule::Bimodule(std::string name, AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                   std::vector<Matrix> left_action, std::vector<Matrix> right_action)
    : name_(std::move(name)),
      left_(std::move(left)),
      right_(std::move(right)),
      dim_(dim),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)) {
  if (!left_ || !right_) throw std::invalid_argument("bimodule '" + name_ + "': missing algebra");
  if (left_->field() != right_->field()) throw FieldMismatch("bimodule '" + name_ + "': algebras over different fields");
  check_actions(name_, *left_, dim_, left_action_, "left");
  check_actions(name_, *right_, dim_, right_action_, "right");
}

Matrix Bimodule::left_by(const Matrix& b) const { return combine(left_action_, b, field(), dim_); }
Matrix Bimodule::right_by(const Matrix& a) const { return combine(right_action_, a, field(), dim_); }

ValidationReport validate(const Bimodule& m) {
  ValidationReport report;
  const std::string who = "bimodule " + m.name();
  const FrobeniusAlgebra& b = *m.left_algebra();
  const FrobeniusAlgebra& a = *m.right_algebra();
  Matrix id = Matrix::identity(m.field(), m.dim());

  std::string witness;
  if (m.left_by(b.unit()) != id) witness = "unit of " + b.name() + " acts nontrivially";
  for (std::size_t i = 0; i < b.dim() && witness.empty(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      if (m.left_action()[i] * m.left_action()[j] != m.left_by(b.multiply(b.basis_vector(i), b.basis_vector(j)))) {
        witness = "L(" + b.basis_labels()[i] + ") L(" + b.basis_labels()[j] + ") != L(product)";
        break;
      }
    }
  }
  report.add("left_action", who, witness.empty(), witness);

  witness.clear();
  if (m.right_by(a.unit()) != id) witness = "unit of " + a.name() + " acts nontrivially";
  for (std::size_t i = 0; i < a.dim() && witness.empty(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (m.right_action()[j] * m.right_action()[i] != m.right_by(a.multiply(a.basis_vector(i), a.basis_vector(j)))) {
        witness = "R(" + a.basis_labels()[j] + ") R(" + a.basis_labels()[i] + ") != R(product)";
        break;
      }
    }
  }
  report.add("right_action", who, witness.empty(), witness);

  witness.clear();
  for (std::size_t i = 0; i < b.dim() && witness.empty(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (m.left_action()[i] * m.right_action()[j] != m.right_action()[j] * m.left_action()[i]) {
        witness = "(" + b.basis_labels()[i] + ", " + a.basis_labels()[j] + ")";
        break;
      }
    }
  }
  report.add("actions_commute", who, witness.empty(), witness);
  return report;
}

Bimodule regular_bimodule(const AlgebraPtr& a, std::string name) {
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    left.push_back(a->left_mult(i));
    right.push_back(a->right_mult(i));
  }
  if (name.empty()) name = a->name();
  return Bimodule(std::move(name), a, a, a->dim(), std::move(left), std::move(right));
}

Bimodule dual(const Bimodule& m, std::string name) {
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  for (const auto& r : m.right_action()) left.push_back(r.transpose());
  for (const auto& l : m.left_action()) right.push_back(l.transpose());
  if (name.empty()) name = m.name() + "*";
  return Bimodule(std::move(name), m.right_algebra(), m.left_algebra(), m.dim(), std::move(left), std::move(right));
}

Matrix double_dual_iso(const Bimodule& m) { return Matrix::identity(m.field(), m.dim()); }

Bimodule rebase(const Bimodule& m, AlgebraPtr left, AlgebraPtr right, std::string name) {
  if (name.empty()) name = m.name();
  return Bimodule(std::move(name), std::move(left), std::move(right), m.dim(), m.left_action(), m.right_action());
}

TensorProduct tensor_over(const Bimodule& m, const Bimodule& n, std::string name) {
  const FrobeniusAlgebra& mid = *m.right_algebra();
  if (!same_algebra(mid, *n.left_algebra())) {
    throw std::invalid_argument("tensor_over: '" + m.name() + "' is a right " + mid.name() + "-module but '" +
                                n.name() + "' is a left " + n.left_algebra()->name() + "-module");
  }
  const Field f = m.field();
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  Matrix id_m = Matrix::identity(f, dm);
  Matrix id_n = Matrix::identity(f, dn);

  std::vector<Matrix> relations;
  for (std::size_t a : mid.generators()) {
    relations.push_back(kron(m.right_action()[a], id_n) - kron(id_m, n.left_action()[a]));
  }
  QuotientSpace q = relations.empty() ? cokernel(Matrix(f, dm * dn, 0)) : cokernel(hstack(relations));

  std::vector<Matrix> left;
  std::vector<Matrix> right;
  for (const auto& l : m.left_action()) left.push_back(q.projection * kron(l, id_n) * q.section);
  for (const auto& r : n.right_action()) right.push_back(q.projection * kron(id_m, r) * q.section);
  if (name.empty()) name = m.name() + "(x)" + n.name();
  Bimodule module(std::move(name), m.left_algebra(), n.right_algebra(), q.dim(), std::move(left), std::move(right));
  return TensorProduct{std::move(module), std::move(q)};
}

std::string Letter::to_string() const { return module->name() + ":" + sign_char(sign); }

bool operator==(const Letter& a, const Letter& b) {
  return a.sign == b.sign && (a.module == b.module || a.module->name() == b.module->name());
}

OneMorWord::OneMorWord(std::vector<Letter> letters, AlgebraPtr source, AlgebraPtr target)
    : letters_(std::move(letters)), source_(std::move(source)), target_(std::move(target)) {}

OneMorWord::OneMorWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("use OneMorWord::empty for the empty word");
  for (const auto& l : letters_) {
    if (!l.module) throw std::invalid_argument("word letter without a bimodule");
  }
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
    if (!same_algebra(*letters_[i].source(), *letters_[i + 1].target())) {
      throw std::invalid_argument("word does not compose: s(" + letters_[i].to_string() + ") = " +
                                  letters_[i].source()->name() + " but t(" + letters_[i + 1].to_string() +
                                  ") = " + letters_[i + 1].target()->name());
    }
  }
  source_ = letters_.back().source();
  target_ = letters_.front().target();
}

OneMorWord OneMorWord::empty(AlgebraPtr alpha) {
  if (!alpha) throw std::invalid_argument("empty word without a phase");
  AlgebraPtr beta = alpha;
  return OneMorWord({}, std::move(alpha), std::move(beta));
}

OneMorWord OneMorWord::adjoint() const {
  if (letters_.empty()) return *this;
  std::vector<Letter> rev;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) rev.push_back(it->flipped());
  return OneMorWord(std::move(rev));
}

OneMorWord OneMorWord::head(std::size_t n) const {
  if (n > letters_.size()) throw std::out_of_range("word prefix too long");
  if (n == 0) return empty(target_);
  return OneMorWord(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)));
}

OneMorWord OneMorWord::tail(std::size_t n) const {
  if (n > letters_.size()) throw std::out_of_range("word prefix too long");
  if (n == letters_.size()) return empty(source_);
  return OneMorWord(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(n), letters_.end()));
}

std::string OneMorWord::to_string() const {
  if (letters_.empty()) return "1@" + source_->name();
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += ",";
    s += l.to_string();
  }
  return s;
}

bool operator==(const OneMorWord& a, const OneMorWord& b) {
  return a.letters_ == b.letters_ && same_algebra(*a.source_, *b.source_) && same_algebra(*a.target_, *b.target_);
}

OneMorWord concat(const OneMorWord& x, const OneMorWord& y) {
  if (!same_algebra(*x.source(), *y.target())) {
    throw std::invalid_argument("cannot juxtapose " + x.to_string() + " (source " + x.source()->name() + ") with " +
                                y.to_string() + " (target " + y.target()->name() + ")");
  }
  if (x.is_empty()) return y;
  if (y.is_empty()) return x;
  std::vector<Letter> letters = x.letters();
  letters.insert(letters.end(), y.letters().begin(), y.letters().end());
  return OneMorWord(std::move(letters));
}

namespace {

using detail::identity_key;
using detail::Memo;

Composite make_composite(const OneMorWord& word) {
  const Field f = word.source()->field();
  if (word.is_empty()) {
    Bimodule reg = regular_bimodule(word.source(), "1@" + word.source()->name());
    const std::size_t n = reg.dim();
    return Composite{std::move(reg), Matrix::identity(f, n), Matrix::identity(f, n), {}};
  }
  if (word.size() == 1) {
    const Letter& l = word.letters().front();
    Bimodule m = l.sign == Sign::plus ? *l.module : dual(*l.module);
    const std::size_t n = m.dim();
    return Composite{std::move(m), Matrix::identity(f, n), Matrix::identity(f, n), {n}};
  }
  auto prev = composite(word.head(word.size() - 1));
  auto last = composite(word.tail(word.size() - 1));
  TensorProduct t = tensor_over(prev->module, last->module, word.to_string());
  Matrix id_last = Matrix::identity(f, last->module.dim());
  Composite c{std::move(t.module), t.quotient.projection * kron(prev->projection, id_last),
              kron(prev->section, id_last) * t.quotient.section, prev->letter_dims};
  c.letter_dims.push_back(last->module.dim());
  return c;
}

Memo<Composite>& composite_memo() {
  static Memo<Composite> memo;
  return memo;
}

struct Splice {
  Matrix iota;   // comp(x) (x)_k comp(y) -> comp(xy)
  Matrix sigma;  // a right inverse of iota
};

Memo<Splice>& splice_memo() {
  static Memo<Splice> memo;
  return memo;
}

Splice make_splice(const OneMorWord& x, const OneMorWord& y) {
  auto cx = composite(x);
  auto cy = composite(y);
  const std::size_t dx = cx->module.dim();
  const std::size_t dy = cy->module.dim();
  const Field f = x.source()->field();
  Matrix iota;
  if (!x.is_empty() && !y.is_empty()) {
    auto cxy = composite(concat(x, y));
    iota = cxy->projection * kron(cx->section, cy->section);
  } else if (x.is_empty() && y.is_empty()) {
    const FrobeniusAlgebra& a = *x.source();
    iota = Matrix(f, dx, dx * dy);
    for (std::size_t i = 0; i < dx; ++i) {
      for (std::size_t j = 0; j < dy; ++j) {
        for (std::size_t k = 0; k < dx; ++k) iota(k, i * dy + j) = a.structure_constant(i, j, k);
      }
    }
  } else if (x.is_empty()) {
    // b (x) m -> b . m
    iota = Matrix(f, dy, dx * dy);
    for (std::size_t i = 0; i < dx; ++i) {
      const Matrix& l = cy->module.left_action()[i];
      for (std::size_t j = 0; j < dy; ++j) {
        for (std::size_t k = 0; k < dy; ++k) iota(k, i * dy + j) = l(k, j);
      }
    }
  } else {
    // m (x) a -> m . a
    iota = Matrix(f, dx, dx * dy);
    for (std::size_t j = 0; j < dy; ++j) {
      const Matrix& r = cx->module.right_action()[j];
      for (std::size_t i = 0; i < dx; ++i) {
        for (std::size_t k = 0; k < dx; ++k) iota(k, i * dy + j) = r(k, i);
      }
    }
  }
  auto sigma = solve(iota, Matrix::identity(f, iota.rows()));
  if (!sigma) throw std::logic_error("composite splice is not surjective for " + x.to_string() + " | " + y.to_string());
  return Splice{std::move(iota), std::move(*sigma)};
}

std::shared_ptr<const Splice> splice(const OneMorWord& x, const OneMorWord& y) {
  return splice_memo().get(identity_key(x) + "#" + identity_key(y), {x, y}, [&] { return make_splice(x, y); });
}

bool same_endpoints(const OneMorWord& x, const OneMorWord& y) {
  return same_algebra(*x.source(), *y.source()) && same_algebra(*x.target(), *y.target());
}

}  // namespace

std::shared_ptr<const Composite> composite(const OneMorWord& word) {
  return composite_memo().get(identity_key(word), {word}, [&] { return make_composite(word); });
}

TwoMorphism TwoMorphism::identity(const OneMorWord& word) {
  auto c = composite(word);
  return TwoMorphism{word, word, Matrix::identity(word.source()->field(), c->module.dim())};
}

std::string intertwiner_witness(const TwoMorphism& phi) {
  if (!same_endpoints(phi.source, phi.target)) {
    return "endpoints differ: " + phi.source.to_string() + " vs " + phi.target.to_string();
  }
  auto cx = composite(phi.source);
  auto cy = composite(phi.target);
  const Bimodule& x = cx->module;
  const Bimodule& y = cy->module;
  if (phi.matrix.rows() != y.dim() || phi.matrix.cols() != x.dim()) {
    return "matrix is " + std::to_string(phi.matrix.rows()) + "x" + std::to_string(phi.matrix.cols()) + ", expected " +
           std::to_string(y.dim()) + "x" + std::to_string(x.dim());
  }
  const FrobeniusAlgebra& b = *x.left_algebra();
  for (std::size_t i : b.generators()) {
    if (y.left_action()[i] * phi.matrix != phi.matrix * x.left_action()[i]) {
      return "fails to commute with the left action of " + b.basis_labels()[i];
    }
  }
  const FrobeniusAlgebra& a = *x.right_algebra();
  for (std::size_t i : a.generators()) {
    if (y.right_action()[i] * phi.matrix != phi.matrix * x.right_action()[i]) {
      return "fails to commute with the right action of " + a.basis_labels()[i];
    }
  }
  return {};
}

void require_intertwiner(const TwoMorphism& phi) {
  std::string w = intertwiner_witness(phi);
  if (!w.empty()) {
    throw std::invalid_argument("not a 2-morphism " + phi.source.to_string() + " => " + phi.target.to_string() + ": " + w);
  }
}

Matrix HomSpace::coordinates(const Matrix& phi) const {
  if (basis.empty()) {
    if (!phi.is_zero()) throw std::invalid_argument("map is not in the Hom space");
    return Matrix(phi.field(), 0, 1);
  }
  const std::size_t n = phi.rows() * phi.cols();
  Matrix stacked(phi.field(), n, basis.size());
  Matrix target(phi.field(), n, 1);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) stacked(i, k) = basis[k].data()[i];
  }
  for (std::size_t i = 0; i < n; ++i) target(i, 0) = phi.data()[i];
  auto c = solve(stacked, target);
  if (!c) throw std::invalid_argument("map is not in the Hom space");
  return *c;
}

HomSpace hom_space(const OneMorWord& x, const OneMorWord& y) {
  if (!same_endpoints(x, y)) {
    throw std::invalid_argument("hom_space: " + x.to_string() + " and " + y.to_string() + " have different endpoints");
  }
  auto cx = composite(x);
  auto cy = composite(y);
  const Bimodule& mx = cx->module;
  const Bimodule& my = cy->module;
  const Field f = x.source()->field();
  const std::size_t dx = mx.dim();
  const std::size_t dy = my.dim();
  const std::size_t n = dx * dy;
  Matrix id_x = Matrix::identity(f, dx);
  Matrix id_y = Matrix::identity(f, dy);

  // Intersect the constraint kernels one generator at a time, so the
  // working matrices shrink as soon as the space is cut down.
  Matrix kernel = Matrix::identity(f, n);
  auto cut = [&](const Matrix& ly, const Matrix& lx) {
    if (kernel.cols() == 0) return;
    Matrix constraint = kron(ly, id_x) - kron(id_y, lx.transpose());
    kernel = kernel * kernel_basis(constraint * kernel);
  };
  for (std::size_t i : mx.left_algebra()->generators()) cut(my.left_action()[i], mx.left_action()[i]);
  for (std::size_t i : mx.right_algebra()->generators()) cut(my.right_action()[i], mx.right_action()[i]);

  HomSpace h{x, y, {}};
  Matrix basis = kernel.cols() == 0 ? kernel : column_space_basis(kernel);
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    Matrix m(f, dy, dx);
    for (std::size_t r = 0; r < dy; ++r) {
      for (std::size_t c = 0; c < dx; ++c) m(r, c) = basis(r * dx + c, k);
    }
    h.basis.push_back(std::move(m));
  }
  return h;
}

TwoMorphism compose_vertical(const TwoMorphism& psi, const TwoMorphism& phi) {
  if (!(phi.target == psi.source)) {
    throw std::invalid_argument("compose_vertical: target " + phi.target.to_string() + " != source " +
                                psi.source.to_string());
  }
  return TwoMorphism{phi.source, psi.target, psi.matrix * phi.matrix};
}

TwoMorphism compose_horizontal(const TwoMorphism& psi_tilde, const TwoMorphism& phi) {
  OneMorWord source = concat(psi_tilde.source, phi.source);
  OneMorWord target = concat(psi_tilde.target, phi.target);
  auto in = splice(psi_tilde.source, phi.source);
  auto out = splice(psi_tilde.target, phi.target);
  Matrix k = kron(psi_tilde.matrix, phi.matrix);
  Matrix image = out->iota * k;
  Matrix h = image * in->sigma;
  if (h * in->iota != image) {
    throw std::invalid_argument("compose_horizontal: inputs are not bimodule maps (" + psi_tilde.source.to_string() +
                                " | " + phi.source.to_string() + ")");
  }
  return TwoMorphism{std::move(source), std::move(target), std::move(h)};
}

void DefectCircle::check() const {
  if (letters.empty()) {
    if (!phase) throw std::invalid_argument("empty defect circle needs a phase");
    return;
  }
  OneMorWord w(letters);
  if (!same_algebra(*w.source(), *w.target())) {
    throw std::invalid_argument("defect circle does not close: s(" + letters.back().to_string() + ") = " +
                                w.source()->name() + " but t(" + letters.front().to_string() + ") = " +
                                w.target()->name());
  }
  if (phase && !same_algebra(*phase, *w.target())) {
    throw std::invalid_argument("defect circle phase " + phase->name() + " does not match " + w.target()->name());
  }
}

std::string DefectCircle::to_string() const {
  if (letters.empty()) return "1@" + phase->name();
  return OneMorWord(letters).to_string();
}

QuotientSpace cyclic_coinvariants(const DefectCircle& c) {
  c.check();
  OneMorWord w = c.letters.empty() ? OneMorWord::empty(c.phase) : OneMorWord(c.letters);
  auto comp = composite(w);
  const Bimodule& t = comp->module;
  std::vector<Matrix> blocks;
  for (std::size_t i : t.left_algebra()->generators()) blocks.push_back(t.left_action()[i] - t.right_action()[i]);
  if (blocks.empty()) return cokernel(Matrix(t.field(), t.dim(), 0));
  return cokernel(hstack(blocks));
}

DefectCircle hom_circle(const OneMorWord& x, const OneMorWord& y) {
  if (!same_endpoints(x, y)) throw std::invalid_argument("hom_circle: words have different endpoints");
  std::vector<Letter> letters = y.letters();
  OneMorWord adj = x.adjoint();
  letters.insert(letters.end(), adj.letters().begin(), adj.letters().end());
  return DefectCircle{std::move(letters), y.target()};
}

}  // namespace dtqft
