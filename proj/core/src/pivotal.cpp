#include "dtqft/pivotal.hpp"

#include <map>
#include <mutex>

#include "dtqft/linalg.hpp"
#include "memo.hpp"

namespace dtqft {

namespace {

using detail::identity_key;
using detail::Memo;

Memo<AdjunctionData>& letter_memo() {
  static Memo<AdjunctionData> memo;
  return memo;
}

Memo<AdjunctionData>& word_memo() {
  static Memo<AdjunctionData> memo;
  return memo;
}

const DualData& separable_data(const FrobeniusAlgebra& a) {
  const DualData& d = a.dual_data();
  if (!d.window_inv) throw NotSeparable("algebra '" + a.name() + "': window element is not invertible");
  return d;
}

// Sum_k of the plain basis vectors at index k*d + k, pushed into the composite.
Matrix diagonal_class(const Composite& c, std::size_t d) {
  Matrix v(c.projection.field(), d * d, 1);
  for (std::size_t k = 0; k < d; ++k) v(k * d + k, 0) = Scalar::one(v.field());
  return c.projection * v;
}

// Column j is e_j . v for the basis e_j of the composite's left algebra.
Matrix orbit_matrix(const Composite& c, const Matrix& v) {
  const auto& left = c.module.left_action();
  Matrix out(v.field(), c.module.dim(), left.size());
  for (std::size_t j = 0; j < left.size(); ++j) {
    Matrix col = left[j] * v;
    for (std::size_t r = 0; r < col.rows(); ++r) out(r, j) = col(r, 0);
  }
  return out;
}

AdjunctionData make_letter_adjunction(const BimodulePtr& m) {
  const FrobeniusAlgebra& a = *m->right_algebra();
  const FrobeniusAlgebra& b = *m->left_algebra();
  const DualData& da = separable_data(a);
  const DualData& db = separable_data(b);
  const Field f = m->field();
  const std::size_t d = m->dim();

  OneMorWord x({Letter{m, Sign::plus}});
  OneMorWord dag = x.adjoint();
  OneMorWord x_dag = concat(x, dag);
  OneMorWord dag_x = concat(dag, x);
  auto c_x_dag = composite(x_dag);
  auto c_dag_x = composite(dag_x);

  TwoMorphism coev{OneMorWord::empty(m->left_algebra()), x_dag, orbit_matrix(*c_x_dag, diagonal_class(*c_x_dag, d))};
  TwoMorphism coev_tilde{OneMorWord::empty(m->right_algebra()), dag_x,
                         orbit_matrix(*c_dag_x, diagonal_class(*c_dag_x, d))};

  // ev(m^k (x) m_l) = sum_i p^i . (R_{p_i w^-1})_{kl}
  Matrix ev_plain(f, a.dim(), d * d);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix r = m->right_by(a.multiply(a.basis_vector(i), *da.window_inv));
    const Matrix& p = da.dual_basis[i];
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t l = 0; l < d; ++l) {
        const Scalar& s = r(k, l);
        if (s.is_zero()) continue;
        for (std::size_t row = 0; row < a.dim(); ++row) ev_plain(row, k * d + l) += s * p(row, 0);
      }
    }
  }
  TwoMorphism ev{dag_x, OneMorWord::empty(m->right_algebra()), ev_plain * c_dag_x->section};

  // ev_tilde(m_l (x) m^k) = sum_j q_j . (L_{w^-1 q^j})_{kl}
  Matrix evt_plain(f, b.dim(), d * d);
  for (std::size_t j = 0; j < b.dim(); ++j) {
    Matrix l = m->left_by(b.multiply(*db.window_inv, db.dual_basis[j]));
    for (std::size_t li = 0; li < d; ++li) {
      for (std::size_t k = 0; k < d; ++k) evt_plain(j, li * d + k) = l(k, li);
    }
  }
  TwoMorphism ev_tilde{x_dag, OneMorWord::empty(m->left_algebra()), evt_plain * c_x_dag->section};

  AdjunctionData adj{x, std::move(ev), std::move(coev), std::move(ev_tilde), std::move(coev_tilde)};
  ValidationReport report = zorro_report(adj);
  if (!report.all_passed()) {
    throw AdjunctionFailure("adjunction maps of '" + m->name() + "' fail their checks:\n" + report.to_text());
  }
  return adj;
}

TwoMorphism h(const TwoMorphism& a, const TwoMorphism& b) { return compose_horizontal(a, b); }
TwoMorphism v(const TwoMorphism& a, const TwoMorphism& b) { return compose_vertical(a, b); }
TwoMorphism id(const OneMorWord& w) { return TwoMorphism::identity(w); }

AdjunctionData make_word_adjunction(const OneMorWord& x) {
  if (x.is_empty()) {
    TwoMorphism i = id(x);
    return AdjunctionData{x, i, i, i, i};
  }
  if (x.size() == 1) {
    const Letter& l = x.letters().front();
    auto base = adjunction_maps(l.module);
    if (l.sign == Sign::plus) return *base;
    return AdjunctionData{x, base->ev_tilde, base->coev_tilde, base->ev, base->coev};
  }
  OneMorWord y = x.head(1);
  OneMorWord z = x.tail(1);
  OneMorWord dy = y.adjoint();
  OneMorWord dz = z.adjoint();
  auto ay = adjunction_maps(y);
  auto az = adjunction_maps(z);
  AdjunctionData adj{x,
                     v(az->ev, h(id(dz), h(ay->ev, id(z)))),
                     v(h(id(y), h(az->coev, id(dy))), ay->coev),
                     v(ay->ev_tilde, h(id(y), h(az->ev_tilde, id(dy)))),
                     v(h(id(dz), h(ay->coev_tilde, id(z))), az->coev_tilde)};
  return adj;
}

struct CenterCache {
  std::mutex mutex;
  std::map<const FrobeniusAlgebra*, std::pair<AlgebraPtr, std::shared_ptr<const Center>>> entries;
};

std::shared_ptr<const Center> cached_center(const AlgebraPtr& a) {
  static CenterCache cache;
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.entries.find(a.get());
    if (it != cache.entries.end()) return it->second.second;
  }
  auto c = std::make_shared<const Center>(center(*a));
  std::lock_guard lock(cache.mutex);
  return cache.entries.emplace(a.get(), std::make_pair(a, c)).first->second.second;
}

}  // namespace

std::shared_ptr<const AdjunctionData> adjunction_maps(const BimodulePtr& m) {
  OneMorWord x({Letter{m, Sign::plus}});
  return letter_memo().get(identity_key(x), {x}, [&] { return make_letter_adjunction(m); });
}

std::shared_ptr<const AdjunctionData> adjunction_maps(const OneMorWord& x) {
  if (x.size() == 1 && x.letters().front().sign == Sign::plus) return adjunction_maps(x.letters().front().module);
  return word_memo().get(identity_key(x), {x}, [&] { return make_word_adjunction(x); });
}

ValidationReport zorro_report(const AdjunctionData& adj) {
  ValidationReport report;
  const OneMorWord& x = adj.word;
  const OneMorWord dag = x.adjoint();
  const std::string who = x.to_string();

  for (const auto* map : {&adj.ev, &adj.coev, &adj.ev_tilde, &adj.coev_tilde}) {
    std::string w = intertwiner_witness(*map);
    report.add("intertwiner", who + ": " + map->source.to_string() + " => " + map->target.to_string(), w.empty(), w);
  }
  if (!report.all_passed()) return report;

  auto check = [&](const char* name, const TwoMorphism& lhs, const OneMorWord& on) {
    bool ok = lhs.source == on && lhs.target == on && lhs.matrix == id(on).matrix;
    report.add(name, who, ok, ok ? "" : "composite is " + lhs.matrix.to_string());
  };
  check("zorro_ev_coev", v(h(id(x), adj.ev), h(adj.coev, id(x))), x);
  check("zorro_ev_coev_dual", v(h(adj.ev, id(dag)), h(id(dag), adj.coev)), dag);
  check("zorro_tilde", v(h(adj.ev_tilde, id(x)), h(id(x), adj.coev_tilde)), x);
  check("zorro_tilde_dual", v(h(id(dag), adj.ev_tilde), h(adj.coev_tilde, id(dag))), dag);
  return report;
}

CentralElement central_value(const TwoMorphism& phi) {
  if (!phi.source.is_empty() || !phi.target.is_empty() || !same_algebra(*phi.source.source(), *phi.target.source())) {
    throw std::invalid_argument("not an endomorphism of a unit 1-morphism: " + phi.source.to_string() + " => " +
                                phi.target.to_string());
  }
  const AlgebraPtr& a = phi.source.source();
  Matrix element = phi.matrix * a->unit();
  auto c = cached_center(a);
  return CentralElement{a, element, c->coordinates(element)};
}

std::pair<CentralElement, CentralElement> quantum_dims(const OneMorWord& x) {
  auto adj = adjunction_maps(x);
  return {central_value(v(adj->ev, adj->coev_tilde)), central_value(v(adj->ev_tilde, adj->coev))};
}

std::pair<CentralElement, CentralElement> quantum_dims(const BimodulePtr& m) {
  return quantum_dims(OneMorWord({Letter{m, Sign::plus}}));
}

namespace {

const OneMorWord& endo_word(const TwoMorphism& psi) {
  if (!(psi.source == psi.target)) {
    throw std::invalid_argument("trace of a non-endomorphism " + psi.source.to_string() + " => " +
                                psi.target.to_string());
  }
  return psi.source;
}

}  // namespace

namespace {

// Both traces are linear on End(X). They are evaluated by the full loop
// composite on a basis of End(X) once per word; an arbitrary psi then only
// needs its coordinates in that basis.
struct TraceKernel {
  Matrix left;   // rows: unit-algebra coordinates; columns: row-major entries of psi
  Matrix right;
};

Memo<TraceKernel>& trace_memo() {
  static Memo<TraceKernel> memo;
  return memo;
}

TraceKernel make_trace_kernel(const OneMorWord& x) {
  auto adj = adjunction_maps(x);
  HomSpace end = hom_space(x, x);
  const std::size_t d = composite(x)->module.dim();
  const std::size_t n = x.source()->dim();
  const Field f = x.source()->field();
  Matrix vecs(f, d * d, end.dim());
  Matrix tl(f, n, end.dim());
  Matrix tr(f, x.target()->dim(), end.dim());
  for (std::size_t i = 0; i < end.dim(); ++i) {
    TwoMorphism b = end.morphism(i);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) vecs(r * d + c, i) = b.matrix(r, c);
    }
    Matrix l = v(adj->ev, v(h(id(x.adjoint()), b), adj->coev_tilde)).matrix * x.source()->unit();
    Matrix rr = v(adj->ev_tilde, v(h(b, id(x.adjoint())), adj->coev)).matrix * x.target()->unit();
    for (std::size_t k = 0; k < n; ++k) tl(k, i) = l(k, 0);
    for (std::size_t k = 0; k < x.target()->dim(); ++k) tr(k, i) = rr(k, 0);
  }
  Matrix coords(f, end.dim(), d * d);
  if (end.dim() > 0) {
    auto right_inv = solve(vecs.transpose(), Matrix::identity(f, end.dim()));
    if (!right_inv) throw std::logic_error("Hom basis is not linearly independent");
    coords = right_inv->transpose();
  }
  return TraceKernel{tl * coords, tr * coords};
}

Matrix apply_kernel(const Matrix& k, const Matrix& psi) {
  const std::size_t d = psi.rows();
  Matrix flat(psi.field(), d * d, 1);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) flat(r * d + c, 0) = psi(r, c);
  }
  return k * flat;
}

std::shared_ptr<const TraceKernel> trace_kernel(const TwoMorphism& psi) {
  const OneMorWord& x = endo_word(psi);
  require_intertwiner(psi);
  return trace_memo().get(identity_key(x), {x}, [&] { return make_trace_kernel(x); });
}

CentralElement central_element(const AlgebraPtr& a, Matrix element) {
  auto c = cached_center(a);
  Matrix coords = c->coordinates(element);
  return CentralElement{a, std::move(element), std::move(coords)};
}

}  // namespace

CentralElement left_trace(const TwoMorphism& psi) {
  return central_element(psi.source.source(), apply_kernel(trace_kernel(psi)->left, psi.matrix));
}

CentralElement right_trace(const TwoMorphism& psi) {
  return central_element(psi.source.target(), apply_kernel(trace_kernel(psi)->right, psi.matrix));
}

CentralElement left_trace_by_composite(const TwoMorphism& psi) {
  const OneMorWord& x = endo_word(psi);
  auto adj = adjunction_maps(x);
  return central_value(v(adj->ev, v(h(id(x.adjoint()), psi), adj->coev_tilde)));
}

CentralElement right_trace_by_composite(const TwoMorphism& psi) {
  const OneMorWord& x = endo_word(psi);
  auto adj = adjunction_maps(x);
  return central_value(v(adj->ev_tilde, v(h(psi, id(x.adjoint())), adj->coev)));
}

std::pair<CentralElement, CentralElement> traces(const TwoMorphism& psi) { return {left_trace(psi), right_trace(psi)}; }

TwoMorphism left_transpose(const TwoMorphism& phi) {
  const OneMorWord dx = phi.source.adjoint();
  const OneMorWord dy = phi.target.adjoint();
  auto ax = adjunction_maps(phi.source);
  auto ay = adjunction_maps(phi.target);
  return v(h(ay->ev, id(dx)), v(h(id(dy), h(phi, id(dx))), h(id(dy), ax->coev)));
}

TwoMorphism right_transpose(const TwoMorphism& phi) {
  const OneMorWord dx = phi.source.adjoint();
  const OneMorWord dy = phi.target.adjoint();
  auto ax = adjunction_maps(phi.source);
  auto ay = adjunction_maps(phi.target);
  return v(h(id(dx), ay->ev_tilde), v(h(id(dx), h(phi, id(dy))), h(ax->coev_tilde, id(dy))));
}

ValidationReport check_pivotal(const TwoMorphism& phi, const std::vector<WordPair>& pairs) {
  ValidationReport report;
  require_intertwiner(phi);
  TwoMorphism lt = left_transpose(phi);
  TwoMorphism rt = right_transpose(phi);
  bool agree = lt.matrix == rt.matrix;
  report.add("transposes_agree", phi.source.to_string() + " => " + phi.target.to_string(), agree,
             agree ? "" : "left " + lt.matrix.to_string() + " vs right " + rt.matrix.to_string());

  for (const auto& [y, x] : pairs) {
    OneMorWord yx = concat(y, x);
    const std::string who = "(" + y.to_string() + ")(" + x.to_string() + ")";
    TwoMorphism one = id(yx);
    Matrix l = left_transpose(one).matrix;
    Matrix r = right_transpose(one).matrix;
    Matrix unit = id(yx.adjoint()).matrix;
    bool ok = l == unit && r == unit;
    report.add("composite_adjoint_identity", who, ok,
               ok ? "" : "left " + l.to_string() + ", right " + r.to_string());

    auto c = composite(yx);
    auto fresh = std::make_shared<const Bimodule>(
        rebase(c->module, c->module.left_algebra(), c->module.right_algebra(), "[" + yx.to_string() + "]"));
    TwoMorphism iota{yx, OneMorWord({Letter{fresh, Sign::plus}}), Matrix::identity(phi.matrix.field(), fresh->dim())};
    Matrix kl = left_transpose(iota).matrix;
    Matrix kr = right_transpose(iota).matrix;
    bool cmp = kl == kr && kl.is_square() && rank(kl) == kl.rows();
    report.add("composite_adjoint_comparison", who, cmp,
               cmp ? "" : "left " + kl.to_string() + ", right " + kr.to_string());
  }
  return report;
}

}  // namespace dtqft
