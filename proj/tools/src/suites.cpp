#include "dtqft/tools/suites.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <map>
#include <stdexcept>

#include "dtqft/diagram.hpp"
#include "dtqft/oc_tqft.hpp"
#include "dtqft/pivotal.hpp"

namespace dtqft::tools {

namespace {

// Each suite and each algebra inside it gets its own stream, so adding an
// algebra to the workspace does not reshuffle the samples of the others.
Rng stream(const SuiteOptions& opt, std::string_view suite, std::string_view tag) {
  const std::uint64_t h = std::stoull(digest(std::string(suite) + "/" + std::string(tag)), nullptr, 16);
  return Rng(opt.seed * 0x9e3779b97f4a7c15ULL ^ h);
}

BimodulePtr share(Bimodule m) { return std::make_shared<const Bimodule>(std::move(m)); }

std::string failure_text(const std::exception& e) { return e.what(); }

AlgebraPtr pick(Rng& rng, const std::vector<AlgebraPtr>& v) { return v[rng.below(v.size())]; }

// Records an exception thrown by a check as a failed entry instead of
// aborting the remaining samples.
void guarded(ValidationReport& report, const std::string& name, const std::string& inputs,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.add(name, inputs, false, failure_text(e));
  }
}

// Hom(x, y), or End(x) when there are no maps x => y.
HomSpace nonzero_hom(const OneMorWord& x, const OneMorWord& y) {
  HomSpace h = hom_space(x, y);
  return h.dim() > 0 ? h : hom_space(x, x);
}

}  // namespace

AlgebraPtr ground_of(const Registry& reg) {
  if (auto k = reg.ground()) return k;
  static const AlgebraPtr fallback_q = std::make_shared<const FrobeniusAlgebra>(trivial_algebra(Field::rationals()));
  if (reg.field() == Field::rationals()) return fallback_q;
  return std::make_shared<const FrobeniusAlgebra>(trivial_algebra(reg.field()));
}

std::vector<AlgebraPtr> algebras_of(const Registry& reg) {
  std::vector<AlgebraPtr> out;
  for (const auto& [name, a] : reg.algebras()) out.push_back(a);
  return out;
}

OneMorWord random_word(Rng& rng, const AlgebraPtr& from, const AlgebraPtr& to, const std::vector<AlgebraPtr>& phases,
                       const AlgebraPtr& k, std::size_t max_len, std::size_t max_dim, const std::string& tag) {
  std::size_t len = rng.below(max_len + 1);
  if (len == 0 && !same_algebra(*from, *to)) len = 1;
  if (len == 0) return OneMorWord::empty(from);
  // Phases along the word, from the source to the target.
  std::vector<AlgebraPtr> path{from};
  for (std::size_t i = 1; i < len; ++i) path.push_back(pick(rng, phases));
  path.push_back(to);
  std::vector<Letter> letters;
  for (std::size_t i = len; i-- > 0;) {
    const AlgebraPtr& s = path[i];
    const AlgebraPtr& t = path[i + 1];
    const std::string name = tag + "." + std::to_string(i);
    if (rng.below(2) == 0) {
      letters.push_back(Letter{share(random_bimodule(rng, t, s, k, max_dim, name)), Sign::plus});
    } else {
      letters.push_back(Letter{share(random_bimodule(rng, s, t, k, max_dim, name)), Sign::minus});
    }
  }
  return OneMorWord(std::move(letters));
}

ValidationReport zorro_suite(const Registry& reg, const SuiteOptions& opt) {
  ValidationReport report;
  auto letter_check = [&](const BimodulePtr& m) {
    guarded(report, "zorro", m->name(), [&] { report.append(zorro_report(*adjunction_maps(m))); });
  };
  for (const auto& [name, m] : reg.bimodules()) letter_check(m);
  const auto algs = algebras_of(reg);
  const AlgebraPtr k = ground_of(reg);
  for (const auto& a : algs) {
    letter_check(share(regular_bimodule(a)));
    Rng rng = stream(opt, "zorro", a->name());
    for (std::size_t i = 0; i < opt.count; ++i) {
      AlgebraPtr b = pick(rng, algs);
      letter_check(share(random_bimodule(rng, b, a, k, opt.max_dim, "z" + a->name() + "." + std::to_string(i))));
    }
    // Composite words inherit adjunctions from their letters.
    AlgebraPtr c = pick(rng, algs);
    OneMorWord w = random_word(rng, a, c, algs, k, 2, opt.max_dim, "zw" + a->name());
    guarded(report, "zorro", w.to_string(), [&] { report.append(zorro_report(*adjunction_maps(w))); });
  }
  return report;
}

ValidationReport pivotal_suite(const Registry& reg, const SuiteOptions& opt) {
  ValidationReport report;
  const auto algs = algebras_of(reg);
  const AlgebraPtr k = ground_of(reg);
  // Transposing 1_{YX} passes through words of six letters, whose composites
  // grow like the sixth power of the letter dimension; the pairs stay small.
  const std::size_t pair_dim = std::min<std::size_t>(opt.max_dim, 2);
  Rng rng = stream(opt, "pivotal", "");
  for (std::size_t i = 0; i < opt.count; ++i) {
    const std::string tag = "p" + std::to_string(i);
    AlgebraPtr a = pick(rng, algs);
    AlgebraPtr b = pick(rng, algs);
    AlgebraPtr c = pick(rng, algs);
    OneMorWord x = random_word(rng, a, b, algs, k, 1, opt.max_dim, tag + "x");
    OneMorWord x2 = random_word(rng, a, b, algs, k, 1, opt.max_dim, tag + "x'");
    OneMorWord px = random_word(rng, a, b, algs, k, 1, pair_dim, tag + "px");
    OneMorWord py = random_word(rng, b, c, algs, k, 1, pair_dim, tag + "py");
    guarded(report, "pivotal", tag, [&] {
      TwoMorphism phi = random_morphism(rng, nonzero_hom(x, x2));
      report.append(check_pivotal(phi, {{py, px}}));
    });
  }
  return report;
}

ValidationReport interchange_suite(const Registry& reg, const SuiteOptions& opt) {
  ValidationReport report;
  const auto algs = algebras_of(reg);
  const AlgebraPtr k = ground_of(reg);
  Rng rng = stream(opt, "interchange", "");
  for (std::size_t i = 0; i < opt.count; ++i) {
    const std::string tag = "d" + std::to_string(i);
    guarded(report, "interchange", tag, [&] {
      Registry local(reg.field());
      for (const auto& a : algs) local.add_algebra(a);
      AlgebraPtr a = pick(rng, algs);
      AlgebraPtr b = pick(rng, algs);
      AlgebraPtr c = pick(rng, algs);
      auto x = share(random_bimodule(rng, b, a, k, opt.max_dim, tag + "X"));
      auto y = share(random_bimodule(rng, c, b, k, opt.max_dim, tag + "Y"));
      local.add_bimodule(x);
      local.add_bimodule(y);
      OneMorWord wx({Letter{x, Sign::plus}});
      OneMorWord wy({Letter{y, Sign::plus}});
      HomSpace ex = hom_space(wx, wx);
      HomSpace ey = hom_space(wy, wy);
      TwoMorphism f1 = random_morphism(rng, ex);
      TwoMorphism f2 = random_morphism(rng, ex);
      TwoMorphism g1 = random_morphism(rng, ey);
      TwoMorphism g2 = random_morphism(rng, ey);
      local.add_morphism("f1", f1);
      local.add_morphism("f2", f2);
      local.add_morphism("g1", g1);
      local.add_morphism("g2", g2);
      const std::string inputs = tag + " " + wy.to_string() + " | " + wx.to_string();

      // (g2 o g1) (x) (f2 o f1) against (g2 (x) f2) o (g1 (x) f1).
      TwoMorphism lhs = compose_horizontal(compose_vertical(g2, g1), compose_vertical(f2, f1));
      TwoMorphism rhs = compose_vertical(compose_horizontal(g2, f2), compose_horizontal(g1, f1));
      report.add("interchange", inputs, lhs.matrix == rhs.matrix, "");

      std::string text;
      TwoMorphism direct = rhs;
      switch (rng.below(3)) {
        case 0:
          text = "box:g1 box:f1\nbox:g2 box:f2\n";
          break;
        case 1:
          text = "cupR:" + x->name() + "\nid:" + x->name() + ":- box:f1\ncapL:" + x->name() + "\n";
          direct = compose_vertical(adjunction_maps(x)->ev,
                                    compose_vertical(compose_horizontal(TwoMorphism::identity(wx.adjoint()), f1),
                                                     adjunction_maps(x)->coev_tilde));
          break;
        default:
          text = "id:" + y->name() + ":+ cupL:" + x->name() + "\nbox:g1 box:f1 id:" + x->name() + ":-\n";
          direct = compose_horizontal(g1, compose_vertical(compose_horizontal(f1, TwoMorphism::identity(wx.adjoint())),
                                                           adjunction_maps(x)->coev));
          break;
      }
      TwoMorphism evaluated = evaluate(parse_diagram(text), local);
      bool ok = evaluated.source == direct.source && evaluated.target == direct.target &&
                evaluated.matrix == direct.matrix;
      report.add("diagram_matches_composition", inputs, ok, ok ? "" : "diagram:\n" + text);
    });
  }
  return report;
}

ValidationReport cardy_suite(const Registry& reg, const SuiteOptions& opt) {
  ValidationReport report;
  const AlgebraPtr k = ground_of(reg);
  for (const auto& a : algebras_of(reg)) {
    guarded(report, "closed_sector", a->name(), [&] {
      ClosedSector c = closed_sector(a);
      report.append(check_closed_sector(c));
      std::vector<Matrix> zs;
      for (std::size_t i = 0; i < c.center.dim(); ++i) zs.push_back(c.center.basis.col(i));
      Rng rng = stream(opt, "cardy", a->name());
      for (std::size_t i = 0; i < opt.count; ++i) {
        const std::string tag = a->name() + "." + std::to_string(i);
        auto x = share(random_boundary(rng, a, k, opt.max_dim, "bX" + tag));
        auto y = share(random_boundary(rng, a, k, opt.max_dim, "bY" + tag));
        OneMorWord wx = boundary_word(x);
        OneMorWord wy = boundary_word(y);
        TwoMorphism phi = random_morphism(rng, hom_space(wx, wx));
        TwoMorphism psi = random_morphism(rng, hom_space(wy, wy));
        report.append(check_bulk_boundary(c, x, zs, {phi}));
        report.append(check_cardy(c, phi, psi));
      }
    });
  }
  return report;
}

ValidationReport serre_suite(const Registry& reg, const SuiteOptions& opt) {
  ValidationReport report;
  const AlgebraPtr k = ground_of(reg);
  for (const auto& a : algebras_of(reg)) {
    Rng rng = stream(opt, "serre", a->name());
    for (std::size_t i = 0; i < opt.count; ++i) {
      const std::string tag = a->name() + "." + std::to_string(i);
      guarded(report, "serre", tag, [&] {
        auto x = share(random_boundary(rng, a, k, opt.max_dim, "sX" + tag));
        auto y = share(random_boundary(rng, a, k, opt.max_dim, "sY" + tag));
        report.append(check_serre(x, y));
      });
    }
  }
  return report;
}

ValidationReport defect_loop_suite(const Registry& reg, const SuiteOptions& opt) {
  ValidationReport report;
  const AlgebraPtr k = ground_of(reg);
  const auto algs = algebras_of(reg);
  for (const auto& b : algs) {
    for (const auto& a : algs) {
      Rng rng = stream(opt, "assumption37", b->name() + "|" + a->name());
      for (std::size_t i = 0; i < opt.count; ++i) {
        const std::string tag = b->name() + "|" + a->name() + "." + std::to_string(i);
        guarded(report, "defect_loop", tag, [&] {
          auto d = share(random_bimodule(rng, b, a, k, opt.max_dim, "D" + tag));
          OneMorWord w({Letter{d, Sign::plus}});
          report.append(check_assumption_3_7(random_morphism(rng, hom_space(w, w))));
        });
      }
    }
  }
  return report;
}

ValidationReport statespace_suite(const Registry& reg, const SuiteOptions& opt) {
  ValidationReport report;
  const AlgebraPtr k = ground_of(reg);
  const auto algs = algebras_of(reg);
  Rng rng = stream(opt, "statespace", "");
  for (std::size_t i = 0; i < opt.count; ++i) {
    const std::string tag = "w" + std::to_string(i);
    guarded(report, "state_space_dim", tag, [&] {
      AlgebraPtr a = pick(rng, algs);
      AlgebraPtr b = pick(rng, algs);
      OneMorWord x = random_word(rng, a, b, algs, k, 2, opt.max_dim, tag + "x");
      OneMorWord y = random_word(rng, a, b, algs, k, 2, opt.max_dim, tag + "y");
      report.append(state_space_vs_hom(x, y));
    });
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"zorro",        "pivotal", "interchange", "cardy",
                                              "serre",        "assumption37", "statespace"};
  return names;
}

ValidationReport run_suite(const std::string& name, const Registry& reg, const SuiteOptions& opt) {
  using Suite = ValidationReport (*)(const Registry&, const SuiteOptions&);
  static const std::map<std::string, Suite> suites{
      {"zorro", zorro_suite}, {"pivotal", pivotal_suite},           {"interchange", interchange_suite},
      {"cardy", cardy_suite}, {"serre", serre_suite},               {"assumption37", defect_loop_suite},
      {"statespace", statespace_suite}};
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown check '" + name + "'");
  if (reg.algebras().empty()) return {};
  return it->second(reg, opt);
}

}  // namespace dtqft::tools
