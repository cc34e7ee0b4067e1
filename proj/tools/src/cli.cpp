#include "dtqft/tools/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dtqft/diagram.hpp"
#include "dtqft/oc_tqft.hpp"
#include "dtqft/pivotal.hpp"
#include "dtqft/registry.hpp"
#include "dtqft/tools/suites.hpp"

#ifndef DTQFT_DEFAULT_WORKSPACE
#define DTQFT_DEFAULT_WORKSPACE "workspace/workspace.json"
#endif

namespace dtqft::tools {

namespace {

using nlohmann::json;

std::string vector_text(const Matrix& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.rows(); ++i) s += (i ? ", " : "") + v(i, 0).to_string();
  return s + "]";
}

// A central element prints as a scalar when it is a multiple of the unit.
std::string central_text(const AlgebraPtr& a, const Matrix& element) {
  Matrix unit = a->unit();
  std::size_t pivot = 0;
  while (pivot < unit.rows() && unit(pivot, 0).is_zero()) ++pivot;
  Scalar s = element(pivot, 0) / unit(pivot, 0);
  if (element == unit * s) return s.to_string();
  return vector_text(element);
}

std::string matrix_text(const Matrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += "  ";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + m(r, c).to_string();
    s += "\n";
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t default_count(const std::string& suite) {
  return suite == "serre" || suite == "assumption37" ? 10 : 20;
}

struct Options {
  std::string workspace;
  std::string field;
  std::string json_path;
  std::uint64_t seed = 1;
  std::size_t count = 0;  // 0 selects the per-suite default
  std::string name;
  std::string second;
  unsigned genus = 0;
  bool all = false;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out), reg_(load()) {}

  int validate() {
    ValidationReport report;
    for (const auto& [name, a] : reg_.algebras()) report.append(dtqft::validate(*a));
    for (const auto& [name, m] : reg_.bimodules()) report.append(dtqft::validate(*m));
    for (const auto& [name, phi] : reg_.morphisms()) {
      std::string w = intertwiner_witness(phi);
      report.add("intertwiner", name, w.empty(), w);
    }
    for (const auto& path : reg_.diagrams()) {
      try {
        typecheck(parse_diagram(read_file(path.string())), reg_);
        report.add("diagram_typechecks", path.filename().string(), true);
      } catch (const std::exception& e) {
        report.add("diagram_typechecks", path.filename().string(), false, e.what());
      }
    }
    return emit_report("validate", report);
  }

  int center() {
    AlgebraPtr a = reg_.algebra(opt_.name);
    Center c = dtqft::center(*a);
    out_ << "dim " << c.dim() << "\n";
    json basis = json::array();
    for (std::size_t i = 0; i < c.dim(); ++i) {
      out_ << "z" << i << " = " << vector_text(c.basis.col(i)) << "\n";
      basis.push_back(vector_text(c.basis.col(i)));
    }
    result_ = {{"algebra", a->name()}, {"dim", c.dim()}, {"basis", basis}};
    return exit_ok;
  }

  int hh0() {
    DefectCircle circle = parse_circle(reg_, opt_.name);
    std::size_t d = cyclic_coinvariants(circle).dim();
    out_ << "dim " << d << "\n";
    result_ = {{"circle", circle.to_string()}, {"dim", d}};
    return exit_ok;
  }

  int qdim() {
    BimodulePtr m = reg_.bimodule(opt_.name);
    auto [l, r] = quantum_dims(m);
    std::string ls = central_text(l.algebra, l.element);
    std::string rs = central_text(r.algebra, r.element);
    out_ << ls << ", " << rs << "\n";
    result_ = {{"bimodule", m->name()}, {"dim_l", ls}, {"dim_r", rs}};
    return exit_ok;
  }

  int eval() {
    Diagram d = parse_diagram(read_file(opt_.name));
    TwoMorphism phi = evaluate(d, reg_);
    out_ << phi.source.to_string() << " => " << phi.target.to_string() << "\n" << matrix_text(phi.matrix);
    result_ = {{"source", phi.source.to_string()}, {"target", phi.target.to_string()},
               {"matrix", matrix_to_json(phi.matrix)}};
    if (phi.source.is_empty() && phi.target.is_empty()) {
      CentralElement z = central_value(phi);
      out_ << "value " << central_text(z.algebra, z.element) << "\n";
      result_["value"] = central_text(z.algebra, z.element);
    }
    return exit_ok;
  }

  int hom() {
    HomSpace h = hom_space(parse_word(reg_, opt_.name), parse_word(reg_, opt_.second));
    out_ << "dim " << h.dim() << "\n";
    json basis = json::array();
    for (std::size_t i = 0; i < h.dim(); ++i) {
      out_ << "b" << i << ":\n" << matrix_text(h.basis[i]);
      basis.push_back(matrix_to_json(h.basis[i]));
    }
    result_ = {{"source", h.source.to_string()}, {"target", h.target.to_string()}, {"dim", h.dim()}, {"basis", basis}};
    return exit_ok;
  }

  int fuse() {
    OneMorWord w = parse_word(reg_, opt_.name);
    auto c = composite(w);
    out_ << w.to_string() << ": " << w.target()->name() << " <- " << w.source()->name() << ", dim "
         << c->module.dim() << "\n";
    result_ = {{"word", w.to_string()}, {"dim", c->module.dim()}, {"letter_dims", c->letter_dims}};
    return exit_ok;
  }

  int closed() {
    ClosedSector c = closed_sector(reg_.algebra(opt_.name));
    Scalar z = surface_invariant(c, opt_.genus);
    out_ << z.to_string() << "\n";
    result_ = {{"algebra", opt_.name}, {"genus", opt_.genus}, {"value", z.to_string()}};
    return exit_ok;
  }

  int check() { return emit_report("check " + opt_.name, run_named(opt_.name)); }

  int report() {
    ValidationReport all;
    std::ostringstream sink;
    {
      Session quiet(opt_, sink, reg_);
      quiet.validate();
      all.append(quiet.last_report_);
    }
    for (const auto& name : suite_names()) all.append(run_named(name));
    return emit_report("report", all);
  }

  void write_json(const std::string& command, int status) const {
    if (opt_.json_path.empty()) return;
    json j = result_;
    j["command"] = command;
    j["status"] = status;
    j["field"] = reg_.field().to_string();
    std::ofstream f(opt_.json_path);
    if (!f) throw std::runtime_error(opt_.json_path + ": cannot write");
    f << j.dump(2) << "\n";
  }

 private:
  Session(const Options& opt, std::ostream& out, const Registry& reg) : opt_(opt), out_(out), reg_(reg) {}

  Registry load() const {
    Field field = Field::parse(opt_.field);
    if (opt_.workspace.empty()) return Registry(field);
    return load_workspace(opt_.workspace, field);
  }

  ValidationReport run_named(const std::string& name) const {
    SuiteOptions so;
    so.seed = opt_.seed;
    so.count = opt_.count ? opt_.count : default_count(name);
    return run_suite(name, reg_, so);
  }

  int emit_report(const std::string& what, const ValidationReport& report) {
    out_ << report.to_text();
    std::size_t passed = 0;
    for (const auto& e : report.entries()) passed += e.passed ? 1 : 0;
    out_ << what << ": " << passed << "/" << report.size() << " checks passed\n";
    result_ = report.to_json();
    last_report_ = report;
    return report.all_passed() ? exit_ok : exit_failed;
  }

  const Options& opt_;
  std::ostream& out_;
  Registry reg_;
  json result_ = json::object();
  ValidationReport last_report_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& env_field) {
  Options opt;
  opt.field = env_field.value_or("q");
  opt.workspace = DTQFT_DEFAULT_WORKSPACE;

  CLI::App app{"Exact computations for 2d defect TQFTs built from separable Frobenius algebras", "dtqft"};
  app.add_option("-w,--workspace", opt.workspace, "Workspace manifest (JSON); empty for an empty registry");
  app.add_option("--field", opt.field, "Scalar field: q or fp:<p>");
  app.add_option("--json", opt.json_path, "Also write the result as JSON to this path");
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Validate every workspace entry");
  auto* center = app.add_subcommand("center", "Basis of the center of an algebra");
  center->add_option("algebra", opt.name)->required();
  auto* hh0 = app.add_subcommand("hh0", "Dimension of a defect-circle state space");
  hh0->add_option("circle", opt.name, "Cyclic word such as M:+,N:- or 1@A")->required();
  auto* qdim = app.add_subcommand("qdim", "Left and right quantum dimensions of a bimodule");
  qdim->add_option("bimodule", opt.name)->required();
  auto* eval = app.add_subcommand("eval", "Evaluate a diagram file");
  eval->add_option("diagram", opt.name)->required();
  auto* hom = app.add_subcommand("hom", "Basis of the bimodule maps between two words");
  hom->add_option("source", opt.name)->required();
  hom->add_option("target", opt.second)->required();
  auto* fuse = app.add_subcommand("fuse", "Dimension of the composite of a word");
  fuse->add_option("word", opt.name)->required();
  auto* closed = app.add_subcommand("closed", "Closed surface invariant of an algebra");
  closed->add_option("algebra", opt.name)->required();
  closed->add_option("--genus", opt.genus, "Genus of the surface")->required();
  auto* check = app.add_subcommand("check", "Run a seeded property suite");
  check->add_option("suite", opt.name)->required()->check(CLI::IsMember(suite_names()));
  check->add_option("--seed", opt.seed, "Seed for the random samples");
  check->add_option("--count", opt.count, "Samples per suite entry (default 20, or 10 for serre and assumption37)");
  auto* report = app.add_subcommand("report", "Validate the workspace and run every suite");
  report->add_flag("--all", opt.all, "Include every suite (the default)");
  report->add_option("--seed", opt.seed, "Seed for the random samples");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    // Before any subcommand matched, a leftover positional is an unknown command name.
    const auto extras = app.remaining();
    if (app.get_subcommands().empty() && !extras.empty()) {
      err << "error: unknown command '" << extras.front() << "'\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    err << "run with --help for usage\n";
    return exit_usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Session s(opt, out);
    int status = exit_usage;
    if (validate->parsed()) status = s.validate();
    if (center->parsed()) status = s.center();
    if (hh0->parsed()) status = s.hh0();
    if (qdim->parsed()) status = s.qdim();
    if (eval->parsed()) status = s.eval();
    if (hom->parsed()) status = s.hom();
    if (fuse->parsed()) status = s.fuse();
    if (closed->parsed()) status = s.closed();
    if (check->parsed()) status = s.check();
    if (report->parsed()) status = s.report();
    s.write_json(command, status);
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failed;
  }
}

}  // namespace dtqft::tools
