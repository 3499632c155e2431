// ckhopf: build Cayley-Klein quantum algebras, verify them, export them.
//
// Exit status: 0 when every report entry passes, 1 when some entry fails,
// 2 on usage or I/O errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "ckhopf/bicross.hpp"
#include "ckhopf/physkit.hpp"
#include "ckhopf/presentation.hpp"
#include "ckhopf/suite.hpp"

using namespace ckhopf;
using nlohmann::json;

namespace {

struct Options {
  int n = 0;
  std::string kappa;
  std::string preset;
  std::string basis = "new";
  std::vector<std::string> checks;
  bool all = false;
  std::size_t max_degree = 6;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::string presentation;
  bool deterministic = false;
  bool dual = false;
  unsigned threads = 0;
  int cap = 4;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// κ from --preset, --kappa or all-symbolic; the preset fixes N.
std::pair<KVector, std::optional<Preset>> resolve(const Options& o) {
  if (!o.preset.empty()) {
    std::string name = o.preset;
    if (name == "kappa_poincare") name += "_" + std::to_string(o.n > 0 ? o.n : 4);
    Preset p = preset(name);
    if (o.n > 0 && o.n != p.k.n()) throw UsageError("--N " + std::to_string(o.n) + " conflicts with preset " + name);
    if (!o.kappa.empty()) throw UsageError("--kappa and --preset are exclusive");
    return {p.k, p};
  }
  int n = o.n > 0 ? o.n : 3;
  if (o.kappa.empty()) return {KVector::symbolic(n), std::nullopt};
  return {KVector::parse(n, o.kappa), std::nullopt};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

json config_json(const std::string& command, const Options& o, const KVector* k) {
  json c{{"command", command}, {"basis", o.basis}, {"seed", o.seed}, {"max_degree", o.max_degree}, {"samples", o.samples}};
  if (k) {
    c["N"] = k->n();
    c["kappa"] = k->label();
  }
  if (!o.preset.empty()) c["preset"] = o.preset;
  if (!o.presentation.empty()) c["presentation"] = o.presentation;
  return c;
}

int finish(const std::string& command, const Options& o, const KVector& k, const std::vector<std::string>& checks,
           const VerificationReport& rep) {
  json j = rep.to_json(o.deterministic);
  j["config"] = config_json(command, o, &k);
  j["config"]["checks"] = checks;
  if (!o.out.empty()) write_text(o.out, j.dump(2) + "\n");
  std::cerr << command << " " << k.label() << ": " << rep.summary() << "\n";
  return rep.all_pass() ? 0 : 1;
}

std::vector<std::string> selected_checks(const Options& o) {
  std::vector<std::string> c = o.checks;
  if (o.all) c.push_back("all");
  if (c.empty()) throw UsageError("select --check NAME or --all");
  for (const auto& x : c) {
    if (x != "all" && std::find(check_names().begin(), check_names().end(), x) == check_names().end())
      throw UsageError("unknown check " + x);
  }
  return c;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> checks = selected_checks(o);
  if (!o.presentation.empty()) {
    HopfPtr h = presentation_from_json(read_json(o.presentation));
    VerificationReport rep(o.seed);
    for (const auto& c : checks) {
      if (c == "jacobi" || c == "all") rep.merge(check_jacobi(h->algebra()));
      if (c == "hopf" || c == "all") {
        if (!h->complete()) throw UsageError("presentation has no coalgebra");
        rep.merge(check_hopf(*h));
      }
      if (c == "confluence" || c == "all")
        rep.merge(check_confluence_sample(h->algebra(), o.samples, o.max_degree, o.seed));
      if (c != "all" && c != "jacobi" && c != "hopf" && c != "confluence")
        throw UsageError("check " + c + " needs a built κ family, not a presentation file");
    }
    json j = rep.to_json(o.deterministic);
    j["config"] = config_json("verify", o, nullptr);
    j["config"]["checks"] = checks;
    if (!o.out.empty()) write_text(o.out, j.dump(2) + "\n");
    std::cerr << "verify " << h->id() << ": " << rep.summary() << "\n";
    return rep.all_pass() ? 0 : 1;
  }
  auto [k, p] = resolve(o);
  SuiteConfig cfg{o.basis, o.max_degree, o.samples, o.seed};
  VerificationReport rep(o.seed);
  std::vector<std::string> expanded;
  for (const auto& c : checks) {
    if (c == "all") {
      for (const auto& a : all_checks(k)) expanded.push_back(a);
    } else {
      expanded.push_back(c);
    }
  }
  for (const auto& c : expanded) rep.merge(run_check(c, k, cfg));
  if (p && p->k.n() == 4 && o.all) {
    rep.merge(emit_physical_tables(*p).report);
    rep.merge(divergence_guard(*p));
  }
  return finish("verify", o, k, expanded, rep);
}

json dual_json(const DualN2& d) {
  json j = presentation_to_json(*d.product);
  const AlgebraPtr& a = d.ambient->algebra();
  json& act = j["action"] = json::object();
  for (const auto& [key, v] : d.action) act[a->gen(key.first).name + " > " + a->gen(key.second).name] = v.to_string();
  json& co = j["coaction"] = json::object();
  for (const auto& [x, t] : d.coaction) co[a->gen(x).name] = t.to_string();
  return j;
}

int cmd_export(const Options& o) {
  if (o.format != "json" && o.format != "latex") throw UsageError("--format must be json or latex");
  auto [k, p] = resolve(o);
  std::string text;
  if (o.dual) {
    if (k.n() != 2) throw UsageError("--dual needs N = 2");
    DualN2 d = build_dual_n2(k);
    text = o.format == "json" ? dual_json(d).dump(2) + "\n" : presentation_latex(*d.product);
  } else if (p && k.n() == 4 && o.basis == "new") {
    PhysicalTables t = emit_physical_tables(*p);
    text = o.format == "json" ? presentation_to_json(*t.physical).dump(2) + "\n" : tables_latex(t);
  } else if (o.basis == "classical") {
    AlgebraPtr a = build_affine(k);
    text = o.format == "json" ? presentation_to_json(*a).dump(2) + "\n" : presentation_latex(Hopf(a));
  } else {
    HopfPtr h = o.basis == "old" ? build_deformed_old(k) : build_deformed_new(k);
    text = o.format == "json" ? presentation_to_json(*h).dump(2) + "\n" : presentation_latex(*h);
  }
  write_text(o.out, text);
  return 0;
}

int cmd_sweep(const Options& o) {
  if (o.n < 2) throw UsageError("sweep needs --N >= 2");
  if (o.n > o.cap) throw UsageError("N = " + std::to_string(o.n) + " exceeds the sweep cap " + std::to_string(o.cap));
  std::vector<std::string> checks = selected_checks(o);
  for (const auto& c : checks)
    if (c == "galilei") throw UsageError("galilei does not depend on κ; use verify");
  unsigned threads = o.threads > 0 ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  SuiteConfig cfg{o.basis, o.max_degree, o.samples, o.seed};
  VerificationReport rep = sweep(o.n, checks, cfg, threads);
  std::size_t count = affine_specializations(o.n).size();
  json j = rep.to_json(o.deterministic);
  j["config"] = {{"command", "sweep"}, {"N", o.n}, {"basis", o.basis}, {"seed", o.seed}, {"checks", checks},
                 {"specializations", count}, {"max_degree", o.max_degree}, {"samples", o.samples}};
  if (!o.out.empty()) write_text(o.out, j.dump(2) + "\n");
  std::cerr << "sweep N=" << o.n << " over " << count << " specializations: " << rep.summary() << "\n";
  return rep.all_pass() ? 0 : 1;
}

int cmd_presets() {
  for (const auto& name : preset_names()) {
    Preset p = preset(name == "kappa_poincare_N" ? "kappa_poincare_4" : name);
    std::cout << name << "  " << (name == "kappa_poincare_N" ? "(0,1,...,1,-c^2)" : p.k.label()) << "\n";
  }
  return 0;
}

void add_family(CLI::App* c, Options& o) {
  c->add_option("--N", o.n, "dimension N");
  c->add_option("--kappa", o.kappa, "kappa2..kappaN (or kappa1..kappaN), comma separated; s = symbolic");
  c->add_option("--preset", o.preset, "named kappa vector, see 'presets'");
  c->add_option("--basis", o.basis, "classical | old | new")->check(CLI::IsMember({"classical", "old", "new"}));
}

void add_checks(CLI::App* c, Options& o) {
  c->add_option("--check", o.checks, "check name, repeatable")->delimiter(',');
  c->add_flag("--all", o.all, "every applicable check");
  c->add_option("--max-degree", o.max_degree, "word length for confluence sampling");
  c->add_option("--samples", o.samples, "random words for confluence sampling");
  c->add_option("--seed", o.seed, "RNG seed, recorded in the report");
  c->add_option("--out", o.out, "report JSON path");
  c->add_flag("--deterministic", o.deterministic, "write wall times as 0");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-Klein quantum algebras: build, verify, export"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "run checks on one kappa vector or a presentation file");
  add_family(verify, o);
  add_checks(verify, o);
  verify->add_option("--presentation", o.presentation, "presentation JSON to check instead of a built family");

  auto* exp = app.add_subcommand("export", "write a presentation as JSON or LaTeX");
  add_family(exp, o);
  exp->add_option("--format", o.format, "json | latex")->check(CLI::IsMember({"json", "latex"}));
  exp->add_option("--out", o.out, "output path (stdout if omitted)");
  exp->add_flag("--dual", o.dual, "the N = 2 dual group instead");

  auto* sw = app.add_subcommand("sweep", "run checks over all {-1,0,1}^(N-1) affine specializations");
  sw->add_option("--N", o.n, "dimension N")->required();
  sw->add_option("--basis", o.basis, "classical | old | new")->check(CLI::IsMember({"classical", "old", "new"}));
  add_checks(sw, o);
  sw->add_option("--threads", o.threads, "worker threads (default: hardware)");
  sw->add_option("--cap", o.cap, "largest N accepted");

  app.add_subcommand("presets", "list the preset catalog");

  CLI11_PARSE(app, argc, argv);
  try {
    if (verify->parsed()) return cmd_verify(o);
    if (exp->parsed()) return cmd_export(o);
    if (sw->parsed()) return cmd_sweep(o);
    return cmd_presets();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
