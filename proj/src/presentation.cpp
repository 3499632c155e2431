#include "ckhopf/presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace ckhopf {

namespace {

using nlohmann::json;

const char* kind_text(GenKind k) {
  switch (k) {
    case GenKind::P: return "P";
    case GenKind::J: return "J";
    default: return "Other";
  }
}

GenKind kind_from(const std::string& s) {
  if (s == "P") return GenKind::P;
  if (s == "J") return GenKind::J;
  if (s == "Other") return GenKind::Other;
  throw std::runtime_error("unknown generator kind " + s);
}

std::string text(const AlgebraPtr& a, const Terms& t) { return NCElement(a, t).to_string(); }

json algebra_json(const AlgebraPtr& a) {
  json j;
  j["format"] = "ckhopf-presentation";
  j["version"] = 1;
  j["id"] = a->id();
  j["has_E"] = a->has_E();
  auto& sy = j["symbols"] = json::array();
  for (std::size_t i = 0; i < a->table()->size(); ++i) {
    const auto& e = a->table()->entry(i);
    sy.push_back({{"name", e.name}, {"invertible", e.invertible}});
  }
  auto& gs = j["generators"] = json::array();
  for (const auto& g : a->generators())
    gs.push_back({{"name", g.name}, {"kind", kind_text(g.kind)}, {"a", g.a}, {"b", g.b}, {"latex", g.latex}});
  auto& rs = j["rules"] = json::array();
  auto& es = j["e_shifts"] = json::array();
  for (std::size_t xi = 0; xi < a->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    for (std::size_t yi = 0; yi <= xi; ++yi) {
      Letter y = static_cast<Letter>(yi);
      if (const Terms* r = a->rule(x, y))
        rs.push_back({{"x", a->gen(x).name}, {"y", a->gen(y).name}, {"image", text(a, *r)}});
    }
    if (a->has_E() && !a->e_shift(x).empty()) es.push_back({{"x", a->gen(x).name}, {"image", text(a, a->e_shift(x))}});
  }
  return j;
}

SymbolTablePtr table_from(const json& sy) {
  std::vector<SymbolTable::Entry> entries;
  for (const auto& e : sy) entries.push_back({e.at("name").get<std::string>(), e.at("invertible").get<bool>()});
  // share the standard table when it matches, so coefficients combine with preset ones
  int kappas = 0;
  for (const auto& e : entries)
    if (e.name.size() > 1 && e.name[0] == 'k') ++kappas;
  SymbolTable candidate(entries);
  auto standard = SymbolTable::standard(kappas);
  if (*standard == candidate) return standard;
  return std::make_shared<const SymbolTable>(std::move(entries));
}

}  // namespace

nlohmann::json presentation_to_json(const Algebra& a) {
  AlgebraPtr view(std::shared_ptr<const Algebra>{}, &a);
  return algebra_json(view);
}

nlohmann::json presentation_to_json(const Hopf& h) {
  const AlgebraPtr& a = h.algebra();
  json j = algebra_json(a);
  json& d = j["coproduct"] = json::object();
  json& e = j["counit"] = json::object();
  json& s = j["antipode"] = json::object();
  for (std::size_t xi = 0; xi < a->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    const std::string& n = a->gen(x).name;
    d[n] = h.coproduct_image(x).to_string();
    e[n] = h.counit_image(x).to_string();
    s[n] = h.antipode_image(x).to_string();
  }
  return j;
}

HopfPtr presentation_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != "ckhopf-presentation") throw std::runtime_error("not a presentation file");
    if (j.at("version").get<int>() != 1) throw std::runtime_error("unsupported presentation version");
    SymbolTablePtr table = table_from(j.at("symbols"));
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators")) {
      gens.push_back({g.at("name").get<std::string>(), kind_from(g.at("kind").get<std::string>()), g.at("a").get<int>(),
                      g.at("b").get<int>(), g.value("latex", std::string())});
    }
    auto alg = std::make_shared<Algebra>(j.at("id").get<std::string>(), table, std::move(gens), j.at("has_E").get<bool>());
    // images are normal-form text, so parsing them needs no rewrite rule
    for (const auto& r : j.at("rules")) {
      Letter x = alg->require(r.at("x").get<std::string>()), y = alg->require(r.at("y").get<std::string>());
      alg->set_rule(x, y, parse_element(alg, r.at("image").get<std::string>()));
    }
    for (const auto& r : j.value("e_shifts", json::array()))
      alg->set_e_shift(alg->require(r.at("x").get<std::string>()), parse_element(alg, r.at("image").get<std::string>()));

    auto h = std::make_shared<Hopf>(alg);
    if (j.contains("coproduct")) {
      for (std::size_t xi = 0; xi < alg->size(); ++xi) {
        Letter x = static_cast<Letter>(xi);
        const std::string& n = alg->gen(x).name;
        h->set_coproduct(x, parse_tensor(alg, j.at("coproduct").at(n).get<std::string>()));
        h->set_counit(x, parse_coefficient(table, j.at("counit").at(n).get<std::string>()));
        h->set_antipode(x, parse_element(alg, j.at("antipode").at(n).get<std::string>()));
      }
    }
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed presentation: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed presentation: ") + e.what());
  }
}

std::string presentation_latex(const Hopf& h) {
  const AlgebraPtr& a = h.algebra();
  std::ostringstream os;
  os << "% " << a->id() << "\n";
  auto open = [&](const char* title) { os << "\\noindent " << title << "\n\\begin{equation*}\\begin{array}{l}\n"; };
  auto close = [&] { os << "\\end{array}\\end{equation*}\n\n"; };
  if (h.complete()) {
    open("Coproduct:");
    for (std::size_t x = 0; x < a->size(); ++x)
      os << "\\Delta(" << a->gen(static_cast<Letter>(x)).latex << ") = " << h.coproduct_image(static_cast<Letter>(x)).to_latex()
         << " \\\\\n";
    close();
    open("Counit:");
    for (std::size_t x = 0; x < a->size(); ++x)
      os << "\\varepsilon(" << a->gen(static_cast<Letter>(x)).latex << ") = " << h.counit_image(static_cast<Letter>(x)).to_latex()
         << " \\\\\n";
    close();
    open("Antipode:");
    for (std::size_t x = 0; x < a->size(); ++x)
      os << "S(" << a->gen(static_cast<Letter>(x)).latex << ") = " << h.antipode_image(static_cast<Letter>(x)).to_latex()
         << " \\\\\n";
    close();
  }
  open("Commutators:");
  for (std::size_t xi = 0; xi < a->size(); ++xi) {
    for (std::size_t yi = 0; yi < xi; ++yi) {
      Letter x = static_cast<Letter>(xi), y = static_cast<Letter>(yi);
      NCElement b = commutator(NCElement::gen(a, x), NCElement::gen(a, y));
      if (b.is_zero()) continue;
      os << "[" << a->gen(x).latex << "," << a->gen(y).latex << "] = " << b.to_latex() << " \\\\\n";
    }
  }
  close();
  return os.str();
}

}  // namespace ckhopf
