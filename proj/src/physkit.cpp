#include "ckhopf/physkit.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ckhopf/bicross.hpp"

namespace ckhopf {

namespace {

std::string num(int i) { return std::to_string(i); }

// CK letter order of the affine layout: P1..PN, then J_ab lexicographic.
std::vector<std::string> ck_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("P" + num(i));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back("J" + num(a) + num(b));
  return out;
}

std::size_t ck_index(int n, const std::string& name) {
  auto names = ck_names(n);
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::logic_error("no CK generator " + name);
  return static_cast<std::size_t>(it - names.begin());
}

std::string j_name(int a, int b) { return "J" + num(std::min(a, b)) + num(std::max(a, b)); }

// CK monomial -> physical monomial sign.
Coefficient word_sign(const Word& w, const PhysicalBasis& b) {
  int s = 1;
  for (Letter x : w) s *= b.sign.at(x);
  return Coefficient(s);
}

NCElement resign(const Terms& t, const AlgebraPtr& target, const PhysicalBasis& b, int outer) {
  NCElement r(target);
  for (const auto& [m, c] : t) r.add_term(m, c * word_sign(m.word, b) * Coefficient(outer));
  return r;
}

TensorElement resign(const TensorElement& t, const AlgebraPtr& target, const PhysicalBasis& b, int outer) {
  TensorElement r(target, t.arity());
  for (const auto& [key, c] : t.terms()) {
    Coefficient s(outer);
    for (const Monomial& m : key) s = s * word_sign(m.word, b);
    r.add_term(key, c * s);
  }
  return r;
}

std::shared_ptr<Algebra> relabeled(const AlgebraPtr& alg, const PhysicalBasis& b) {
  if (alg->size() != b.names.size()) throw std::invalid_argument("physical basis size mismatch");
  std::vector<Generator> gens = alg->generators();
  for (std::size_t x = 0; x < gens.size(); ++x) {
    if (gens[x].name != b.ck_names.at(x)) throw std::invalid_argument("physical basis order mismatch at " + gens[x].name);
    gens[x].name = b.names[x];
    gens[x].latex = b.latex[x];
  }
  auto out = std::make_shared<Algebra>(alg->id() + "[phys]", alg->table(), std::move(gens), alg->has_E());
  for (std::size_t xi = 0; xi < alg->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    for (std::size_t yi = 0; yi <= xi; ++yi) {
      Letter y = static_cast<Letter>(yi);
      if (const Terms* r = alg->rule(x, y)) out->set_rule(x, y, resign(*r, out, b, b.sign[x] * b.sign[y]));
    }
    if (alg->has_E() && !alg->e_shift(x).empty()) out->set_e_shift(x, resign(alg->e_shift(x), out, b, b.sign[x]));
  }
  return out;
}

// Normal form of `x` re-expressed in another algebra with the same names.
NCElement reexpress(const NCElement& x, const AlgebraPtr& target) { return parse_element(target, x.to_string()); }

int family(const std::string& name) {
  switch (name.front()) {
    case 'H':
    case 'P': return 0;
    case 'K': return 1;
    default: return 2;
  }
}

// Display order: H, P's, K's, J's (CK leftovers last), stable by name.
std::vector<Letter> display_order(const Algebra& a) {
  std::vector<Letter> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Letter>(i);
  auto rank = [&](Letter x) {
    const std::string& n = a.gen(x).name;
    return std::make_pair(family(n) * 2 + (n == "H" ? 0 : 1), n);
  };
  std::sort(v.begin(), v.end(), [&](Letter x, Letter y) { return rank(x) < rank(y); });
  return v;
}

// [x, y] in the order the tables use: same family earlier first, otherwise
// the K or J on the left.
std::pair<Letter, Letter> bracket_order(const Algebra& a, Letter x, Letter y, const std::vector<Letter>& order) {
  auto pos = [&](Letter z) { return std::find(order.begin(), order.end(), z) - order.begin(); };
  if (pos(x) > pos(y)) std::swap(x, y);
  if (family(a.gen(x).name) == family(a.gen(y).name)) return {x, y};
  return {y, x};
}

std::string bracket_text(const Algebra& a, Letter x, Letter y) { return "[" + a.gen(x).name + "," + a.gen(y).name + "]"; }

std::size_t c_index(const KVector& k) { return k.table()->require("c"); }

}  // namespace

PhysicalBasis physical_basis(int n, int s) {
  if (n < 2 || s < 1 || s > n) throw std::invalid_argument("physical basis needs 1 <= s <= N, N >= 2");
  PhysicalBasis b;
  b.time_slot = s;
  b.ck_names = ck_names(n);
  b.names = b.ck_names;
  b.latex = b.ck_names;
  b.sign.assign(b.names.size(), 1);
  auto set = [&](const std::string& ck, const std::string& name, const std::string& latex, int sign) {
    std::size_t i = ck_index(n, ck);
    b.names[i] = name;
    b.latex[i] = latex;
    b.sign[i] = sign;
  };
  for (std::size_t i = 0; i < b.names.size(); ++i) {
    if (b.names[i].front() == 'J') b.latex[i] = "J_{" + b.names[i].substr(1) + "}";
  }
  std::vector<int> space;
  for (int i = 1; i <= n; ++i)
    if (i != s) space.push_back(i);
  set("P" + num(s), "H", "H", 1);
  for (std::size_t i = 0; i < space.size(); ++i) {
    std::string id = num(static_cast<int>(i) + 1);
    set("P" + num(space[i]), "P" + id, "P_{" + id + "}", 1);
    set(j_name(s, space[i]), "K" + id, "K_{" + id + "}", 1);
  }
  if (n == 4) {
    set(j_name(space[1], space[2]), "J1", "J_{1}", 1);
    set(j_name(space[0], space[2]), "J2", "J_{2}", -1);
    set(j_name(space[0], space[1]), "J3", "J_{3}", 1);
  }
  return b;
}

std::vector<std::string> preset_names() {
  return {"euclid4", "poincare_1", "poincare_2", "poincare_3", "poincare_4", "galilei", "kappa_poincare_N"};
}

Preset preset(const std::string& name) {
  auto make = [&](const std::string& csv, int n, int s) { return Preset{name, KVector::parse(n, csv), physical_basis(n, s)}; };
  if (name == "euclid4") return make("0,1,1,1", 4, 1);
  if (name == "poincare_1") return make("0,-c^-2,1,1", 4, 1);
  if (name == "poincare_2") return make("0,-c^2,-c^-2,1", 4, 2);
  if (name == "poincare_3") return make("0,1,-c^2,-c^-2", 4, 3);
  if (name == "poincare_4") return make("0,1,1,-c^2", 4, 4);
  if (name == "galilei") return make("0,0,1,1", 4, 1);
  const std::string kp = "kappa_poincare_";
  if (name.rfind(kp, 0) == 0 && name.size() > kp.size()) {
    std::string tail = name.substr(kp.size());
    if (!std::all_of(tail.begin(), tail.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) || tail.size() > 2)
      throw std::invalid_argument("unknown preset " + name);
    int n = std::stoi(tail);
    if (n < 2) throw std::invalid_argument("kappa_poincare_N needs N >= 2");
    std::string csv = "0";
    for (int l = 2; l < n; ++l) csv += ",1";
    csv += ",-c^2";
    return make(csv, n, n);
  }
  throw std::invalid_argument("unknown preset " + name);
}

AlgebraPtr to_physical(const AlgebraPtr& alg, const PhysicalBasis& b) { return relabeled(alg, b); }

HopfPtr to_physical(const Hopf& h, const PhysicalBasis& b) {
  AlgebraPtr alg = relabeled(h.algebra(), b);
  auto out = std::make_shared<Hopf>(alg);
  for (std::size_t xi = 0; xi < alg->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    out->set_coproduct(x, resign(h.coproduct_image(x), alg, b, b.sign[x]));
    out->set_counit(x, h.counit_image(x) * Coefficient(b.sign[x]));
    out->set_antipode(x, resign(h.antipode_image(x).terms(), alg, b, b.sign[x]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reference tables

namespace {

// κ-Poincaré in the bicrossproduct basis with κ = 1/λ and c = 1: H = P0,
// boosts K_i = N_i, rotations J_i = M_i.
std::vector<ReferenceRow> kappa_poincare_rows() {
  std::vector<ReferenceRow> rows;
  auto eps = [](int i, int j) {
    int k = 6 - i - j;
    bool even = (i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1);
    return std::make_pair(k, even ? std::string() : std::string("-"));
  };
  rows.push_back({"coproduct", "H", "", "1 (x) H + H (x) 1"});
  for (int i = 1; i <= 3; ++i) {
    std::string P = "P" + num(i), K = "K" + num(i), J = "J" + num(i);
    rows.push_back({"coproduct", P, "", "E^-2 (x) " + P + " + " + P + " (x) 1"});
    rows.push_back({"coproduct", J, "", "1 (x) " + J + " + " + J + " (x) 1"});
    // Δ(N_i) = N_i⊗1 + e^{-P0/κ}⊗N_i + (1/κ) ε_ijk P_j⊗M_k
    std::string dk = "E^-2 (x) " + K + " + " + K + " (x) 1";
    // S(N_i) = -e^{P0/κ} N_i + (1/κ) ε_ijk e^{P0/κ} P_j M_k
    std::string sk = "-E^2*" + K;
    for (int j = 1; j <= 3; ++j) {
      if (j == i) continue;
      auto [k, sg] = eps(i, j);
      std::string sign = sg.empty() ? " + " : " - ";
      dk += sign + "lambda*P" + num(j) + " (x) J" + num(k);
      sk += sign + "lambda*E^2*P" + num(j) + "*J" + num(k);
    }
    rows.push_back({"coproduct", K, "", dk});
    rows.push_back({"antipode", P, "", "-E^2*" + P});
    rows.push_back({"antipode", J, "", "-" + J});
    rows.push_back({"antipode", K, "", sk});
  }
  rows.push_back({"antipode", "H", "", "-H"});
  for (const char* x : {"H", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3"}) rows.push_back({"counit", x, "", "0"});

  const std::vector<std::string> tr = {"H", "P1", "P2", "P3"};
  for (std::size_t i = 0; i < tr.size(); ++i)
    for (std::size_t j = i + 1; j < tr.size(); ++j) rows.push_back({"bracket", tr[i], tr[j], "0"});
  const std::string sq = "1/2*lambda*P1^2 + 1/2*lambda*P2^2 + 1/2*lambda*P3^2";
  for (int i = 1; i <= 3; ++i) {
    std::string K = "K" + num(i), J = "J" + num(i);
    rows.push_back({"bracket", K, "H", "P" + num(i)});
    rows.push_back({"bracket", J, "H", "0"});
    for (int j = 1; j <= 3; ++j) {
      // [N_i, P_j] = δ_ij (κ/2 (1 - e^{-2P0/κ}) + P⃗²/(2κ)) - P_i P_j / κ
      std::string t = "-lambda*P" + num(i) + "*P" + num(j);
      if (i == j) t = "1/2*lambda^-1 - 1/2*lambda^-1*E^-4 + " + sq + " " + t;
      rows.push_back({"bracket", K, "P" + num(j), t});
      std::string jp = "0", jk = "0";
      if (i != j) {
        auto [k, sg] = eps(i, j);
        jp = sg + "P" + num(k);
        jk = sg + "K" + num(k);
        if (i < j) {
          rows.push_back({"bracket", J, "J" + num(j), sg + "J" + num(k)});
          rows.push_back({"bracket", K, "K" + num(j), (sg.empty() ? "-" : "") + std::string("J") + num(k)});
        }
      }
      rows.push_back({"bracket", J, "P" + num(j), jp});
      rows.push_back({"bracket", J, "K" + num(j), jk});
    }
  }
  return rows;
}

}  // namespace

std::vector<ReferenceRow> reference_tables(const std::string& preset_name, bool displayed_kk) {
  if (preset_name == "kappa_poincare_4") return kappa_poincare_rows();
  bool galilei = preset_name == "galilei";
  if (!galilei && preset_name != "poincare_1") throw std::invalid_argument("no reference tables for " + preset_name);
  std::vector<ReferenceRow> rows;
  auto co = [&](const std::string& x, const std::string& t) { rows.push_back({"coproduct", x, "", t}); };
  auto an = [&](const std::string& x, const std::string& t) { rows.push_back({"antipode", x, "", t}); };
  auto br = [&](const std::string& x, const std::string& y, const std::string& t) { rows.push_back({"bracket", x, y, t}); };
  const std::vector<std::string> all = {"H", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3"};

  for (const char* x : {"H", "P1", "P2"}) co(x, std::string("E^-2 (x) ") + x + " + " + x + " (x) 1");
  co("P3", "1 (x) P3 + P3 (x) 1");
  for (const char* x : {"K1", "K2", "J3"}) co(x, std::string("1 (x) ") + x + " + " + x + " (x) 1");
  co("K3", "E^-2 (x) K3 + K3 (x) 1 - lambda*P1 (x) K1 - lambda*P2 (x) K2");
  co("J1", "E^-2 (x) J1 + J1 (x) 1 + lambda*H (x) K2 + lambda*P1 (x) J3");
  co("J2", "E^-2 (x) J2 + J2 (x) 1 - lambda*H (x) K1 + lambda*P2 (x) J3");

  for (const auto& x : all) rows.push_back({"counit", x, "", "0"});

  // e^{λP3} = E^2
  for (const char* x : {"H", "P1", "P2"}) an(x, std::string("-E^2*") + x);
  an("P3", "-P3");
  for (const char* x : {"K1", "K2", "J3"}) an(x, std::string("-") + x);
  an("K3", "-E^2*K3 - lambda*E^2*P1*K1 - lambda*E^2*P2*K2");
  an("J1", "-E^2*J1 + lambda*E^2*H*K2 + lambda*E^2*P1*J3");
  an("J2", "-E^2*J2 - lambda*E^2*H*K1 + lambda*E^2*P2*J3");

  // (1 - e^{-2λP3})/(2λ) with e^{-2λP3} = E^-4
  const std::string sh = "1/2*lambda^-1 - 1/2*lambda^-1*E^-4";
  const std::string h2 = galilei ? "" : "1/2*lambda*c^-2*H^2";
  auto with_h2 = [&](const std::string& base, char sign, const std::string& rest) {
    return base + (h2.empty() ? "" : std::string(" ") + sign + " " + h2) + rest;
  };

  const std::vector<std::string> tr = {"H", "P1", "P2", "P3"};
  for (std::size_t i = 0; i < tr.size(); ++i)
    for (std::size_t j = i + 1; j < tr.size(); ++j) br(tr[i], tr[j], "0");

  br("K1", "H", "P1");
  br("K2", "H", "P2");
  br("K3", "H", with_h2(sh, '-', " - 1/2*lambda*P1^2 - 1/2*lambda*P2^2"));
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      std::string t = "0";
      if (!galilei) {
        if (i < 3 && j < 3 && i == j) t = "c^-2*H";
        if (i == 3 && j < 3) t = "-lambda*c^-2*H*P" + num(j);
        if (i == 3 && j == 3) t = "c^-2*H";
      }
      br("K" + num(i), "P" + num(j), t);
    }
  }
  br("J1", "H", "lambda*P2*H");
  br("J2", "H", "-lambda*P1*H");
  br("J3", "H", "0");
  br("J1", "P1", "lambda*P2*P1");
  br("J1", "P2", with_h2(sh, '+', " - 1/2*lambda*P1^2 + 1/2*lambda*P2^2"));
  br("J1", "P3", "-P2");
  br("J2", "P1", with_h2("-(" + sh + ")", '-', " - 1/2*lambda*P1^2 + 1/2*lambda*P2^2"));
  br("J2", "P2", "-lambda*P1*P2");
  br("J2", "P3", "P1");
  br("J3", "P1", "P2");
  br("J3", "P2", "-P1");
  br("J3", "P3", "0");

  // ε_ijk with (i, j) = (1,2), (1,3), (2,3): k = 3, 2, 1 and sign +, -, +
  const int kk[3][3] = {{1, 2, 3}, {1, 3, 2}, {2, 3, 1}};
  const int eps[3] = {1, -1, 1};
  for (int r = 0; r < 3; ++r) {
    std::string t = "0";
    if (!galilei) {
      std::string target = (displayed_kk ? "K" : "J") + num(kk[r][2]);
      t = (eps[r] > 0 ? "-c^-2*" : "c^-2*") + target;
    }
    br("K" + num(kk[r][0]), "K" + num(kk[r][1]), t);
  }
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      std::string t = "0";
      if (i != j) {
        int k = 6 - i - j;
        bool even = (i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1);
        t = std::string(even ? "" : "-") + "K" + num(k);
      }
      br("J" + num(i), "K" + num(j), t);
    }
  }
  br("J1", "J2", "J3");
  br("J1", "J3", "-J2");
  br("J2", "J3", "J1");
  return rows;
}

VerificationReport compare_tables(const Hopf& h, const std::vector<ReferenceRow>& rows) {
  VerificationReport rep;
  const AlgebraPtr& a = h.algebra();
  const std::string id = a->id();
  std::set<std::string> seen;
  for (const auto& row : rows) {
    Letter x = a->require(row.x);
    if (row.section == "bracket") {
      Letter y = a->require(row.y);
      seen.insert("bracket:" + std::min(row.x, row.y) + "," + std::max(row.x, row.y));
      rep.record("physkit.tables.bracket", id, "[" + row.x + "," + row.y + "]", [&] {
        return (commutator(NCElement::gen(a, x), NCElement::gen(a, y)) - parse_element(a, row.text)).to_string();
      });
      continue;
    }
    seen.insert(row.section + ":" + row.x);
    if (row.section == "coproduct") {
      rep.record("physkit.tables.coproduct", id, "Delta(" + row.x + ")",
                 [&] { return (h.coproduct_image(x) - parse_tensor(a, row.text)).to_string(); });
    } else if (row.section == "counit") {
      rep.record("physkit.tables.counit", id, "epsilon(" + row.x + ")",
                 [&] { return (h.counit_image(x) - parse_coefficient(a->table(), row.text)).to_string(); });
    } else if (row.section == "antipode") {
      rep.record("physkit.tables.antipode", id, "S(" + row.x + ")",
                 [&] { return (h.antipode_image(x) - parse_element(a, row.text)).to_string(); });
    } else {
      throw std::invalid_argument("unknown table section " + row.section);
    }
  }
  rep.record("physkit.tables.coverage", id, "all generators and pairs", [&] {
    std::string missing;
    for (std::size_t xi = 0; xi < a->size(); ++xi) {
      const std::string& n = a->gen(static_cast<Letter>(xi)).name;
      for (const char* s : {"coproduct:", "counit:", "antipode:"})
        if (!seen.count(s + n)) missing += std::string(" ") + s + n;
      for (std::size_t yi = xi + 1; yi < a->size(); ++yi) {
        const std::string& m = a->gen(static_cast<Letter>(yi)).name;
        if (!seen.count("bracket:" + std::min(n, m) + "," + std::max(n, m))) missing += " [" + n + "," + m + "]";
      }
    }
    return missing.empty() ? std::string("0") : "missing" + missing;
  });
  return rep;
}

PhysicalTables emit_physical_tables(const Preset& p) {
  if (p.k.n() != 4) throw std::invalid_argument("physical tables need an N = 4 preset");
  PhysicalTables out{p, to_physical(*build_deformed_new(p.k), p.basis), {}, {}};
  const Hopf& h = *out.physical;
  const AlgebraPtr& a = h.algebra();
  std::vector<Letter> order = display_order(*a);
  auto gen = [&](Letter x) { return NCElement::gen(a, x); };
  for (Letter x : order) {
    const auto& g = a->gen(x);
    out.rows.push_back({"coproduct", "Delta(" + g.name + ")", h.coproduct_image(x).to_string(),
                        "\\Delta(" + g.latex + ")"});
  }
  for (Letter x : order) {
    const auto& g = a->gen(x);
    out.rows.push_back({"counit", "epsilon(" + g.name + ")", h.counit_image(x).to_string(),
                        "\\varepsilon(" + g.latex + ")"});
  }
  for (Letter x : order) {
    const auto& g = a->gen(x);
    out.rows.push_back({"antipode", "S(" + g.name + ")", h.antipode_image(x).to_string(), "S(" + g.latex + ")"});
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      auto [x, y] = bracket_order(*a, order[i], order[j], order);
      out.rows.push_back({"bracket", bracket_text(*a, x, y), commutator(gen(x), gen(y)).to_string(),
                          "[" + a->gen(x).latex + "," + a->gen(y).latex + "]"});
    }
  }
  if (p.name == "poincare_1" || p.name == "galilei") out.report = compare_tables(h, reference_tables(p.name));
  return out;
}

std::string tables_latex(const PhysicalTables& t) {
  const Hopf& h = *t.physical;
  const AlgebraPtr& a = h.algebra();
  std::ostringstream os;
  os << "% " << t.preset.name << " " << t.preset.k.label() << "\n";
  std::vector<Letter> order = display_order(*a);
  auto section = [&](const char* title) { os << "\\noindent " << title << "\n\\begin{equation*}\\begin{array}{l}\n"; };
  auto close = [&] { os << "\\end{array}\\end{equation*}\n\n"; };
  section("Coproduct:");
  for (Letter x : order) os << "\\Delta(" << a->gen(x).latex << ") = " << h.coproduct_image(x).to_latex() << " \\\\\n";
  close();
  section("Counit:");
  for (Letter x : order) os << "\\varepsilon(" << a->gen(x).latex << ") = " << h.counit_image(x).to_latex() << " \\\\\n";
  close();
  section("Antipode:");
  for (Letter x : order) os << "S(" << a->gen(x).latex << ") = " << h.antipode_image(x).to_latex() << " \\\\\n";
  close();
  section("Commutators:");
  for (const auto& row : t.rows) {
    if (row.section != "bracket") continue;
    // only nonzero brackets, as in the usual layout
    if (row.text == "0") continue;
    os << row.latex << " = ";
    auto comma = row.lhs.find(',');
    Letter x = a->require(row.lhs.substr(1, comma - 1));
    Letter y = a->require(row.lhs.substr(comma + 1, row.lhs.size() - comma - 2));
    os << commutator(NCElement::gen(a, x), NCElement::gen(a, y)).to_latex() << " \\\\\n";
  }
  close();
  return os.str();
}

// ---------------------------------------------------------------------------
// Galilei limit

VerificationReport galilei_limit_check() {
  VerificationReport rep;
  Preset pp = preset("poincare_1"), pg = preset("galilei");
  HopfPtr poincare = build_deformed_new(pp.k);
  HopfPtr contracted = contract(*poincare, 2);
  HopfPtr galilei = build_deformed_new(pg.k);
  rep.merge(compare_hopf(*contracted, *galilei, "physkit.galilei.contract"));

  HopfPtr P = to_physical(*poincare, pp.basis), G = to_physical(*contracted, pg.basis);
  const AlgebraPtr &pa = P->algebra(), &ga = G->algebra();
  const std::string id = pa->id() + " -> " + ga->id();
  for (std::size_t xi = 0; xi < pa->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    const std::string& n = pa->gen(x).name;
    rep.record("physkit.galilei.coalgebra", id, "Delta(" + n + ")",
               [&] { return (G->coproduct_image(x).transported(pa) - P->coproduct_image(x)).to_string(); });
    rep.record("physkit.galilei.coalgebra", id, "epsilon(" + n + ")",
               [&] { return (G->counit_image(x) - P->counit_image(x)).to_string(); });
    rep.record("physkit.galilei.coalgebra", id, "S(" + n + ")",
               [&] { return (G->antipode_image(x).transported(pa) - P->antipode_image(x)).to_string(); });
  }

  // Brackets that differ from the Poincaré ones must all appear in the list
  // of changed brackets, and the listed ones take the listed values.
  std::set<std::pair<std::string, std::string>> listed = {{"K3", "H"}, {"J1", "P2"}, {"J2", "P1"},
                                                         {"K1", "K2"}, {"K1", "K3"}, {"K2", "K3"}};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) listed.insert({"K" + num(i), "P" + num(j)});
  std::string unlisted, unchanged;
  for (std::size_t xi = 0; xi < pa->size(); ++xi) {
    for (std::size_t yi = xi + 1; yi < pa->size(); ++yi) {
      Letter x = static_cast<Letter>(xi), y = static_cast<Letter>(yi);
      const std::string &nx = pa->gen(x).name, &ny = pa->gen(y).name;
      NCElement bp = commutator(NCElement::gen(pa, x), NCElement::gen(pa, y));
      NCElement bg = commutator(NCElement::gen(ga, x), NCElement::gen(ga, y)).transported(pa);
      bool changed = !(bp == bg);
      bool is_listed = listed.count({nx, ny}) || listed.count({ny, nx});
      if (changed && !is_listed) unlisted += " [" + nx + "," + ny + "]";
      // a listed bracket that is nonzero in Poincaré must change
      if (!changed && is_listed && !bp.is_zero()) unchanged += " [" + nx + "," + ny + "]";
    }
  }
  rep.record("physkit.galilei.changed_set", id, "changed but not listed",
             [&] { return unlisted.empty() ? std::string("0") : unlisted.substr(1); });
  rep.record("physkit.galilei.changed_set", id, "listed but unchanged",
             [&] { return unchanged.empty() ? std::string("0") : unchanged.substr(1); });

  std::vector<ReferenceRow> changed;
  for (const auto& row : reference_tables("galilei"))
    if (row.section == "bracket" && (listed.count({row.x, row.y}) || listed.count({row.y, row.x}))) changed.push_back(row);
  for (VerificationReport r = compare_tables(*G, changed).filter("physkit.tables.bracket"); auto e : r.entries()) {
    e.check = "physkit.galilei.changed_value";
    rep.add(std::move(e));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Divergence guard

VerificationReport divergence_guard(const Preset& p) {
  VerificationReport rep;
  HopfPtr h = build_deformed_new(p.k);
  const AlgebraPtr& a = h->algebra();
  ReportEntry e;
  e.check = "physkit.divergence";
  e.algebra_id = a->id();
  e.item = p.name;
  auto c = p.k.table()->index_of("c");
  if (!c) {
    e.note = "no c symbol";
    rep.add(e);
    return rep;
  }
  std::vector<std::string> where;
  auto scan = [&](const std::string& what, const auto& terms) {
    for (const auto& [m, coeff] : terms) {
      if (coeff.exponent_range(*c).second > 0) {
        where.push_back(what);
        return;
      }
    }
  };
  for (std::size_t xi = 0; xi < a->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    const std::string& n = a->gen(x).name;
    for (std::size_t yi = 0; yi < xi; ++yi) {
      if (const Terms* r = a->rule(x, static_cast<Letter>(yi)))
        scan(n + "*" + a->gen(static_cast<Letter>(yi)).name, *r);
    }
    if (a->has_E()) scan("E-shift(" + n + ")", a->e_shift(x));
    scan("Delta(" + n + ")", h->coproduct_image(x).terms());
    scan("S(" + n + ")", h->antipode_image(x).terms());
  }
  if (where.empty()) {
    e.note = "no positive powers of c; direct non-relativistic limit";
  } else {
    e.note = "positive powers of c in " + std::to_string(where.size()) + " expressions, e.g. " + where.front() +
             "; no direct non-relativistic limit";
  }
  rep.add(e);
  return rep;
}

// ---------------------------------------------------------------------------
// Isomorphisms

namespace {

// iso(3,1) at c = 1 written out in physical names.
AlgebraPtr iso31_reference(const SymbolTablePtr& table) {
  const std::vector<std::string> names = {"H", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3"};
  std::vector<Generator> gens;
  for (const auto& n : names) gens.push_back({n, GenKind::Other, 0, 0, n});
  auto alg = std::make_shared<Algebra>("iso(3,1)", table, gens, false);
  std::map<std::pair<std::string, std::string>, std::string> br;
  auto eps_pair = [](int i, int j) -> std::pair<int, int> {
    int k = 6 - i - j;
    bool even = (i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1);
    return {k, even ? 1 : -1};
  };
  for (int i = 1; i <= 3; ++i) {
    br[{"K" + num(i), "H"}] = "P" + num(i);
    br[{"K" + num(i), "P" + num(i)}] = "H";
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      auto [k, s] = eps_pair(i, j);
      std::string sg = s > 0 ? "" : "-";
      br[{"J" + num(i), "P" + num(j)}] = sg + "P" + num(k);
      br[{"J" + num(i), "K" + num(j)}] = sg + "K" + num(k);
      if (i < j) {
        br[{"J" + num(i), "J" + num(j)}] = sg + "J" + num(k);
        br[{"K" + num(i), "K" + num(j)}] = (s > 0 ? "-" : "") + std::string("J") + num(k);
      }
    }
  }
  for (std::size_t xi = 0; xi < names.size(); ++xi) {
    for (std::size_t yi = 0; yi < xi; ++yi) {
      Letter x = static_cast<Letter>(xi), y = static_cast<Letter>(yi);
      NCElement yx = NCElement::gen(alg, y) * NCElement::gen(alg, x);  // already normal: y < x
      NCElement v(alg);
      if (auto it = br.find({names[xi], names[yi]}); it != br.end()) v = parse_element(alg, it->second);
      if (auto it = br.find({names[yi], names[xi]}); it != br.end()) v = -parse_element(alg, it->second);
      alg->set_rule(x, y, yx + v);
    }
  }
  return alg;
}

}  // namespace

VerificationReport poincare_isomorphism_check(int s) {
  Preset p = preset("poincare_" + num(s));
  KVector k1 = p.k.specialized(Bindings{{c_index(p.k), Coefficient(1)}});
  VerificationReport rep = check_matrix_oracle(build_classical_ck(k1), k1);
  AlgebraPtr phys = to_physical(build_affine(k1), p.basis);
  AlgebraPtr ref = iso31_reference(k1.table());
  rep.merge(check_jacobi(ref));
  const std::string id = phys->id() + " vs iso(3,1)";
  for (std::size_t xi = 0; xi < ref->size(); ++xi) {
    for (std::size_t yi = xi + 1; yi < ref->size(); ++yi) {
      const std::string &nx = ref->gen(static_cast<Letter>(xi)).name, &ny = ref->gen(static_cast<Letter>(yi)).name;
      rep.record("physkit.iso31", id, "[" + nx + "," + ny + "]", [&] {
        NCElement mine = commutator(NCElement::gen(phys, nx), NCElement::gen(phys, ny));
        NCElement theirs = commutator(NCElement::gen(ref, nx), NCElement::gen(ref, ny));
        return (reexpress(mine, ref) - theirs).to_string();
      });
    }
  }
  return rep;
}

VerificationReport kappa_poincare_check(int n) {
  Preset p = preset("kappa_poincare_" + num(n));
  VerificationReport rep = compare_with_direct(p.k);
  HopfPtr h = build_deformed_new(p.k);
  const AlgebraPtr& a = h->algebra();
  Letter t = a->require("P" + num(n));
  rep.record("physkit.kappa_poincare", a->id(), "Delta(P" + num(n) + ") primitive", [&] {
    NCElement pt = NCElement::gen(a, t), one(a, Coefficient(1));
    return (h->coproduct_image(t) - TensorElement::pure({pt, one}) - TensorElement::pure({one, pt})).to_string();
  });
  if (n == 4) {
    KVector k1 = p.k.specialized(Bindings{{c_index(p.k), Coefficient(1)}});
    HopfPtr phys = to_physical(*build_deformed_new(k1), p.basis);
    for (VerificationReport r = compare_tables(*phys, reference_tables("kappa_poincare_4")); auto e : r.entries()) {
      e.check = "physkit.kappa_poincare.bicross_basis";
      rep.add(std::move(e));
    }
  }
  return rep;
}

}  // namespace ckhopf
