#include <algorithm>
#include <sstream>

#include "ckhopf/ckfactory.hpp"

namespace ckhopf {

// ---------------------------------------------------------------------------
// Contraction

int contraction_weight(const Generator& g, int m) { return (g.a < m && m <= g.b) ? 1 : 0; }

namespace {

int word_weight(const Algebra& alg, const Word& w, int m) {
  int r = 0;
  for (Letter x : w) r += contraction_weight(alg.gen(x), m);
  return r;
}

// Keeps the coefficient terms whose ε power is zero. The power of a term is
// `base` plus its λ exponent.
Coefficient contract_coefficient(const Coefficient& c, int base, std::size_t lam, const std::string& where) {
  std::vector<Coefficient::Term> kept;
  for (const auto& t : c.terms()) {
    int p = base + t.first[lam];
    if (p < 0) throw std::domain_error("contraction diverges in " + where);
    if (p == 0) kept.push_back(t);
  }
  if (kept.empty()) return Coefficient();
  return Coefficient(c.table(), std::move(kept));
}

Terms contract_terms(const Algebra& alg, const Terms& terms, int lhs_weight, int m, const std::string& where) {
  std::size_t lam = alg.table()->lambda_index();
  Terms out;
  for (const auto& [mono, c] : terms) {
    Coefficient k = contract_coefficient(c, lhs_weight - word_weight(alg, mono.word, m), lam, where);
    if (!k.is_zero()) out.emplace(mono, k);
  }
  return out;
}

std::string contracted_id(const std::string& id, int m) { return "contract" + std::to_string(m) + "(" + id + ")"; }

}  // namespace

NCElement contract_image(const NCElement& x, int lhs_weight, int m) {
  const auto& alg = x.algebra();
  return NCElement(alg, contract_terms(*alg, x.terms(), lhs_weight, m, "image"));
}

TensorElement contract_image(const TensorElement& t, int lhs_weight, int m) {
  const auto& alg = t.algebra();
  std::size_t lam = alg->table()->lambda_index();
  TensorElement out(alg, t.arity());
  for (const auto& [key, c] : t.terms()) {
    int slots = 0;
    for (const auto& mono : key) slots += word_weight(*alg, mono.word, m);
    Coefficient k = contract_coefficient(c, lhs_weight - slots, lam, "tensor image");
    if (!k.is_zero()) out.add_term(key, k);
  }
  return out;
}

AlgebraPtr contract(const AlgebraPtr& alg, int m) {
  int n = 0;
  for (const auto& g : alg->generators()) n = std::max(n, g.b);
  if (m < 1 || m > n) throw std::out_of_range("contraction index must lie in 1.." + std::to_string(n));
  auto out = std::make_shared<Algebra>(contracted_id(alg->id(), m), alg->table(), alg->generators(), alg->has_E());
  for (std::size_t xi = 0; xi < alg->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    for (std::size_t yi = 0; yi <= xi; ++yi) {
      Letter y = static_cast<Letter>(yi);
      const Terms* r = alg->rule(x, y);
      if (!r) continue;
      std::string where = alg->gen(x).name + "*" + alg->gen(y).name;
      int w = contraction_weight(alg->gen(x), m) + contraction_weight(alg->gen(y), m);
      out->set_rule(x, y, NCElement(out, contract_terms(*alg, *r, w, m, where)));
    }
    if (alg->has_E() && !alg->e_shift(x).empty()) {
      Terms d = contract_terms(*alg, alg->e_shift(x), contraction_weight(alg->gen(x), m), m, alg->gen(x).name + "*E");
      out->set_e_shift(x, NCElement(out, d));
    }
  }
  return out;
}

HopfPtr contract(const Hopf& h, int m) {
  const auto& alg = h.algebra();
  AlgebraPtr ca = contract(alg, m);
  auto out = std::make_shared<Hopf>(ca);
  std::size_t lam = alg->table()->lambda_index();
  for (std::size_t xi = 0; xi < alg->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    const std::string& name = alg->gen(x).name;
    int w = contraction_weight(alg->gen(x), m);
    TensorElement d(ca, 2);
    for (const auto& [key, c] : h.coproduct_image(x).terms()) {
      int slots = 0;
      for (const auto& mono : key) slots += word_weight(*alg, mono.word, m);
      Coefficient k = contract_coefficient(c, w - slots, lam, "Delta(" + name + ")");
      if (!k.is_zero()) d.add_term(key, k);
    }
    out->set_coproduct(x, d);
    out->set_antipode(x, NCElement(ca, contract_terms(*alg, h.antipode_image(x).terms(), w, m, "S(" + name + ")")));
    out->set_counit(x, contract_coefficient(h.counit_image(x), w, lam, "epsilon(" + name + ")"));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural comparison

namespace {

std::string layout_mismatch(const Algebra& a, const Algebra& b) {
  if (a.size() != b.size()) return "generator count " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a.gen(static_cast<Letter>(x)).name != b.gen(static_cast<Letter>(x)).name)
      return "generator " + std::to_string(x) + " named " + a.gen(static_cast<Letter>(x)).name + " vs " +
             b.gen(static_cast<Letter>(x)).name;
  }
  if (a.has_E() != b.has_E()) return "E present in only one algebra";
  return "";
}

}  // namespace

VerificationReport compare_algebras(const Algebra& a, const Algebra& b, const std::string& check) {
  VerificationReport rep;
  std::string pair_id = a.id() + " vs " + b.id();
  std::string layout = layout_mismatch(a, b);
  rep.record(check, pair_id, "layout", [&] { return layout.empty() ? std::string("0") : layout; });
  if (!layout.empty()) return rep;
  // Shallow non-owning handles, used only to give the term maps an algebra.
  AlgebraPtr pa(std::shared_ptr<const Algebra>{}, &a);
  for (std::size_t xi = 0; xi < a.size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    for (std::size_t yi = 0; yi <= xi; ++yi) {
      Letter y = static_cast<Letter>(yi);
      const Terms* ra = a.rule(x, y);
      const Terms* rb = b.rule(x, y);
      if (!ra && !rb) continue;
      rep.record(check, pair_id, a.gen(x).name + "*" + a.gen(y).name, [&]() -> std::string {
        if (!ra || !rb) return "rule present in only one algebra";
        return (NCElement(pa, *ra) - NCElement(pa, *rb)).to_string();
      });
    }
    if (a.has_E()) {
      rep.record(check, pair_id, a.gen(x).name + "*E", [&] {
        return (NCElement(pa, a.e_shift(x)) - NCElement(pa, b.e_shift(x))).to_string();
      });
    }
  }
  return rep;
}

VerificationReport compare_hopf(const Hopf& a, const Hopf& b, const std::string& check) {
  VerificationReport rep = compare_algebras(*a.algebra(), *b.algebra(), check);
  if (!layout_mismatch(*a.algebra(), *b.algebra()).empty()) return rep;
  const auto& aa = a.algebra();
  std::string pair_id = a.id() + " vs " + b.id();
  for (std::size_t xi = 0; xi < aa->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    const std::string& name = aa->gen(x).name;
    rep.record(check, pair_id, "Delta(" + name + ")", [&] {
      return (a.coproduct_image(x) - b.coproduct_image(x).transported(aa)).to_string();
    });
    rep.record(check, pair_id, "S(" + name + ")", [&] {
      return (a.antipode_image(x) - b.antipode_image(x).transported(aa)).to_string();
    });
    rep.record(check, pair_id, "epsilon(" + name + ")", [&] {
      return (a.counit_image(x) - b.counit_image(x)).to_string();
    });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Casimir

NCElement casimir(const AlgebraPtr& alg, const KVector& k, Flavor f) {
  const int N = k.n();
  auto P = [&](int i) { return NCElement::gen(alg, *alg->find_P(i)); };
  NCElement c(alg);
  for (int i = 1; i < N; ++i) {
    NCElement sq = P(i) * P(i);
    if (f == Flavor::New) sq = NCElement::E(alg, 2) * sq;
    c += sq * k.kab(i, N);
  }
  if (f == Flavor::Classical) return c + P(N) * P(N);
  Coefficient lam = Coefficient::symbol(k.table(), "lambda");
  NCElement e = NCElement::E(alg, 2) - NCElement(alg, Coefficient(2)) + NCElement::E(alg, -2);
  return c + e * lam.pow(-2);
}

VerificationReport check_casimir(const AlgebraPtr& alg, const KVector& k, Flavor f) {
  VerificationReport rep;
  NCElement c = casimir(alg, k, f);
  for (std::size_t x = 0; x < alg->size(); ++x) {
    Letter l = static_cast<Letter>(x);
    rep.record("casimir", alg->id(), alg->gen(l).name, [&] {
      return commutator(NCElement::gen(alg, l), c).to_string();
    });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// λ expansion

namespace {

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// P_N^n · word in the classical algebra.
NCElement classical_word(const AlgebraPtr& source, const AlgebraPtr& classical, const Word& w, int pn_power,
                         Letter pn) {
  NCElement r = NCElement::gen(classical, pn, pn_power);
  for (Letter x : w) r = r * NCElement::gen(classical, source->gen(x).name);
  return r;
}

Letter last_P(const AlgebraPtr& classical) {
  int n = 0;
  std::optional<Letter> best;
  for (std::size_t x = 0; x < classical->size(); ++x) {
    const auto& g = classical->gen(static_cast<Letter>(x));
    if (g.kind == GenKind::P && g.b > n) {
      n = g.b;
      best = static_cast<Letter>(x);
    }
  }
  if (!best) throw std::invalid_argument("classical algebra has no P generator");
  return *best;
}

// Coefficient of the λ^order part of c·E^{e1}⊗...⊗E^{ek} with slot i taking
// the n_i-th term of the exponential series.
Coefficient series_coefficient(const Coefficient& c, const std::vector<int>& e, const std::vector<int>& n, int order,
                               const Coefficient& lam, std::size_t lam_idx) {
  int total = 0;
  Rational f(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    total += n[i];
    Rational half_e(e[i], 2);
    half_e.canonicalize();
    Rational p(1);
    for (int j = 0; j < n[i]; ++j) p *= half_e;
    f *= p / factorial(n[i]);
  }
  Coefficient part = c.part_with_exponent(lam_idx, order - total);
  if (part.is_zero()) return Coefficient();
  return part * Coefficient(f) * lam.pow(total);
}

}  // namespace

NCElement lambda_part(const NCElement& x, const AlgebraPtr& classical, int order) {
  const auto& src = x.algebra();
  Letter pn = last_P(classical);
  std::size_t lam_idx = src->table()->lambda_index();
  Coefficient lam = Coefficient::symbol(src->table(), "lambda");
  NCElement r(classical);
  for (const auto& [m, c] : x.terms()) {
    if (c.is_zero()) continue;
    int lo = c.exponent_range(lam_idx).first;
    int max_n = m.e == 0 ? 0 : order - lo;
    for (int n = 0; n <= max_n; ++n) {
      Coefficient k = series_coefficient(c, {m.e}, {n}, order, lam, lam_idx);
      if (!k.is_zero()) r += classical_word(src, classical, m.word, n, pn) * k;
    }
  }
  return r;
}

TensorElement lambda_part(const TensorElement& t, const AlgebraPtr& classical, int order) {
  const auto& src = t.algebra();
  Letter pn = last_P(classical);
  std::size_t lam_idx = src->table()->lambda_index();
  Coefficient lam = Coefficient::symbol(src->table(), "lambda");
  TensorElement r(classical, t.arity());
  for (const auto& [key, c] : t.terms()) {
    int lo = c.exponent_range(lam_idx).first;
    int budget = std::max(0, order - lo);
    std::vector<int> e, n(key.size(), 0);
    for (const auto& m : key) e.push_back(m.e);
    // enumerate n_i >= 0 with Σ n_i <= budget, n_i = 0 where e_i = 0
    while (true) {
      Coefficient k = series_coefficient(c, e, n, order, lam, lam_idx);
      if (!k.is_zero()) {
        std::vector<NCElement> f;
        for (std::size_t i = 0; i < key.size(); ++i) f.push_back(classical_word(src, classical, key[i].word, n[i], pn));
        r += TensorElement::pure(f) * k;
      }
      std::size_t i = 0;
      for (; i < n.size(); ++i) {
        if (e[i] == 0) continue;
        int sum = 0;
        for (int v : n) sum += v;
        if (sum < budget) {
          ++n[i];
          break;
        }
        n[i] = 0;
      }
      if (i == n.size()) break;
    }
  }
  return r;
}

TensorElement rmatrix(const AlgebraPtr& classical, const KVector& k) {
  const int N = k.n();
  Coefficient lam = Coefficient::symbol(k.table(), "lambda");
  TensorElement r(classical, 2);
  for (int s = 1; s < N; ++s) {
    NCElement J = NCElement::gen(classical, *classical->find_J(s, N));
    NCElement P = NCElement::gen(classical, *classical->find_P(s));
    r += (TensorElement::pure({J, P}) - TensorElement::pure({P, J})) * lam;
  }
  return r;
}

VerificationReport check_rmatrix(const Hopf& h, const KVector& k) {
  VerificationReport rep;
  const auto& alg = h.algebra();
  AlgebraPtr cl = build_affine(k);
  TensorElement r = rmatrix(cl, k);
  NCElement one(cl, Coefficient(1));
  for (std::size_t xi = 0; xi < alg->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    const std::string& name = alg->gen(x).name;
    TensorElement d = h.coproduct(NCElement::gen(alg, x));
    TensorElement anti = d - flip(d);
    rep.record("rmatrix.order0", alg->id(), name, [&] { return lambda_part(anti, cl, 0).to_string(); });
    rep.record("rmatrix.order1", alg->id(), name, [&] {
      NCElement x0 = NCElement::gen(cl, name);
      TensorElement prim = TensorElement::pure({x0, one}) + TensorElement::pure({one, x0});
      return (lambda_part(anti, cl, 1) - (prim * r - r * prim)).to_string();
    });
  }
  return rep;
}

VerificationReport check_classical_limit(const Hopf& h, const KVector& k) {
  VerificationReport rep;
  const auto& alg = h.algebra();
  AlgebraPtr cl = build_affine(k);
  for (std::size_t xi = 0; xi < alg->size(); ++xi) {
    for (std::size_t yi = 0; yi < xi; ++yi) {
      Letter x = static_cast<Letter>(xi), y = static_cast<Letter>(yi);
      rep.record("classical_limit", alg->id(), alg->gen(x).name + "," + alg->gen(y).name, [&] {
        NCElement def = commutator(NCElement::gen(alg, x), NCElement::gen(alg, y));
        NCElement cls = commutator(NCElement::gen(cl, x), NCElement::gen(cl, y));
        return (lambda_part(def, cl, 0) - cls).to_string();
      });
    }
    Letter x = static_cast<Letter>(xi);
    rep.record("classical_limit", alg->id(), "Delta(" + alg->gen(x).name + ")", [&] {
      NCElement x0 = NCElement::gen(cl, x), one(cl, Coefficient(1));
      TensorElement d = lambda_part(h.coproduct(NCElement::gen(alg, x)), cl, 0);
      return (d - TensorElement::pure({x0, one}) - TensorElement::pure({one, x0})).to_string();
    });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Dimensions

namespace {

DimVector zero_dim(int n) { return DimVector(n, Rational(0)); }

DimVector& operator+=(DimVector& a, const DimVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

DimVector scaled(const DimVector& a, int k) {
  DimVector r = a;
  for (auto& v : r) v *= k;
  return r;
}

bool is_zero_dim(const DimVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

struct DimContext {
  const Algebra& alg;
  const DimensionAssignment& d;
  std::vector<DimVector> gen_dims;
  std::vector<DimVector> sym_dims;
  DimVector e_dim;

  DimContext(const Algebra& a, const DimensionAssignment& da) : alg(a), d(da) {
    for (const auto& g : alg.generators()) {
      auto it = d.generators.find(g.name);
      if (it == d.generators.end()) throw std::invalid_argument("no dimension for generator " + g.name);
      gen_dims.push_back(it->second);
    }
    const auto& t = *alg.table();
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto it = d.symbols.find(t.entry(i).name);
      sym_dims.push_back(it == d.symbols.end() ? zero_dim(d.n_base) : it->second);
    }
    e_dim = zero_dim(d.n_base);
    if (alg.has_E()) {
      e_dim += sym_dims[t.lambda_index()];
      int n = 0;
      std::optional<Letter> pn;
      for (std::size_t x = 0; x < alg.size(); ++x) {
        const auto& g = alg.gen(static_cast<Letter>(x));
        if (g.kind == GenKind::P && g.b > n) {
          n = g.b;
          pn = static_cast<Letter>(x);
        }
      }
      if (pn) e_dim += gen_dims[*pn];
    }
  }

  DimVector word(const Word& w) const {
    DimVector r = zero_dim(d.n_base);
    for (Letter x : w) r += gen_dims[x];
    return r;
  }

  DimVector coeff_term(const Exponents& e) const {
    DimVector r = zero_dim(d.n_base);
    for (std::size_t i = 0; i < sym_dims.size(); ++i) {
      if (e[i] != 0) r += scaled(sym_dims[i], e[i]);
    }
    return r;
  }

  bool e_ok(int e) const { return e == 0 || is_zero_dim(e_dim); }

  // Offending terms, or "0".
  std::string check_terms(const DimVector& lhs, const Terms& terms) const {
    std::string bad;
    for (const auto& [m, c] : terms) {
      for (const auto& t : c.terms()) {
        DimVector v = word(m.word);
        v += coeff_term(t.first);
        if (v != lhs || !e_ok(m.e)) {
          if (!bad.empty()) bad += "; ";
          bad += alg.monomial_text(m) + " has " + (e_ok(m.e) ? dim_text(v) : "inhomogeneous E");
        }
      }
    }
    return bad.empty() ? "0" : bad + " (expected " + dim_text(lhs) + ")";
  }

  std::string check_tensor(const DimVector& lhs, const TensorElement& t) const {
    std::string bad;
    for (const auto& [key, c] : t.terms()) {
      DimVector v = zero_dim(d.n_base);
      bool e_fine = true;
      for (const auto& m : key) {
        v += word(m.word);
        e_fine = e_fine && e_ok(m.e);
      }
      for (const auto& term : c.terms()) {
        DimVector w = v;
        w += coeff_term(term.first);
        if (w != lhs || !e_fine) {
          if (!bad.empty()) bad += "; ";
          std::string txt;
          for (std::size_t i = 0; i < key.size(); ++i) txt += (i ? " (x) " : "") + alg.monomial_text(key[i]);
          bad += txt + " has " + (e_fine ? dim_text(w) : "inhomogeneous E");
        }
      }
    }
    return bad.empty() ? "0" : bad + " (expected " + dim_text(lhs) + ")";
  }
};

}  // namespace

std::string dim_text(const DimVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += "D" + std::to_string(i + 1);
    if (v[i] != 1) s += "^" + v[i].get_str();
  }
  return s.empty() ? "1" : s;
}

DimensionAssignment dimension_assignment(const AlgebraPtr& alg, const KVector& k, DimScheme scheme) {
  DimensionAssignment d;
  const int N = k.n();
  d.n_base = N;
  auto carries = [&](int l) { return scheme == DimScheme::Uniform || k.kappa(l).is_zero(); };
  DimVector pn = zero_dim(N);
  for (const auto& g : alg->generators()) {
    DimVector v = zero_dim(N);
    for (int l = g.a + 1; l <= g.b; ++l) {
      if (carries(l)) v[l - 1] = -1;
    }
    d.generators[g.name] = v;
    if (g.kind == GenKind::P && g.b == N) pn = v;
  }
  const auto& t = *k.table();
  for (std::size_t i = 0; i < t.size(); ++i) d.symbols[t.entry(i).name] = zero_dim(N);
  if (scheme == DimScheme::Uniform) {
    for (int l = 1; l <= N; ++l) {
      DimVector v = zero_dim(N);
      v[l - 1] = -2;
      d.symbols["k" + std::to_string(l)] = v;
    }
  }
  d.symbols["lambda"] = scaled(pn, -1);
  return d;
}

VerificationReport dimension_check(const AlgebraPtr& alg, const DimensionAssignment& d) {
  VerificationReport rep;
  DimContext ctx(*alg, d);
  for (std::size_t xi = 0; xi < alg->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    for (std::size_t yi = 0; yi <= xi; ++yi) {
      Letter y = static_cast<Letter>(yi);
      const Terms* r = alg->rule(x, y);
      if (!r) continue;
      DimVector lhs = ctx.gen_dims[x];
      lhs += ctx.gen_dims[y];
      rep.record("dimension.relation", alg->id(), alg->gen(x).name + "*" + alg->gen(y).name,
                 [&] { return ctx.check_terms(lhs, *r); });
    }
    if (alg->has_E() && !alg->e_shift(x).empty()) {
      rep.record("dimension.relation", alg->id(), alg->gen(x).name + "*E",
                 [&] { return ctx.check_terms(ctx.gen_dims[x], alg->e_shift(x)); });
    }
  }
  return rep;
}

VerificationReport dimension_check(const Hopf& h, const DimensionAssignment& d) {
  const auto& alg = h.algebra();
  VerificationReport rep = dimension_check(alg, d);
  DimContext ctx(*alg, d);
  for (std::size_t xi = 0; xi < alg->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    const std::string& name = alg->gen(x).name;
    rep.record("dimension.coproduct", alg->id(), name,
               [&] { return ctx.check_tensor(ctx.gen_dims[x], h.coproduct_image(x)); });
    rep.record("dimension.antipode", alg->id(), name,
               [&] { return ctx.check_terms(ctx.gen_dims[x], h.antipode_image(x).terms()); });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Matrix oracle

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix ck_matrix(const KVector& k, int a, int b) {
  int n = k.n() + 1;
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  m[b][a] = 1;
  m[a][b] = -k.kab(a, b).constant_value();
  return m;
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
  std::size_t n = x.size();
  Matrix r(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (x[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][l] * y[l][j];
    }
  return r;
}

}  // namespace

VerificationReport check_matrix_oracle(const AlgebraPtr& alg, const KVector& k) {
  VerificationReport rep;
  for (int l = 1; l <= k.n(); ++l) {
    if (!k.kappa(l).is_constant()) throw std::invalid_argument("matrix oracle needs rational kappa values");
  }
  const std::size_t size = static_cast<std::size_t>(k.n() + 1);
  for (std::size_t xi = 0; xi < alg->size(); ++xi) {
    for (std::size_t yi = 0; yi < xi; ++yi) {
      const auto& gx = alg->gen(static_cast<Letter>(xi));
      const auto& gy = alg->gen(static_cast<Letter>(yi));
      rep.record("matrix_oracle", alg->id(), gx.name + "," + gy.name, [&]() -> std::string {
        Matrix mx = ck_matrix(k, gx.a, gx.b), my = ck_matrix(k, gy.a, gy.b);
        Matrix xy = mat_mul(mx, my), yx = mat_mul(my, mx);
        Matrix c(size, std::vector<Rational>(size));
        for (std::size_t i = 0; i < size; ++i)
          for (std::size_t j = 0; j < size; ++j) c[i][j] = xy[i][j] - yx[i][j];
        // read off the J_pq coefficient from the (q,p) entry and rebuild
        NCElement oracle(alg);
        Matrix rebuilt(size, std::vector<Rational>(size, Rational(0)));
        for (std::size_t zi = 0; zi < alg->size(); ++zi) {
          const auto& gz = alg->gen(static_cast<Letter>(zi));
          Rational coef = c[gz.b][gz.a];
          if (coef == 0) continue;
          oracle += NCElement::gen(alg, static_cast<Letter>(zi)) * Coefficient(coef);
          Matrix mz = ck_matrix(k, gz.a, gz.b);
          for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) rebuilt[i][j] += coef * mz[i][j];
        }
        if (rebuilt != c) return "matrix commutator outside the generator span";
        NCElement engine = commutator(NCElement::gen(alg, static_cast<Letter>(xi)), NCElement::gen(alg, static_cast<Letter>(yi)));
        return (engine - oracle).to_string();
      });
    }
  }
  return rep;
}

}  // namespace ckhopf
