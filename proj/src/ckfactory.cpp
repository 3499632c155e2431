#include "ckhopf/ckfactory.hpp"

#include <algorithm>
#include <sstream>

namespace ckhopf {

// ---------------------------------------------------------------------------
// KVector

KVector::KVector(int n, std::vector<Coefficient> kappas) : n_(n), table_(SymbolTable::standard(n)), k_(std::move(kappas)) {
  if (n < 1) throw std::invalid_argument("N must be at least 1");
  if (static_cast<int>(k_.size()) != n) throw std::invalid_argument("expected " + std::to_string(n) + " kappa values");
  for (auto& c : k_) {
    if (c.table() && !(*c.table() == *table_)) throw SymbolMismatch("kappa value over a foreign symbol table");
  }
}

KVector KVector::symbolic(int n, bool affine) {
  auto t = SymbolTable::standard(n);
  std::vector<Coefficient> k;
  for (int l = 1; l <= n; ++l) {
    k.push_back(l == 1 && affine ? Coefficient() : Coefficient::symbol(t, "k" + std::to_string(l)));
  }
  return KVector(n, std::move(k));
}

KVector KVector::parse(int n, const std::string& csv) {
  auto t = SymbolTable::standard(n);
  std::vector<std::string> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  int offset;
  if (static_cast<int>(parts.size()) == n - 1) {
    offset = 2;
  } else if (static_cast<int>(parts.size()) == n) {
    offset = 1;
  } else {
    throw std::invalid_argument("kappa list needs " + std::to_string(n - 1) + " or " + std::to_string(n) +
                                " entries, got " + std::to_string(parts.size()));
  }
  std::vector<Coefficient> k(n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int l = static_cast<int>(i) + offset;
    if (parts[i] == "s") {
      k[l - 1] = Coefficient::symbol(t, "k" + std::to_string(l));
    } else {
      k[l - 1] = parse_coefficient(t, parts[i]);
    }
  }
  return KVector(n, std::move(k));
}

Coefficient KVector::kab(int a, int b) const {
  if (a < 0 || b > n_ || a > b) throw std::out_of_range("kappa_ab index");
  Coefficient r(1);
  for (int l = a + 1; l <= b; ++l) r *= kappa(l);
  return r;
}

KVector KVector::with(int l, const Coefficient& value) const {
  KVector r = *this;
  r.k_.at(l - 1) = value;
  return r;
}

KVector KVector::specialized(const Bindings& b) const {
  KVector r = *this;
  for (auto& c : r.k_) c = specialize(c, b);
  return r;
}

std::string KVector::label() const {
  std::string s = "(";
  for (int l = 1; l <= n_; ++l) s += (l > 1 ? "," : "") + kappa(l).to_string();
  return s + ")";
}

std::string KVector::affine_label() const {
  std::string s = "(";
  for (int l = 2; l <= n_; ++l) s += (l > 2 ? "," : "") + kappa(l).to_string();
  return s + ")";
}

VerificationReport check_kappa_coherence(const KVector& k) {
  VerificationReport rep;
  for (int a = 0; a <= k.n(); ++a) {
    for (int b = a + 1; b <= k.n(); ++b) {
      for (int c = b + 1; c <= k.n(); ++c) {
        rep.record("kappa.coherence", k.label(), std::to_string(a) + std::to_string(b) + std::to_string(c),
                   [&] { return (k.kab(a, b) * k.kab(b, c) - k.kab(a, c)).to_string(); });
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Brackets

std::vector<std::pair<Coefficient, std::pair<int, int>>> ck_bracket(const KVector& k, int a, int b, int c, int d) {
  using Pair = std::pair<int, int>;
  Pair x{a, b}, y{c, d};
  if (x == y) return {};
  std::vector<int> idx{a, b, c, d};
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.size() != 3) return {};  // disjoint index pairs commute
  int i = idx[0], j = idx[1], l = idx[2];
  Pair A{i, j}, B{i, l}, C{j, l};
  // [A,B] = κ_ij C, [A,C] = -B, [B,C] = κ_jl A
  auto base = [&](const Pair& p, const Pair& q) -> std::vector<std::pair<Coefficient, Pair>> {
    if (p == A && q == B) return {{k.kab(i, j), C}};
    if (p == A && q == C) return {{Coefficient(-1), B}};
    if (p == B && q == C) return {{k.kab(j, l), A}};
    return {};
  };
  auto r = base(x, y);
  if (r.empty()) {
    r = base(y, x);
    for (auto& t : r) t.first = -t.first;
  }
  std::erase_if(r, [](const auto& t) { return t.first.is_zero(); });
  return r;
}

namespace {

std::string gen_name(int a, int b, bool affine_names) {
  if (affine_names && a == 0) return "P" + std::to_string(b);
  return "J" + std::to_string(a) + std::to_string(b);
}

std::vector<Generator> ck_generators(int n, bool affine_names, bool script) {
  std::vector<Generator> gens;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      Generator g;
      g.name = gen_name(a, b, affine_names);
      if (affine_names && a == 0) {
        g.kind = GenKind::P;
        g.latex = std::string(script ? "\\mathcal{P}" : "P") + "_{" + std::to_string(b) + "}";
      } else {
        g.kind = GenKind::J;
        g.latex = std::string(script ? "\\mathcal{J}" : "J") + "_{" + std::to_string(a) + std::to_string(b) + "}";
      }
      g.a = a;
      g.b = b;
      gens.push_back(g);
    }
  }
  return gens;
}

Letter letter_of(const Algebra& alg, int a, int b) {
  auto x = a == 0 ? (alg.find_P(b) ? alg.find_P(b) : alg.find_J(0, b)) : alg.find_J(a, b);
  if (!x) throw std::logic_error("no generator for (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return *x;
}

NCElement bracket_element(const AlgebraPtr& alg, const KVector& k, Letter x, Letter y) {
  const auto& gx = alg->gen(x);
  const auto& gy = alg->gen(y);
  NCElement r(alg);
  for (const auto& [c, pq] : ck_bracket(k, gx.a, gx.b, gy.a, gy.b)) {
    r += NCElement::gen(alg, letter_of(*alg, pq.first, pq.second)) * c;
  }
  return r;
}

// Sets x·y -> y·x + [x,y] for every pair from the classical CK table.
void set_classical_rules(const std::shared_ptr<Algebra>& alg, const KVector& k) {
  for (std::size_t x = 0; x < alg->size(); ++x) {
    for (std::size_t y = 0; y < x; ++y) {
      auto lx = static_cast<Letter>(x), ly = static_cast<Letter>(y);
      NCElement img = NCElement::monomial(alg, Monomial{0, {ly, lx}}) + bracket_element(alg, k, lx, ly);
      alg->set_rule(lx, ly, img);
    }
  }
}

struct Builder {
  std::shared_ptr<Algebra> alg;
  const KVector& k;
  int n;
  Coefficient lam;

  Builder(std::shared_ptr<Algebra> a, const KVector& kv)
      : alg(std::move(a)), k(kv), n(kv.n()), lam(Coefficient::symbol(kv.table(), "lambda")) {}

  NCElement P(int i) const { return NCElement::gen(alg, *alg->find_P(i)); }
  NCElement J(int a, int b) const { return NCElement::gen(alg, *alg->find_J(a, b)); }
  NCElement E(int e) const { return NCElement::E(alg, e); }
  NCElement one() const { return NCElement(alg, Coefficient(1)); }
  NCElement scalar(const Coefficient& c) const { return NCElement(alg, c); }
  TensorElement t(const NCElement& a, const NCElement& b) const { return TensorElement::pure({a, b}); }
  Letter LP(int i) const { return *alg->find_P(i); }
  Letter LJ(int a, int b) const { return *alg->find_J(a, b); }
};

void require_affine(const KVector& k) {
  if (!k.affine()) throw std::invalid_argument("affine family requires kappa1 = 0, got " + k.label());
  if (k.n() < 2) throw std::invalid_argument("deformed family requires N >= 2");
}

std::string deformed_id(const KVector& k, const char* basis) {
  return "U_lambda(iso" + k.affine_label() + ")[" + basis + "]";
}

// Rules shared by both deformed bases apart from [J_iN, P_j] and [J_iN, J_jN].
void set_deformed_common(Builder& b) {
  set_classical_rules(b.alg, b.k);
  for (int i = 1; i < b.n; ++i) b.alg->set_e_shift(b.LJ(i, b.n), b.P(i) * (-Coefficient(Rational(1, 2)) * b.lam * b.k.kab(i, b.n)));
}

}  // namespace

AlgebraPtr build_classical_ck(const KVector& k) {
  auto alg = std::make_shared<Algebra>("so" + k.label(), k.table(), ck_generators(k.n(), false, false), false);
  set_classical_rules(alg, k);
  return alg;
}

AlgebraPtr build_affine(const KVector& k) {
  if (!k.affine()) throw std::invalid_argument("affine family requires kappa1 = 0, got " + k.label());
  auto alg = std::make_shared<Algebra>("iso" + k.affine_label(), k.table(), ck_generators(k.n(), true, false), false);
  set_classical_rules(alg, k);
  return alg;
}

HopfPtr build_deformed_new(const KVector& k) {
  require_affine(k);
  auto alg = std::make_shared<Algebra>(deformed_id(k, "new"), k.table(), ck_generators(k.n(), true, false), true);
  Builder b(alg, k);
  const int N = b.n;
  const Coefficient half(Rational(1, 2));
  set_deformed_common(b);

  // [J_iN, P_j] = δ_ij((1 - E^-4)/(2λ) - (λ/2) Σ_s κ_sN P_s^2) + λ κ_iN P_i P_j
  NCElement pn_sq(alg);
  for (int s = 1; s < N; ++s) pn_sq += b.P(s) * b.P(s) * k.kab(s, N);
  for (int i = 1; i < N; ++i) {
    for (int j = 1; j < N; ++j) {
      NCElement br = b.P(i) * b.P(j) * (b.lam * k.kab(i, N));
      if (i == j) br += (b.one() - b.E(-4)) * (half * b.lam.inverse()) - pn_sq * (half * b.lam);
      alg->set_rule(b.LJ(i, N), b.LP(j), b.P(j) * b.J(i, N) + br);
    }
  }

  auto h = std::make_shared<Hopf>(alg);
  NCElement E2inv = b.E(-2), E2 = b.E(2);
  for (int i = 1; i <= N; ++i) {
    h->set_counit(b.LP(i), Coefficient());
    if (i == N) {
      h->set_coproduct(b.LP(N), b.t(b.one(), b.P(N)) + b.t(b.P(N), b.one()));
      h->set_antipode(b.LP(N), -b.P(N));
    } else {
      h->set_coproduct(b.LP(i), b.t(E2inv, b.P(i)) + b.t(b.P(i), b.one()));
      h->set_antipode(b.LP(i), -(E2 * b.P(i)));
    }
  }
  for (int i = 1; i < N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      Letter x = b.LJ(i, j);
      h->set_counit(x, Coefficient());
      if (j < N) {
        h->set_coproduct(x, b.t(b.one(), b.J(i, j)) + b.t(b.J(i, j), b.one()));
        h->set_antipode(x, -b.J(i, j));
        continue;
      }
      TensorElement d = b.t(E2inv, b.J(i, N)) + b.t(b.J(i, N), b.one());
      NCElement s = -(E2 * b.J(i, N));
      for (int r = 1; r < i; ++r) {
        d += b.t(b.P(r), b.J(r, i)) * (b.lam * k.kab(i, N));
        s += E2 * b.P(r) * b.J(r, i) * (b.lam * k.kab(i, N));
      }
      for (int r = i + 1; r < N; ++r) {
        d -= b.t(b.P(r), b.J(i, r)) * (b.lam * k.kab(r, N));
        s -= E2 * b.P(r) * b.J(i, r) * (b.lam * k.kab(r, N));
      }
      h->set_coproduct(x, d);
      h->set_antipode(x, s);
    }
  }
  return h;
}

namespace {

// Old basis without the [J_iN, J_jN] rules, which are derived afterwards.
std::shared_ptr<Hopf> build_old_phase1(const KVector& k, std::shared_ptr<Algebra>& alg_out) {
  require_affine(k);
  auto alg = std::make_shared<Algebra>(deformed_id(k, "old"), k.table(), ck_generators(k.n(), true, true), true);
  alg_out = alg;
  Builder b(alg, k);
  const int N = b.n;
  const Coefficient half(Rational(1, 2));
  set_deformed_common(b);
  // [J_iN, P_j] = δ_ij sinh(λP_N)/λ = δ_ij (E^2 - E^-2)/(2λ)
  for (int i = 1; i < N; ++i) {
    for (int j = 1; j < N; ++j) {
      NCElement img = b.P(j) * b.J(i, N);
      if (i == j) img += (b.E(2) - b.E(-2)) * (half * b.lam.inverse());
      alg->set_rule(b.LJ(i, N), b.LP(j), img);
    }
  }

  auto h = std::make_shared<Hopf>(alg);
  NCElement Einv = b.E(-1), E1 = b.E(1);
  for (int i = 1; i <= N; ++i) {
    h->set_counit(b.LP(i), Coefficient());
    h->set_antipode(b.LP(i), -b.P(i));
    if (i == N) {
      h->set_coproduct(b.LP(N), b.t(b.one(), b.P(N)) + b.t(b.P(N), b.one()));
    } else {
      h->set_coproduct(b.LP(i), b.t(Einv, b.P(i)) + b.t(b.P(i), E1));
    }
  }
  Coefficient hl = half * b.lam;
  for (int i = 1; i < N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      Letter x = b.LJ(i, j);
      h->set_counit(x, Coefficient());
      if (j < N) {
        h->set_coproduct(x, b.t(b.one(), b.J(i, j)) + b.t(b.J(i, j), b.one()));
        h->set_antipode(x, -b.J(i, j));
        continue;
      }
      TensorElement d = b.t(Einv, b.J(i, N)) + b.t(b.J(i, N), E1);
      for (int s = 1; s < i; ++s) {
        d -= b.t(b.J(s, i) * Einv, b.P(s)) * (hl * k.kab(i, N));
        d += b.t(b.P(s), E1 * b.J(s, i)) * (hl * k.kab(i, N));
      }
      for (int s = i + 1; s < N; ++s) {
        d += b.t(b.J(i, s) * Einv, b.P(s)) * (hl * k.kab(s, N));
        d -= b.t(b.P(s), E1 * b.J(i, s)) * (hl * k.kab(s, N));
      }
      h->set_coproduct(x, d);
      h->set_antipode(x, -b.J(i, N) - b.P(i) * (k.kab(i, N) * Coefficient(N - 1) * hl));
    }
  }
  return h;
}

int jn_weight(const Algebra& alg, int n, const Monomial& m) {
  int w = 0;
  for (Letter x : m.word) {
    const auto& g = alg.gen(x);
    w += (g.kind == GenKind::J && g.b == n) ? 3 : 1;
  }
  return w;
}

struct BasisData {
  std::shared_ptr<Algebra> old_alg;
  std::shared_ptr<Hopf> old_h;
  HopfPtr new_h;
  AlgebraMorphism psi;  // new -> old
  AlgebraMorphism phi;  // old -> new
};

NCElement eliminate(const AlgebraMorphism& phi, const AlgebraPtr& old_alg, int n, NCElement x) {
  const auto& new_alg = phi.target();
  NCElement y(old_alg);
  std::size_t guard = 0;
  while (!x.is_zero()) {
    if (++guard > 100000) throw std::runtime_error("basis elimination did not terminate");
    // leading term: highest weight, then highest in degree-lex order
    auto lead = x.terms().begin();
    int lead_w = -1;
    for (auto it = x.terms().begin(); it != x.terms().end(); ++it) {
      int w = jn_weight(*new_alg, n, it->first);
      if (w > lead_w || (w == lead_w && MonomialLess{}(lead->first, it->first))) {
        lead = it;
        lead_w = w;
      }
    }
    Monomial m = lead->first;
    Coefficient c = lead->second;
    int shift = 0;
    for (Letter l : m.word) {
      const auto& g = new_alg->gen(l);
      if ((g.kind == GenKind::P && g.b < n) || (g.kind == GenKind::J && g.b == n)) ++shift;
    }
    Monomial old_m{m.e - shift, m.word};
    NCElement img = phi.apply(old_m);
    if (img.coefficient_of(m) != Coefficient(1)) throw std::logic_error("basis elimination: unexpected leading term");
    for (const auto& [mm, cc] : img.terms()) {
      if (!(mm == m) && jn_weight(*new_alg, n, mm) >= lead_w)
        throw std::logic_error("basis elimination: non-triangular term " + new_alg->monomial_text(mm));
    }
    y.add_term(old_m, c);
    x -= img * c;
  }
  return y;
}

BasisData make_basis_data(const KVector& k) {
  BasisData d;
  d.old_h = build_old_phase1(k, d.old_alg);
  d.new_h = build_deformed_new(k);
  const int N = k.n();
  AlgebraPtr oldp = d.old_alg, newp = d.new_h->algebra();
  Builder ob(d.old_alg, k);
  const Coefficient quarter_lam = Coefficient(Rational(1, 4)) * ob.lam;
  const Coefficient half(Rational(1, 2));

  // new in old
  std::vector<NCElement> psi_img(oldp->size());
  for (int i = 1; i <= N; ++i) psi_img[ob.LP(i)] = i == N ? ob.P(N) : ob.E(-1) * ob.P(i);
  for (int i = 1; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) psi_img[ob.LJ(i, j)] = ob.J(i, j);
  }
  NCElement Einv = ob.E(-1);
  for (int i = 1; i < N; ++i) {
    NCElement x = (ob.J(i, N) * Einv + Einv * ob.J(i, N)) * half;
    for (int s = 1; s < i; ++s)
      x += (ob.J(s, i) * ob.P(s) + ob.P(s) * ob.J(s, i)) * Einv * (quarter_lam * k.kab(i, N));
    for (int s = i + 1; s < N; ++s)
      x -= (ob.J(i, s) * ob.P(s) + ob.P(s) * ob.J(i, s)) * Einv * (quarter_lam * k.kab(s, N));
    psi_img[ob.LJ(i, N)] = x;
  }
  d.psi = AlgebraMorphism(newp, oldp, psi_img);

  // old in new: triangular inversion
  Builder nb(std::const_pointer_cast<Algebra>(newp), k);
  std::vector<NCElement> phi_img(oldp->size(), NCElement(newp));
  for (int i = 1; i <= N; ++i) phi_img[ob.LP(i)] = i == N ? nb.P(N) : nb.E(1) * nb.P(i);
  for (int i = 1; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) phi_img[ob.LJ(i, j)] = nb.J(i, j);
  }
  AlgebraMorphism partial(oldp, newp, phi_img);
  for (int i = 1; i < N; ++i) {
    NCElement rest = d.psi(nb.J(i, N)) - Einv * ob.J(i, N);
    for (const auto& [m, c] : rest.terms()) {
      for (Letter l : m.word) {
        const auto& g = oldp->gen(l);
        if (g.kind == GenKind::J && g.b == N) throw std::logic_error("basis change is not triangular");
      }
    }
    phi_img[ob.LJ(i, N)] = nb.E(1) * (nb.J(i, N) - partial(rest));
  }
  d.phi = AlgebraMorphism(oldp, newp, phi_img);

  // derive [J_iN, J_jN] in the old basis
  for (int i = 1; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      NCElement br = commutator(phi_img[ob.LJ(i, N)], phi_img[ob.LJ(j, N)]);
      NCElement old_br = eliminate(d.phi, oldp, N, br);
      d.old_alg->set_rule(ob.LJ(j, N), ob.LJ(i, N), ob.J(i, N) * ob.J(j, N) - old_br);
    }
  }
  return d;
}

}  // namespace

HopfPtr build_deformed_old(const KVector& k) { return make_basis_data(k).old_h; }

NCElement BasisChange::to_old(const NCElement& x) const {
  int n = 0;
  for (const auto& g : old_basis->algebra()->generators()) n = std::max(n, g.b);
  return eliminate(old_in_new, old_basis->algebra(), n, x);
}

BasisChange make_basis_change(const KVector& k) {
  BasisData d = make_basis_data(k);
  return BasisChange{d.old_h, d.new_h, d.psi, d.phi};
}

NCElement w_symbol(const AlgebraPtr& alg, const KVector& k, int i, int j, int l) {
  auto P = [&](int a) { return NCElement::gen(alg, *alg->find_P(a)); };
  auto J = [&](int a, int b) { return NCElement::gen(alg, *alg->find_J(a, b)); };
  return P(i) * J(j, l) * k.kab(i, j) - P(j) * J(i, l) + P(l) * J(i, j);
}

NCElement old_basis_jj_bracket(const AlgebraPtr& alg, const KVector& k, int i, int j) {
  const int N = k.n();
  auto P = [&](int a) { return NCElement::gen(alg, *alg->find_P(a)); };
  auto J = [&](int a, int b) { return NCElement::gen(alg, *alg->find_J(a, b)); };
  Coefficient lam = Coefficient::symbol(k.table(), "lambda");
  NCElement cosh = (NCElement::E(alg, 2) + NCElement::E(alg, -2)) * Coefficient(Rational(1, 2));
  NCElement sum(alg);
  for (int s = 1; s < i; ++s) sum += P(s) * w_symbol(alg, k, s, i, j) * k.kab(i, N);
  for (int s = i + 1; s < j; ++s) sum -= P(s) * w_symbol(alg, k, i, s, j) * k.kab(s, N);
  for (int s = j + 1; s < N; ++s) sum += P(s) * w_symbol(alg, k, i, j, s) * k.kab(s, N);
  return (J(i, j) * cosh + sum * (Coefficient(Rational(1, 4)) * lam * lam)) * k.kab(j, N);
}

VerificationReport check_compact_antipode(const Hopf& h, const KVector& k) {
  VerificationReport rep;
  const auto& alg = h.algebra();
  int n1 = k.n() - 1;
  for (std::size_t x = 0; x < alg->size(); ++x) {
    NCElement g = NCElement::gen(alg, static_cast<Letter>(x));
    rep.record("antipode.compact", alg->id(), alg->gen(static_cast<Letter>(x)).name, [&] {
      NCElement conj = -(NCElement::E(alg, n1) * g * NCElement::E(alg, -n1));
      return (h.antipode(g) - conj).to_string();
    });
  }
  return rep;
}

namespace {

SlotMap morphism_slot(const AlgebraMorphism& f) {
  SlotMap m;
  m.kind = SlotMap::Kind::Morphism;
  m.name = "basis";
  m.out_arity = 1;
  m.target = f.target();
  m.image = [f](const Monomial& mono) { return TensorElement::pure({f.apply(mono)}); };
  return m;
}

}  // namespace

VerificationReport check_basis_change(const BasisChange& bc, const KVector& k) {
  VerificationReport rep;
  const Hopf& oh = *bc.old_basis;
  const Hopf& nh = *bc.new_basis;
  AlgebraPtr oa = oh.algebra(), na = nh.algebra();
  const auto& psi = bc.new_in_old;
  const auto& phi = bc.old_in_new;
  std::string id = "basis" + k.affine_label();

  auto items = [](const AlgebraPtr& a) {
    std::vector<std::pair<std::string, NCElement>> v{{"E", NCElement::E(a, 1)}, {"E^-1", NCElement::E(a, -1)}};
    for (std::size_t x = 0; x < a->size(); ++x)
      v.emplace_back(a->gen(static_cast<Letter>(x)).name, NCElement::gen(a, static_cast<Letter>(x)));
    return v;
  };

  for (const auto& [name, g] : items(na)) {
    rep.record("basis.roundtrip", id, "new " + name, [&] { return (phi(psi(g)) - g).to_string(); });
  }
  for (const auto& [name, g] : items(oa)) {
    rep.record("basis.roundtrip", id, "old " + name, [&] { return (psi(phi(g)) - g).to_string(); });
  }

  // relations transported both ways
  auto transport_rules = [&](const AlgebraPtr& src, const AlgebraMorphism& f, const std::string& dir) {
    for (std::size_t x = 0; x < src->size(); ++x) {
      Letter lx = static_cast<Letter>(x);
      for (std::size_t y = 0; y <= x; ++y) {
        Letter ly = static_cast<Letter>(y);
        const Terms* r = src->rule(lx, ly);
        if (!r) continue;
        rep.record("basis.relations", id, dir + " " + src->gen(lx).name + "*" + src->gen(ly).name, [&] {
          return (f.image(lx) * f.image(ly) - f(NCElement(src, *r))).to_string();
        });
      }
      rep.record("basis.relations", id, dir + " " + src->gen(lx).name + "*E", [&] {
        NCElement e = f(NCElement::E(src, 1));
        return (f.image(lx) * e - e * f(NCElement::gen(src, lx) + NCElement(src, src->e_shift(lx)))).to_string();
      });
    }
  };
  transport_rules(na, psi, "new->old");
  transport_rules(oa, phi, "old->new");

  // Hopf data pushed through the map
  SlotMap phi_s = morphism_slot(phi), psi_s = morphism_slot(psi);
  for (const auto& [name, g] : items(na)) {
    NCElement og = psi(g);
    rep.record("basis.coproduct", id, name, [&] {
      return (apply_slotwise({phi_s, phi_s}, oh.coproduct(og)) - nh.coproduct(g)).to_string();
    });
    rep.record("basis.counit", id, name, [&] { return (oh.counit(og) - nh.counit(g)).to_string(); });
    rep.record("basis.antipode", id, name, [&] { return (phi(oh.antipode(og)) - nh.antipode(g)).to_string(); });
  }
  for (const auto& [name, g] : items(oa)) {
    NCElement ng = phi(g);
    rep.record("basis.coproduct", id, "old " + name, [&] {
      return (apply_slotwise({psi_s, psi_s}, nh.coproduct(ng)) - oh.coproduct(g)).to_string();
    });
    rep.record("basis.antipode", id, "old " + name, [&] { return (psi(nh.antipode(ng)) - oh.antipode(g)).to_string(); });
  }

  // the derived bracket against the W-symbol display
  const int N = k.n();
  for (int i = 1; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      rep.record("basis.jj_bracket", id, "[J" + std::to_string(i) + std::to_string(N) + ",J" + std::to_string(j) + std::to_string(N) + "]", [&] {
        NCElement a = NCElement::gen(oa, *oa->find_J(i, N)), b = NCElement::gen(oa, *oa->find_J(j, N));
        return (commutator(a, b) - old_basis_jj_bracket(oa, k, i, j)).to_string();
      });
    }
  }
  return rep;
}

}  // namespace ckhopf
