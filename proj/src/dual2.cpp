#include <stdexcept>

#include "ckhopf/bicross.hpp"

namespace ckhopf {

namespace {

// Generator order S < C < a1 < a2: rotation sector first.
constexpr Letter kS = 0, kC = 1, kA1 = 2, kA2 = 3;

bool in_a(Letter x) { return x >= kA1; }

std::vector<Generator> dual_generators() {
  return {{"S", GenKind::Other, 0, 0, "S"},
          {"C", GenKind::Other, 0, 0, "C"},
          {"a1", GenKind::Other, 0, 1, "a_1"},
          {"a2", GenKind::Other, 0, 2, "a_2"}};
}

NCElement mono(const AlgebraPtr& a, const Monomial& m) { return NCElement::monomial(a, m); }
NCElement word_element(const AlgebraPtr& a, const Word& w) { return mono(a, Monomial{0, w}); }

Coefficient lambda_of(const KVector& k) { return Coefficient::symbol(k.table(), "lambda"); }

// C·S = S·C, C^2 = 1 - κ2 S^2.
void set_rotation_rules(Algebra& alg, const Coefficient& k2) {
  AlgebraPtr view(std::shared_ptr<Algebra>{}, &alg);
  alg.set_commuting(kC, kS);
  alg.set_rule(kC, kC, NCElement(view, Coefficient(1)) - word_element(view, {kS, kS}) * k2);
}

void set_translation_rules(Algebra& alg, const Coefficient& lam) {
  AlgebraPtr view(std::shared_ptr<Algebra>{}, &alg);
  // [a1, a2] = λ a1
  alg.set_rule(kA2, kA1, word_element(view, {kA1, kA2}) - NCElement::gen(view, kA1) * lam);
}

// a ▷ w for a generator a and a word w in C, S: a derivation of H.
NCElement act_gen_word(const DualN2& d, Letter a, const Word& w) {
  const auto& amb = d.ambient->algebra();
  NCElement r(amb);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (in_a(w[i])) throw std::invalid_argument("dual action: right operand outside H");
    Word pre(w.begin(), w.begin() + static_cast<long>(i));
    Word post(w.begin() + static_cast<long>(i) + 1, w.end());
    r += word_element(amb, pre) * d.action.at({a, w[i]}) * word_element(amb, post);
  }
  return r;
}

NCElement act_gen(const DualN2& d, Letter a, const NCElement& h) {
  NCElement r(d.ambient->algebra());
  for (const auto& [m, c] : h.terms()) r += act_gen_word(d, a, m.word) * c;
  return r;
}

// (a1 a2 ... ak) ▷ h = a1 ▷ (a2 ▷ ... (ak ▷ h))
NCElement act_word(const DualN2& d, const Word& u, const NCElement& h) {
  NCElement cur = h;
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    if (!in_a(*it)) throw std::invalid_argument("dual action: left operand outside A");
    cur = act_gen(d, *it, cur);
  }
  return cur;
}

NCElement act(const DualN2& d, const NCElement& u, const NCElement& h) {
  NCElement r(d.ambient->algebra());
  for (const auto& [m, c] : u.terms()) r += act_word(d, m.word, h) * c;
  return r;
}

TensorElement act_second(const DualN2& d, Letter a, const TensorElement& t) {
  const auto& amb = d.ambient->algebra();
  TensorElement r(amb, 2);
  for (const auto& [key, c] : t.terms()) r += TensorElement::pure({mono(amb, key[0]), act_gen(d, a, mono(amb, key[1]))}) * c;
  return r;
}

// β̄(l·rest) = β̄(l) β̄(rest) + (id ⊗ l▷) β̄(rest)
TensorElement coact_word(const DualN2& d, const Word& w) {
  const auto& amb = d.ambient->algebra();
  if (w.empty()) return TensorElement::unit(amb, 2);
  Letter l = w.front();
  if (!in_a(l)) throw std::invalid_argument("dual coaction: argument outside A");
  TensorElement rest = coact_word(d, Word(w.begin() + 1, w.end()));
  return d.coaction.at(l) * rest + act_second(d, l, rest);
}

TensorElement coact(const DualN2& d, const NCElement& u) {
  TensorElement r(d.ambient->algebra(), 2);
  for (const auto& [m, c] : u.terms()) r += coact_word(d, m.word) * c;
  return r;
}

using Named = std::vector<std::pair<std::string, NCElement>>;

template <class V>
V joined(const V& a, const V& b) {
  V r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

VerificationReport compatibility(const DualN2& d) {
  VerificationReport rep;
  const Hopf& hh = *d.ambient;
  const auto& amb = hh.algebra();
  const std::string& id = amb->id();
  auto g = [&](Letter x) { return NCElement::gen(amb, x); };
  NCElement one(amb, Coefficient(1));
  Coefficient lam = lambda_of(d.k);

  Named a1{{"a1", g(kA1)}, {"a2", g(kA2)}};
  Named a2{{"a1*a1", g(kA1) * g(kA1)}, {"a1*a2", g(kA1) * g(kA2)}, {"a2*a2", g(kA2) * g(kA2)}};
  Named h1{{"1", one}, {"C", g(kC)}, {"S", g(kS)}};
  Named h2{{"S*S", g(kS) * g(kS)}, {"S*C", g(kS) * g(kC)}};

  // the action respects C S = S C, C^2 = 1 - κ2 S^2 and a2 a1 = a1 a2 - λ a1
  for (Letter a : {kA1, kA2}) {
    const std::string an = amb->gen(a).name;
    rep.record("dual2.module", id, an + ">(C*C)",
               [&] { return (act_gen_word(d, a, {kC, kC}) - act_gen(d, a, g(kC) * g(kC))).to_string(); });
    rep.record("dual2.module", id, an + ">(C*S)",
               [&] { return (act_gen_word(d, a, {kC, kS}) - act_gen_word(d, a, {kS, kC})).to_string(); });
  }
  for (const auto& [hn, h] : joined(h1, h2)) {
    rep.record("dual2.module", id, "(a2*a1)>" + hn, [&] {
      return (act_word(d, {kA2, kA1}, h) - act_word(d, {kA1, kA2}, h) + act_word(d, {kA1}, h) * lam).to_string();
    });
  }
  rep.record("dual2.module", id, "beta(a2*a1)", [&] {
    return (coact_word(d, {kA2, kA1}) - coact_word(d, {kA1, kA2}) + coact_word(d, {kA1}) * lam).to_string();
  });

  for (const auto& [an, a] : joined(a1, a2)) {
    for (const auto& [hn, h] : joined(h1, h2)) {
      rep.record("dual2.A1", id, an + ">" + hn,
                 [&] { return (hh.counit(act(d, a, h)) - hh.counit(a) * hh.counit(h)).to_string(); });
      // Δ(a▷h) = (a_(1)^(1) ▷ h_(1)) ⊗ a_(1)^(2) (a_(2) ▷ h_(2))
      rep.record("dual2.A2", id, an + ">" + hn, [&] {
        TensorElement rhs(amb, 2);
        for (TensorElement da = hh.coproduct(a); const auto& [ka, ca] : da.terms()) {
          for (TensorElement b = coact(d, mono(amb, ka[0])); const auto& [kb, cb] : b.terms()) {
            for (TensorElement dh = hh.coproduct(h); const auto& [kh, ch] : dh.terms()) {
              rhs += TensorElement::pure({act(d, mono(amb, kb[0]), mono(amb, kh[0])),
                                          mono(amb, kb[1]) * act(d, mono(amb, ka[1]), mono(amb, kh[1]))}) *
                     (ca * cb * ch);
            }
          }
        }
        return (hh.coproduct(act(d, a, h)) - rhs).to_string();
      });
      // a_(2)^(1) ⊗ (a_(1) ▷ h) a_(2)^(2) = a_(1)^(1) ⊗ a_(1)^(2) (a_(2) ▷ h)
      rep.record("dual2.A5", id, an + "," + hn, [&] {
        TensorElement lhs(amb, 2), rhs(amb, 2);
        for (TensorElement da = hh.coproduct(a); const auto& [ka, ca] : da.terms()) {
          NCElement x0 = mono(amb, ka[0]), x1 = mono(amb, ka[1]);
          NCElement x0h = act(d, x0, h), x1h = act(d, x1, h);
          for (TensorElement b = coact(d, x1); const auto& [kb, cb] : b.terms())
            lhs += TensorElement::pure({mono(amb, kb[0]), x0h * mono(amb, kb[1])}) * (ca * cb);
          for (TensorElement b = coact(d, x0); const auto& [kb, cb] : b.terms())
            rhs += TensorElement::pure({mono(amb, kb[0]), mono(amb, kb[1]) * x1h}) * (ca * cb);
        }
        return (lhs - rhs).to_string();
      });
    }
  }

  rep.record("dual2.A3", id, "beta(1)", [&] { return (coact(d, one) - TensorElement::unit(amb, 2)).to_string(); });
  // β̄(ab) = a_(1)^(1) b^(1) ⊗ a_(1)^(2) (a_(2) ▷ b^(2))
  for (const auto& [an, a] : joined(a1, a2)) {
    for (const auto& [bn, b] : a1) {
      rep.record("dual2.A4", id, an + "*" + bn, [&] {
        TensorElement rhs(amb, 2);
        TensorElement bb = coact(d, b);
        for (TensorElement da = hh.coproduct(a); const auto& [ka, ca] : da.terms()) {
          for (TensorElement ba = coact(d, mono(amb, ka[0])); const auto& [k1, c1] : ba.terms()) {
            for (const auto& [k2, c2] : bb.terms()) {
              rhs += TensorElement::pure({mono(amb, k1[0]) * mono(amb, k2[0]),
                                          mono(amb, k1[1]) * act(d, mono(amb, ka[1]), mono(amb, k2[1]))}) *
                     (ca * c1 * c2);
            }
          }
        }
        return (coact(d, a * b) - rhs).to_string();
      });
    }
  }

  SlotMap beta;
  beta.kind = SlotMap::Kind::Morphism;
  beta.name = "beta";
  beta.out_arity = 2;
  beta.target = amb;
  beta.image = [&](const Monomial& m) { return coact(d, mono(amb, m)); };
  SlotMap id1 = SlotMap::identity(amb), delta = hh.coproduct_map(), eps = hh.counit_map();
  for (const auto& [an, a] : joined(a1, a2)) {
    TensorElement b = coact(d, a);
    rep.record("dual2.comodule", id, an + " coassociative",
               [&] { return (apply_slotwise({beta, id1}, b) - apply_slotwise({id1, delta}, b)).to_string(); });
    rep.record("dual2.comodule", id, an + " counit",
               [&] { return (apply_slotwise({id1, eps}, b) - TensorElement::pure({a})).to_string(); });
    rep.record("dual2.comodule", id, an + " coalgebra", [&] {
      TensorElement rhs(amb, 3);
      for (TensorElement da = hh.coproduct(a); const auto& [ka, ca] : da.terms()) {
        TensorElement b0 = coact(d, mono(amb, ka[0])), b1 = coact(d, mono(amb, ka[1]));
        for (const auto& [k0, c0] : b0.terms())
          for (const auto& [k1, c1] : b1.terms())
            rhs += TensorElement::pure({mono(amb, k0[0]), mono(amb, k1[0]), mono(amb, k0[1]) * mono(amb, k1[1])}) *
                   (ca * c0 * c1);
      }
      return (apply_slotwise({delta, id1}, b) - rhs).to_string();
    });
    rep.record("dual2.comodule", id, an + " counit of A", [&] {
      return (apply_slotwise({eps, id1}, b) - TensorElement::pure({NCElement(amb, hh.counit(a))})).to_string();
    });
  }
  return rep;
}

}  // namespace

DualN2 build_dual_n2(const KVector& k, PhiSign sign) {
  if (k.n() != 2) throw std::invalid_argument("build_dual_n2: N must be 2");
  Coefficient k2 = k.kappa(2), lam = lambda_of(k);
  auto amb = std::make_shared<Algebra>("Fun(SO(2))xFun_lambda(T2)" + k.affine_label(), k.table(), dual_generators(), false);
  set_rotation_rules(*amb, k2);
  for (Letter a : {kA1, kA2}) {
    amb->set_commuting(a, kS);
    amb->set_commuting(a, kC);
  }
  set_translation_rules(*amb, lam);

  auto g = [&](Letter x) { return NCElement::gen(amb, x); };
  NCElement one(amb, Coefficient(1));
  auto ah = std::make_shared<Hopf>(amb);
  ah->set_coproduct(kC, TensorElement::pure({g(kC), g(kC)}) - TensorElement::pure({g(kS), g(kS)}) * k2);
  ah->set_coproduct(kS, TensorElement::pure({g(kS), g(kC)}) + TensorElement::pure({g(kC), g(kS)}));
  ah->set_counit(kC, Coefficient(1));
  ah->set_counit(kS, Coefficient());
  ah->set_antipode(kC, g(kC));
  ah->set_antipode(kS, -g(kS));
  for (Letter a : {kA1, kA2}) {
    ah->set_coproduct(a, TensorElement::pure({g(a), one}) + TensorElement::pure({one, g(a)}));
    ah->set_counit(a, Coefficient());
    ah->set_antipode(a, -g(a));
  }

  DualN2 d;
  d.k = k;
  d.sign = sign;
  d.ambient = ah;
  // a ▷ φ, pushed to C and S by dC/dφ = -κ2 S, dS/dφ = C. With ᾱ taken as
  // displayed, a ↦ (a ▷) reverses [a1, a2] = λ a1 and the module check fails;
  // the opposite sign is the one the pairing with the new basis selects.
  Coefficient sgn(sign == PhiSign::Displayed ? 1 : -1);
  std::map<Letter, NCElement> on_phi{{kA1, (one - g(kC)) * lam * sgn}, {kA2, g(kS) * lam * sgn}};
  for (Letter a : {kA1, kA2}) {
    d.action.emplace(std::make_pair(a, kC), g(kS) * on_phi.at(a) * (Coefficient(-1) * k2));
    d.action.emplace(std::make_pair(a, kS), g(kC) * on_phi.at(a));
  }
  // (β̄(a1), β̄(a2)) = (a1, a2) ⊗ [[C, -S], [κ2 S, C]]
  d.coaction.emplace(kA1, TensorElement::pure({g(kA1), g(kC)}) + TensorElement::pure({g(kA2), g(kS)}) * k2);
  d.coaction.emplace(kA2, TensorElement::pure({g(kA2), g(kC)}) - TensorElement::pure({g(kA1), g(kS)}));

  d.report = compatibility(d);
  if (!d.report.all_pass()) throw std::runtime_error("dual compatibility fails:\n" + d.report.summary());

  // K = H ⊗ A: a·h = h·a + a ▷ h for primitive a
  auto K = std::make_shared<Algebra>("Fun_lambda(ISO(2))" + k.affine_label(), k.table(), dual_generators(), false);
  set_rotation_rules(*K, k2);
  for (Letter a : {kA1, kA2}) {
    for (Letter h : {kS, kC}) K->set_rule(a, h, word_element(K, {h, a}) + d.action.at({a, h}).transported(K));
  }
  set_translation_rules(*K, lam);

  auto kh = std::make_shared<Hopf>(K);
  for (Letter h : {kS, kC}) {
    kh->set_coproduct(h, ah->coproduct_image(h).transported(K));
    kh->set_counit(h, ah->counit_image(h));
    kh->set_antipode(h, ah->antipode_image(h).transported(K));
  }
  NCElement kone(K, Coefficient(1));
  for (Letter a : {kA1, kA2}) {
    // Δ(a) = a^(1) ⊗ a^(2) + 1 ⊗ a
    kh->set_coproduct(a, d.coaction.at(a).transported(K) + TensorElement::pure({kone, NCElement::gen(K, a)}));
    kh->set_counit(a, Coefficient());
    // S(a) = S_A(a^(1)) S_H(a^(2))
    NCElement s(K);
    for (const auto& [key, c] : d.coaction.at(a).terms())
      s += ah->antipode(mono(amb, key[0])).transported(K) * ah->antipode(mono(amb, key[1])).transported(K) * c;
    kh->set_antipode(a, s);
  }
  d.product = kh;

  d.report.merge(check_hopf(*kh));
  const std::string& kid = K->id();
  NCElement kc = NCElement::gen(K, kC), ks = NCElement::gen(K, kS);
  NCElement law = kc * kc + ks * ks * k2;
  d.report.record("dual2.group_law", kid, "C^2 + k2 S^2", [&] { return (law - kone).to_string(); });
  d.report.record("dual2.group_law", kid, "Delta(C^2 + k2 S^2)",
                  [&] { return (kh->coproduct(law) - TensorElement::unit(K, 2)).to_string(); });
  return d;
}

VerificationReport check_dual_presentation(const DualN2& d) {
  VerificationReport rep;
  const Hopf& kh = *d.product;
  const auto& K = kh.algebra();
  const std::string& id = K->id();
  Coefficient k2 = d.k.kappa(2), lam = lambda_of(d.k);
  auto g = [&](const char* n) { return NCElement::gen(K, n); };
  NCElement one(K, Coefficient(1));

  rep.record("dual2.presentation", id, "[a1,a2]", [&] { return (commutator(g("a1"), g("a2")) - g("a1") * lam).to_string(); });
  // [a, f(φ)] = f'(φ) [a, φ]; "displayed" uses [a1, φ] = λ(1 - C), [a2, φ] = λ S
  for (PhiSign ps : {PhiSign::Consistent, PhiSign::Displayed}) {
    Coefficient sgn(ps == PhiSign::Displayed ? 1 : -1);
    std::string check = ps == PhiSign::Consistent ? "dual2.presentation" : "dual2.bracket_display";
    std::map<std::string, NCElement> on_phi{{"a1", (one - g("C")) * lam * sgn}, {"a2", g("S") * lam * sgn}};
    for (const char* a : {"a1", "a2"}) {
      std::string an = a;
      rep.record(check, id, "[" + an + ",C]", [&] {
        return (commutator(g(a), g("C")) + g("S") * on_phi.at(an) * k2).to_string();
      });
      rep.record(check, id, "[" + an + ",S]",
                 [&] { return (commutator(g(a), g("S")) - g("C") * on_phi.at(an)).to_string(); });
    }
  }
  const std::pair<const char*, const char*> coproducts[] = {
      {"a1", "1 (x) a1 + a1 (x) C + k2*a2 (x) S"},
      {"a2", "1 (x) a2 - a1 (x) S + a2 (x) C"},
      {"C", "C (x) C - k2*S (x) S"},
      {"S", "S (x) C + C (x) S"},
  };
  for (const auto& [x, text] : coproducts) {
    rep.record("dual2.presentation", id, std::string("Delta(") + x + ")",
               [&] {
                 // k2 stands for κ2, which may be numeric
                 std::string t = text;
                 if (auto at = t.find("k2"); at != std::string::npos) t.replace(at, 2, "(" + k2.to_string() + ")");
                 return (kh.coproduct(g(x)) - parse_tensor(K, t)).to_string();
               });
  }
  for (const char* x : {"a1", "a2", "S"}) {
    rep.record("dual2.presentation", id, std::string("epsilon(") + x + ")", [&] { return kh.counit(g(x)).to_string(); });
  }

  // antipode as displayed, tested against the antipode axiom
  Hopf shown(kh);
  shown.set_antipode(K->require("a1"), -(g("C") * g("a1")) - g("S") * g("a2") * k2);
  shown.set_antipode(K->require("a2"), g("S") * g("a1") - g("C") * g("a2"));
  for (VerificationReport shown_rep = check_antipode(shown); const auto& e : shown_rep.entries()) {
    ReportEntry r = e;
    r.check = "dual2.antipode_display";
    rep.add(r);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Pairing

Pairing::Pairing(HopfPtr primal, HopfPtr dual) : primal_(std::move(primal)), dual_(std::move(dual)) {}

Coefficient Pairing::generator_value(Letter u, Letter x) const {
  const std::string& un = dual_->algebra()->gen(u).name;
  const std::string& xn = primal_->algebra()->gen(x).name;
  bool one = (un == "a1" && xn == "P1") || (un == "a2" && xn == "P2") || (un == "S" && xn == "J12");
  return one ? Coefficient(1) : Coefficient();
}

// E^e is group-like, so u ↦ ⟨u, E^e⟩ is a character: E = exp(λ P2 / 2).
Coefficient Pairing::e_value(Letter u, int e) const {
  const std::string& un = dual_->algebra()->gen(u).name;
  if (un == "C") return Coefficient(1);
  if (un == "a2") return Coefficient(Rational(e, 2)) * Coefficient::symbol(primal_->algebra()->table(), "lambda");
  return Coefficient();
}

Coefficient Pairing::operator()(const Monomial& u, const Monomial& x) const {
  if (u.word.empty()) return primal_->counit(x);
  if (x.is_one()) return dual_->counit(u);
  auto key = std::make_pair(u, x);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Coefficient r;
  if (x.word.empty()) {
    r = Coefficient(1);
    for (Letter l : u.word) r *= e_value(l, x.e);
  } else if (x.word.size() >= 2 || x.e != 0) {
    // ⟨u, x1 x2⟩ = ⟨u_(1), x1⟩ ⟨u_(2), x2⟩ with x1 = E^e w0 (or E^e alone)
    Monomial x1{x.e, {}}, x2{0, x.word};
    if (x.word.size() >= 2) {
      x1.word = {x.word.front()};
      x2.word.erase(x2.word.begin());
    }
    for (TensorElement du = dual_->coproduct(u); const auto& [key2, c] : du.terms()) {
      Coefficient left = (*this)(key2[0], x1);
      if (!left.is_zero()) r += c * left * (*this)(key2[1], x2);
    }
  } else if (u.word.size() == 1) {
    r = generator_value(u.word.front(), x.word.front());
  } else {
    // ⟨l·rest, x⟩ = ⟨l, x_(1)⟩ ⟨rest, x_(2)⟩
    Monomial l{0, {u.word.front()}}, rest{0, Word(u.word.begin() + 1, u.word.end())};
    for (TensorElement dx = primal_->coproduct(x); const auto& [key2, c] : dx.terms()) {
      Coefficient left = (*this)(l, key2[0]);
      if (!left.is_zero()) r += c * left * (*this)(rest, key2[1]);
    }
  }
  memo_.emplace(key, r);
  return r;
}

Coefficient Pairing::operator()(const NCElement& u, const NCElement& x) const {
  Coefficient r;
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mx, cx] : x.terms()) r += cu * cx * (*this)(mu, mx);
  return r;
}

namespace {

// Normal-form words of length <= max_degree: nondecreasing, strictly
// increasing at letters with a square rule.
std::vector<Word> normal_words(const Algebra& alg, int max_degree) {
  std::vector<Word> out{{}};
  std::vector<Word> frontier{{}};
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (std::size_t x = w.empty() ? 0 : w.back(); x < alg.size(); ++x) {
        Letter l = static_cast<Letter>(x);
        if (!w.empty() && w.back() == l && alg.has_square_rule(l)) continue;
        Word nw = w;
        nw.push_back(l);
        next.push_back(nw);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

VerificationReport pairing_check(const HopfPtr& primal, const HopfPtr& dual, int max_degree) {
  VerificationReport rep;
  Pairing pair(primal, dual);
  const auto& pa = primal->algebra();
  const auto& da = dual->algebra();
  const std::string id = da->id() + "|" + pa->id();

  std::vector<Monomial> xs;
  for (const Word& w : normal_words(*pa, max_degree)) {
    for (int e : {-1, 0, 1}) {
      if (pa->has_E() || e == 0) xs.push_back(Monomial{e, w});
    }
  }
  std::vector<Monomial> us;
  for (const Word& w : normal_words(*da, max_degree)) us.push_back(Monomial{0, w});

  // ⟨u, xy⟩ = ⟨Δu, x ⊗ y⟩
  for (const Monomial& u : us) {
    rep.record("pairing.coproduct", id, da->monomial_text(u), [&]() -> std::string {
      TensorElement du = dual->coproduct(u);
      for (const Monomial& x : xs) {
        for (const Monomial& y : xs) {
          if (static_cast<int>(x.degree() + y.degree()) > max_degree) continue;
          Coefficient lhs = pair(NCElement::monomial(da, u), NCElement::monomial(pa, x) * NCElement::monomial(pa, y));
          Coefficient rhs;
          for (const auto& [k, c] : du.terms()) rhs += c * pair(k[0], x) * pair(k[1], y);
          if (lhs != rhs)
            return pa->monomial_text(x) + " * " + pa->monomial_text(y) + ": " + (lhs - rhs).to_string();
        }
      }
      return "0";
    });
  }
  // ⟨uv, x⟩ = ⟨u ⊗ v, Δx⟩
  for (const Monomial& u : us) {
    rep.record("pairing.product", id, da->monomial_text(u), [&]() -> std::string {
      for (const Monomial& v : us) {
        if (static_cast<int>(u.degree() + v.degree()) > max_degree) continue;
        NCElement uv = NCElement::monomial(da, u) * NCElement::monomial(da, v);
        for (const Monomial& x : xs) {
          Coefficient lhs = pair(uv, NCElement::monomial(pa, x));
          Coefficient rhs;
          for (TensorElement dx = primal->coproduct(x); const auto& [k, c] : dx.terms())
            rhs += c * pair(u, k[0]) * pair(v, k[1]);
          if (lhs != rhs) return da->monomial_text(v) + " | " + pa->monomial_text(x) + ": " + (lhs - rhs).to_string();
        }
      }
      return "0";
    });
  }
  return rep;
}

}  // namespace ckhopf
