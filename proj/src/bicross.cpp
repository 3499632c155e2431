#include "ckhopf/bicross.hpp"

#include <stdexcept>

namespace ckhopf {

namespace {

NCElement mono(const AlgebraPtr& a, const Monomial& m) { return NCElement::monomial(a, m); }

bool letters_of_kind(const Algebra& alg, const NCElement& x, GenKind kind, bool allow_e) {
  for (const auto& [m, c] : x.terms()) {
    if (m.e != 0 && !allow_e) return false;
    for (Letter l : m.word) {
      if (alg.gen(l).kind != kind) return false;
    }
  }
  return true;
}

SlotMap element_map(const std::string& name, const AlgebraPtr& alg, std::size_t arity,
                    std::function<TensorElement(const Monomial&)> f) {
  SlotMap m;
  m.kind = SlotMap::Kind::Morphism;
  m.name = name;
  m.out_arity = arity;
  m.target = alg;
  m.image = std::move(f);
  return m;
}


}  // namespace

// ---------------------------------------------------------------------------
// Data

BicrossData make_bicross_data(const KVector& k) {
  HopfPtr dh = build_deformed_new(k);
  AlgebraPtr d = dh->algebra();
  auto amb = std::make_shared<Algebra>("U(so" + k.affine_label() + ")xU_lambda(T" + std::to_string(k.n()) + ")",
                                       k.table(), d->generators(), true);
  for (std::size_t xi = 0; xi < d->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    for (std::size_t yi = 0; yi < xi; ++yi) {
      Letter y = static_cast<Letter>(yi);
      bool both_j = d->gen(x).kind == GenKind::J && d->gen(y).kind == GenKind::J;
      if (both_j) {
        amb->set_rule(x, y, NCElement(amb, *d->rule(x, y)));
      } else {
        amb->set_commuting(x, y);
      }
    }
  }
  auto h = std::make_shared<Hopf>(amb);
  BicrossData out;
  out.k = k;
  for (std::size_t xi = 0; xi < d->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    h->set_counit(x, Coefficient());
    NCElement gx = NCElement::gen(amb, x);
    if (d->gen(x).kind == GenKind::P) {
      h->set_coproduct(x, dh->coproduct_image(x).transported(amb));
      h->set_antipode(x, dh->antipode_image(x).transported(amb));
      continue;
    }
    h->set_coproduct(x, TensorElement::pure({gx, NCElement(amb, Coefficient(1))}) +
                            TensorElement::pure({NCElement(amb, Coefficient(1)), gx}));
    h->set_antipode(x, -gx);
    // β(J) is the part of Δ(J) left after J ⊗ 1
    TensorElement beta = dh->coproduct_image(x).transported(amb) - TensorElement::pure({gx, NCElement(amb, Coefficient(1))});
    out.coaction.emplace(x, beta);
  }
  out.ambient = h;
  for (std::size_t pi = 0; pi < d->size(); ++pi) {
    Letter p = static_cast<Letter>(pi);
    if (d->gen(p).kind != GenKind::P) continue;
    for (std::size_t ji = 0; ji < d->size(); ++ji) {
      Letter j = static_cast<Letter>(ji);
      if (d->gen(j).kind != GenKind::J) continue;
      NCElement img = commutator(NCElement::gen(d, p), NCElement::gen(d, j)).transported(amb);
      if (!letters_of_kind(*amb, img, GenKind::P, true))
        throw std::logic_error("action image outside the translation sector: " + img.to_string());
      out.action.emplace(std::make_pair(p, j), img);
    }
  }
  return out;
}

BicrossData contract(const BicrossData& d, int m) {
  BicrossData out;
  out.k = d.k.with(m, Coefficient());
  out.ambient = contract(*d.ambient, m);
  const auto& src = d.ambient->algebra();
  const auto& amb = out.ambient->algebra();
  for (const auto& [pj, img] : d.action) {
    int w = contraction_weight(src->gen(pj.first), m) + contraction_weight(src->gen(pj.second), m);
    out.action.emplace(pj, contract_image(img, w, m).transported(amb));
  }
  for (const auto& [j, t] : d.coaction) {
    out.coaction.emplace(j, contract_image(t, contraction_weight(src->gen(j), m), m).transported(amb));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Action and coaction

namespace {

Letter pn_letter(const BicrossData& d) { return *d.ambient->algebra()->find_P(d.k.n()); }

// a ◁ J for one generator J, as a derivation of A; E^e ◁ J follows from P_N ◁ J.
NCElement act_gen(const BicrossData& d, const NCElement& a, Letter j) {
  const auto& amb = d.ambient->algebra();
  Coefficient half_lam = Coefficient(Rational(1, 2)) * Coefficient::symbol(d.k.table(), "lambda");
  const NCElement& pn_img = d.action.at({pn_letter(d), j});
  NCElement r(amb);
  for (const auto& [m, c] : a.terms()) {
    for (std::size_t i = 0; i < m.word.size(); ++i) {
      Letter p = m.word[i];
      if (amb->gen(p).kind != GenKind::P) throw std::invalid_argument("act: left operand outside A");
      Word pre(m.word.begin(), m.word.begin() + static_cast<long>(i));
      Word post(m.word.begin() + static_cast<long>(i) + 1, m.word.end());
      r += mono(amb, Monomial{m.e, pre}) * d.action.at({p, j}) * mono(amb, Monomial{0, post}) * c;
    }
    if (m.e != 0) r += mono(amb, m) * pn_img * (c * Coefficient(m.e) * half_lam);
  }
  return r;
}

TensorElement act_first(const BicrossData& d, const TensorElement& t, Letter j) {
  const auto& amb = d.ambient->algebra();
  TensorElement r(amb, 2);
  for (const auto& [key, c] : t.terms()) {
    r += TensorElement::pure({act_gen(d, mono(amb, key[0]), j), mono(amb, key[1])}) * c;
  }
  return r;
}

TensorElement coact_word(const BicrossData& d, const Word& w) {
  const auto& amb = d.ambient->algebra();
  if (w.empty()) return TensorElement::unit(amb, 2);
  Letter x = w.back();
  TensorElement b = coact_word(d, Word(w.begin(), w.end() - 1));
  return act_first(d, b, x) + b * d.coaction.at(x);
}

}  // namespace

NCElement act(const BicrossData& d, const NCElement& a, const NCElement& h) {
  const auto& amb = d.ambient->algebra();
  NCElement r(amb);
  for (const auto& [m, c] : h.terms()) {
    if (m.e != 0) throw std::invalid_argument("act: right operand outside H");
    NCElement cur = a;
    for (Letter j : m.word) {
      if (amb->gen(j).kind != GenKind::J) throw std::invalid_argument("act: right operand outside H");
      cur = act_gen(d, cur, j);
    }
    r += cur * c;
  }
  return r;
}

TensorElement coact(const BicrossData& d, const NCElement& h) {
  const auto& amb = d.ambient->algebra();
  TensorElement r(amb, 2);
  for (const auto& [m, c] : h.terms()) {
    if (m.e != 0) throw std::invalid_argument("coact: argument outside H");
    r += coact_word(d, m.word) * c;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Compatibility checks

namespace {

struct Samples {
  std::vector<std::pair<std::string, NCElement>> a1, a2, h1, h2;  // generators, degree-2 products
};

Samples samples(const BicrossData& d) {
  const auto& amb = d.ambient->algebra();
  Samples s;
  s.a1.emplace_back("E", NCElement::E(amb, 1));
  s.a1.emplace_back("E^-1", NCElement::E(amb, -1));
  std::vector<Letter> ps, js;
  for (std::size_t x = 0; x < amb->size(); ++x) {
    Letter l = static_cast<Letter>(x);
    (amb->gen(l).kind == GenKind::P ? ps : js).push_back(l);
  }
  for (Letter p : ps) s.a1.emplace_back(amb->gen(p).name, NCElement::gen(amb, p));
  for (std::size_t i = 0; i < ps.size(); ++i) {
    s.a2.emplace_back("E*" + amb->gen(ps[i]).name, NCElement::E(amb, 1) * NCElement::gen(amb, ps[i]));
    for (std::size_t j = i; j < ps.size(); ++j)
      s.a2.emplace_back(amb->gen(ps[i]).name + "*" + amb->gen(ps[j]).name,
                        NCElement::gen(amb, ps[i]) * NCElement::gen(amb, ps[j]));
  }
  for (Letter j : js) s.h1.emplace_back(amb->gen(j).name, NCElement::gen(amb, j));
  for (Letter x : js)
    for (Letter y : js)
      s.h2.emplace_back(amb->gen(x).name + "*" + amb->gen(y).name, NCElement::gen(amb, x) * NCElement::gen(amb, y));
  return s;
}

template <class V>
V joined(const V& a, const V& b) {
  V r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

VerificationReport check_module_algebra(const BicrossData& d) {
  VerificationReport rep;
  const Hopf& amb_h = *d.ambient;
  const auto& amb = amb_h.algebra();
  const std::string& id = amb->id();
  Samples s = samples(d);
  NCElement one(amb, Coefficient(1));

  for (const auto& [an, a] : s.a1) {
    rep.record("bicross.module", id, an + "<1", [&] { return (act(d, a, one) - a).to_string(); });
    for (const auto& [hn, h] : s.h1) {
      for (const auto& [gn, g] : s.h1) {
        rep.record("bicross.module", id, "(" + an + "<" + hn + ")<" + gn,
                   [&] { return (act(d, act(d, a, h), g) - act(d, a, h * g)).to_string(); });
      }
    }
  }
  // (ab) ◁ h = (a ◁ h_(1))(b ◁ h_(2))
  for (const auto& [an, a] : s.a1) {
    for (const auto& [bn, b] : s.a1) {
      for (const auto& [hn, h] : joined(s.h1, s.h2)) {
        rep.record("bicross.module", id, "(" + an + "*" + bn + ")<" + hn, [&] {
          NCElement rhs(amb);
          for (TensorElement t = amb_h.coproduct(h); const auto& [key, c] : t.terms())
            rhs += act(d, a, mono(amb, key[0])) * act(d, b, mono(amb, key[1])) * c;
          return (act(d, a * b, h) - rhs).to_string();
        });
      }
    }
  }
  for (const auto& [an, a] : joined(s.a1, s.a2)) {
    for (const auto& [hn, h] : joined(s.h1, s.h2)) {
      rep.record("bicross.A1", id, an + "<" + hn, [&] {
        return (amb_h.counit(act(d, a, h)) - amb_h.counit(a) * amb_h.counit(h)).to_string();
      });
      // Δ(a◁h) = (a_(1) ◁ h_(1)) h_(2)^(1) ⊗ a_(2) ◁ h_(2)^(2)
      rep.record("bicross.A2", id, an + "<" + hn, [&] {
        TensorElement rhs(amb, 2);
        TensorElement da = amb_h.coproduct(a), dh = amb_h.coproduct(h);
        for (const auto& [ka, ca] : da.terms()) {
          for (const auto& [kh, ch] : dh.terms()) {
            NCElement left = act(d, mono(amb, ka[0]), mono(amb, kh[0]));
            for (TensorElement t = coact(d, mono(amb, kh[1])); const auto& [kb, cb] : t.terms()) {
              rhs += TensorElement::pure({left * mono(amb, kb[0]), act(d, mono(amb, ka[1]), mono(amb, kb[1]))}) *
                     (ca * ch * cb);
            }
          }
        }
        return (amb_h.coproduct(act(d, a, h)) - rhs).to_string();
      });
    }
  }
  return rep;
}

VerificationReport check_comodule_coalgebra(const BicrossData& d) {
  VerificationReport rep;
  const Hopf& amb_h = *d.ambient;
  const auto& amb = amb_h.algebra();
  const std::string& id = amb->id();
  Samples s = samples(d);
  NCElement one(amb, Coefficient(1));

  rep.record("bicross.A3", id, "beta(1)", [&] { return (coact(d, one) - TensorElement::unit(amb, 2)).to_string(); });

  SlotMap beta = element_map("beta", amb, 2, [&](const Monomial& m) { return coact(d, mono(amb, m)); });
  SlotMap id1 = SlotMap::identity(amb);
  SlotMap delta = amb_h.coproduct_map(), eps = amb_h.counit_map();

  for (const auto& [hn, h] : joined(s.h1, s.h2)) {
    TensorElement b = coact(d, h);
    rep.record("bicross.comodule", id, hn + " coassociative",
               [&] { return (apply_slotwise({id1, beta}, b) - apply_slotwise({delta, id1}, b)).to_string(); });
    rep.record("bicross.comodule", id, hn + " counit",
               [&] { return (apply_slotwise({eps, id1}, b) - TensorElement::pure({h})).to_string(); });
    // h^(1) ⊗ Δ(h^(2)) = h_(1)^(1) h_(2)^(1) ⊗ h_(1)^(2) ⊗ h_(2)^(2)
    rep.record("bicross.comodule", id, hn + " coalgebra", [&] {
      TensorElement rhs(amb, 3);
      for (TensorElement t = amb_h.coproduct(h); const auto& [kh, ch] : t.terms()) {
        TensorElement b1 = coact(d, mono(amb, kh[0])), b2 = coact(d, mono(amb, kh[1]));
        for (const auto& [k1, c1] : b1.terms())
          for (const auto& [k2, c2] : b2.terms())
            rhs += TensorElement::pure({mono(amb, k1[0]) * mono(amb, k2[0]), mono(amb, k1[1]), mono(amb, k2[1])}) *
                   (ch * c1 * c2);
      }
      return (apply_slotwise({id1, delta}, b) - rhs).to_string();
    });
    rep.record("bicross.comodule", id, hn + " counit of H", [&] {
      return (apply_slotwise({id1, eps}, b) - TensorElement::pure({NCElement(amb, amb_h.counit(h))})).to_string();
    });
  }

  // β(hg) = (h^(1) ◁ g_(1)) g_(2)^(1) ⊗ h^(2) g_(2)^(2)
  auto a4 = [&](const std::string& label, const NCElement& h, const NCElement& g) {
    rep.record("bicross.A4", id, label, [&] {
      TensorElement rhs(amb, 2);
      TensorElement bh = coact(d, h);
      for (TensorElement t = amb_h.coproduct(g); const auto& [kg, cg] : t.terms()) {
        TensorElement bg = coact(d, mono(amb, kg[1]));
        for (const auto& [k1, c1] : bh.terms()) {
          NCElement left = act(d, mono(amb, k1[0]), mono(amb, kg[0]));
          for (const auto& [k2, c2] : bg.terms())
            rhs += TensorElement::pure({left * mono(amb, k2[0]), mono(amb, k1[1]) * mono(amb, k2[1])}) * (cg * c1 * c2);
        }
      }
      return (coact(d, h * g) - rhs).to_string();
    });
  };
  for (const auto& [hn, h] : s.h1) {
    for (const auto& [gn, g] : joined(s.h1, s.h2)) a4(hn + "*" + gn, h, g);
  }
  for (const auto& [hn, h] : s.h2) {
    for (const auto& [gn, g] : s.h1) a4(hn + "*" + gn, h, g);
  }

  // h_(1)^(1) (a ◁ h_(2)) ⊗ h_(1)^(2) = (a ◁ h_(1)) h_(2)^(1) ⊗ h_(2)^(2)
  for (const auto& [an, a] : joined(s.a1, s.a2)) {
    for (const auto& [hn, h] : joined(s.h1, s.h2)) {
      rep.record("bicross.A5", id, an + "," + hn, [&] {
        TensorElement lhs(amb, 2), rhs(amb, 2);
        for (TensorElement t = amb_h.coproduct(h); const auto& [kh, ch] : t.terms()) {
          NCElement h1 = mono(amb, kh[0]), h2 = mono(amb, kh[1]);
          NCElement a_h2 = act(d, a, h2), a_h1 = act(d, a, h1);
          for (TensorElement t = coact(d, h1); const auto& [k, c] : t.terms())
            lhs += TensorElement::pure({mono(amb, k[0]) * a_h2, mono(amb, k[1])}) * (ch * c);
          for (TensorElement t = coact(d, h2); const auto& [k, c] : t.terms())
            rhs += TensorElement::pure({a_h1 * mono(amb, k[0]), mono(amb, k[1])}) * (ch * c);
        }
        return (lhs - rhs).to_string();
      });
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The bicrossproduct

HopfPtr build_bicrossproduct(const BicrossData& d) {
  VerificationReport pre = check_module_algebra(d);
  pre.merge(check_comodule_coalgebra(d));
  if (!pre.all_pass()) {
    throw std::runtime_error("bicrossproduct compatibility fails:\n" + pre.summary());
  }
  const Hopf& amb_h = *d.ambient;
  const auto& amb = amb_h.algebra();
  auto K = std::make_shared<Algebra>("bicross(" + d.k.affine_label() + ")", d.k.table(), amb->generators(), true);
  // (1⊗a)(h⊗1) = h_(1) ⊗ (a ◁ h_(2)): for primitive J, a·J = J·a + a ◁ J
  for (std::size_t xi = 0; xi < amb->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    for (std::size_t yi = 0; yi < xi; ++yi) {
      Letter y = static_cast<Letter>(yi);
      bool jp = amb->gen(x).kind == GenKind::J && amb->gen(y).kind == GenKind::P;
      NCElement img(K, *amb->rule(x, y));
      if (jp) img -= d.action.at({y, x}).transported(K);
      K->set_rule(x, y, img);
    }
    if (amb->gen(x).kind == GenKind::J) {
      // J·E = E·J - E ◁ J
      NCElement e_act = act(d, NCElement::E(amb, 1), NCElement::gen(amb, x));
      K->set_e_shift(x, (NCElement::E(amb, -1) * e_act * Coefficient(-1)).transported(K));
    }
  }
  auto h = std::make_shared<Hopf>(K);
  NCElement one(K, Coefficient(1));
  for (std::size_t xi = 0; xi < amb->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    h->set_counit(x, Coefficient());
    NCElement gx = NCElement::gen(K, x);
    if (amb->gen(x).kind == GenKind::P) {
      h->set_coproduct(x, amb_h.coproduct_image(x).transported(K));
      h->set_antipode(x, amb_h.antipode_image(x).transported(K));
      continue;
    }
    // Δ(h⊗1) = h_(1) ⊗ h_(2)^(1) ⊗ h_(2)^(2) ⊗ 1
    TensorElement beta = d.coaction.at(x).transported(K);
    h->set_coproduct(x, TensorElement::pure({gx, one}) + beta);
    // S(h⊗1) = (1 ⊗ S_A(h^(1)))(S_H(h^(2)) ⊗ 1)
    NCElement s(K);
    for (const auto& [key, c] : d.coaction.at(x).terms()) {
      s += amb_h.antipode(mono(amb, key[0])).transported(K) * amb_h.antipode(mono(amb, key[1])).transported(K) * c;
    }
    h->set_antipode(x, s);
  }
  return h;
}

VerificationReport compare_with_direct(const KVector& k) {
  BicrossData d = make_bicross_data(k);
  HopfPtr K = build_bicrossproduct(d);
  VerificationReport rep = compare_hopf(*K, *build_deformed_new(k), "bicross.direct");
  rep.merge(check_hopf(*K));
  return rep;
}

VerificationReport check_contraction_commutes(const KVector& k, int m) {
  BicrossData d = make_bicross_data(k);
  HopfPtr a = build_bicrossproduct(contract(d, m));
  HopfPtr b = contract(*build_bicrossproduct(d), m);
  VerificationReport rep = compare_hopf(*a, *b, "bicross.contraction");
  rep.merge(compare_hopf(*a, *build_bicrossproduct(make_bicross_data(k.with(m, Coefficient()))), "bicross.contraction"));
  return rep;
}

}  // namespace ckhopf
