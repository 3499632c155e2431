#include "ckhopf/hopf.hpp"

namespace ckhopf {

Hopf::Hopf(AlgebraPtr alg) : alg_(std::move(alg)) {
  std::size_t n = alg_->size();
  delta_.assign(n, TensorElement(alg_, 2));
  eps_.assign(n, Coefficient());
  s_.assign(n, NCElement(alg_));
  has_delta_.assign(n, false);
  has_s_.assign(n, false);
}

Hopf::Hopf(const Hopf& o)
    : alg_(o.alg_), delta_(o.delta_), eps_(o.eps_), s_(o.s_), has_delta_(o.has_delta_), has_s_(o.has_s_) {}

void Hopf::set_coproduct(Letter x, const TensorElement& t) {
  if (t.arity() != 2) throw std::invalid_argument("coproduct image must have arity 2");
  delta_.at(x) = t.is_zero() ? TensorElement(alg_, 2) : t;
  has_delta_.at(x) = true;
  cache_ = std::make_shared<Cache>();
}

void Hopf::set_counit(Letter x, const Coefficient& c) { eps_.at(x) = c; }

void Hopf::set_antipode(Letter x, const NCElement& s) {
  s_.at(x) = NCElement(alg_, s.terms());
  has_s_.at(x) = true;
  cache_ = std::make_shared<Cache>();
}

void Hopf::set_coproduct(const std::string& name, const std::string& text) {
  set_coproduct(alg_->require(name), parse_tensor(alg_, text));
}

void Hopf::set_antipode(const std::string& name, const std::string& text) {
  set_antipode(alg_->require(name), parse_element(alg_, text));
}

bool Hopf::complete() const {
  for (std::size_t x = 0; x < alg_->size(); ++x) {
    if (!has_delta_[x] || !has_s_[x]) return false;
  }
  return true;
}

TensorElement Hopf::coproduct(const Monomial& m) const {
  TensorElement w;
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->delta.find(m.word);
    if (it != cache_->delta.end()) w = it->second;
  }
  if (w.arity() == 0) {
    if (m.word.empty()) {
      w = TensorElement::unit(alg_, 2);
    } else {
      Word prefix(m.word.begin(), m.word.end() - 1);
      Letter x = m.word.back();
      if (!has_delta_[x]) throw std::logic_error("no coproduct image for " + alg_->gen(x).name);
      w = coproduct(Monomial{0, prefix}) * delta_[x];
    }
    std::lock_guard lock(cache_->mu);
    cache_->delta.try_emplace(m.word, w);
  }
  if (m.e == 0) return w;
  TensorElement ee(alg_, 2);
  ee.add_term({Monomial{m.e, {}}, Monomial{m.e, {}}}, Coefficient(1));
  return ee * w;
}

TensorElement Hopf::coproduct(const NCElement& x) const {
  TensorElement r(alg_, 2);
  for (const auto& [m, c] : x.terms()) r += coproduct(m) * c;
  return r;
}

Coefficient Hopf::counit(const Monomial& m) const {
  Coefficient r(1);
  for (Letter x : m.word) {
    r *= eps_[x];
    if (r.is_zero()) break;
  }
  return r;
}

Coefficient Hopf::counit(const NCElement& x) const {
  Coefficient r;
  for (const auto& [m, c] : x.terms()) r += c * counit(m);
  return r;
}

NCElement Hopf::antipode(const Monomial& m) const {
  NCElement w;
  bool found = false;
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->s.find(m.word);
    if (it != cache_->s.end()) {
      w = it->second;
      found = true;
    }
  }
  if (!found) {
    if (m.word.empty()) {
      w = NCElement(alg_, Coefficient(1));
    } else {
      Word prefix(m.word.begin(), m.word.end() - 1);
      Letter x = m.word.back();
      if (!has_s_[x]) throw std::logic_error("no antipode image for " + alg_->gen(x).name);
      w = s_[x] * antipode(Monomial{0, prefix});
    }
    std::lock_guard lock(cache_->mu);
    cache_->s.try_emplace(m.word, w);
  }
  if (m.e == 0) return w;
  return w * NCElement::E(alg_, -m.e);
}

NCElement Hopf::antipode(const NCElement& x) const {
  NCElement r(alg_);
  for (const auto& [m, c] : x.terms()) r += antipode(m) * c;
  return r;
}

SlotMap Hopf::coproduct_map() const {
  SlotMap m;
  m.kind = SlotMap::Kind::Morphism;
  m.name = "Delta";
  m.out_arity = 2;
  m.target = alg_;
  m.image = [this](const Monomial& mono) { return coproduct(mono); };
  return m;
}

SlotMap Hopf::counit_map() const {
  SlotMap m;
  m.kind = SlotMap::Kind::Counit;
  m.name = "epsilon";
  m.out_arity = 0;
  m.target = alg_;
  m.image = [this](const Monomial& mono) { return TensorElement::scalar(alg_, counit(mono)); };
  return m;
}

SlotMap Hopf::antipode_map() const {
  SlotMap m;
  m.kind = SlotMap::Kind::AntiMorphism;
  m.name = "S";
  m.out_arity = 1;
  m.target = alg_;
  m.image = [this](const Monomial& mono) { return TensorElement::pure({antipode(mono)}); };
  return m;
}

// ---------------------------------------------------------------------------

namespace {

struct Item {
  std::string label;
  NCElement element;
};

// Generators plus E when present.
std::vector<Item> generator_items(const AlgebraPtr& alg) {
  std::vector<Item> out;
  if (alg->has_E()) out.push_back({"E", NCElement::E(alg, 1)});
  for (std::size_t x = 0; x < alg->size(); ++x) {
    out.push_back({alg->gen(static_cast<Letter>(x)).name, NCElement::gen(alg, static_cast<Letter>(x))});
  }
  return out;
}

}  // namespace

VerificationReport check_relation_compatibility(const Hopf& h) {
  VerificationReport rep;
  const auto& alg = h.algebra();
  auto gen = [&](Letter x) { return NCElement::gen(alg, x); };
  for (std::size_t xi = 0; xi < alg->size(); ++xi) {
    for (std::size_t yi = 0; yi <= xi; ++yi) {
      Letter x = static_cast<Letter>(xi), y = static_cast<Letter>(yi);
      const Terms* r = alg->rule(x, y);
      if (!r) continue;
      NCElement img(alg, *r);
      std::string item = alg->gen(x).name + "*" + alg->gen(y).name;
      rep.record("compat.coproduct", alg->id(), item, [&] {
        return (h.coproduct(gen(x)) * h.coproduct(gen(y)) - h.coproduct(img)).to_string();
      });
      rep.record("compat.counit", alg->id(), item, [&] {
        return (h.counit(gen(x)) * h.counit(gen(y)) - h.counit(img)).to_string();
      });
      rep.record("compat.antipode", alg->id(), item, [&] {
        return (h.antipode(gen(y)) * h.antipode(gen(x)) - h.antipode(img)).to_string();
      });
    }
  }
  if (!alg->has_E()) return rep;
  NCElement e = NCElement::E(alg, 1), einv = NCElement::E(alg, -1);
  for (std::size_t xi = 0; xi < alg->size(); ++xi) {
    Letter x = static_cast<Letter>(xi);
    // x·E = E·(x + d_x)
    NCElement rhs_inner = gen(x) + NCElement(alg, alg->e_shift(x));
    std::string item = alg->gen(x).name + "*E";
    rep.record("compat.coproduct", alg->id(), item, [&] {
      return (h.coproduct(gen(x)) * h.coproduct(e) - h.coproduct(e) * h.coproduct(rhs_inner)).to_string();
    });
    rep.record("compat.counit", alg->id(), item, [&] {
      return (h.counit(gen(x)) - h.counit(rhs_inner)).to_string();
    });
    rep.record("compat.antipode", alg->id(), item, [&] {
      return (einv * h.antipode(gen(x)) - h.antipode(rhs_inner) * einv).to_string();
    });
  }
  return rep;
}

VerificationReport check_coassociativity(const Hopf& h) {
  VerificationReport rep;
  SlotMap d = h.coproduct_map(), id = SlotMap::identity(h.algebra());
  for (const auto& [label, g] : generator_items(h.algebra())) {
    rep.record("coassociativity", h.id(), label, [&] {
      TensorElement dg = h.coproduct(g);
      return (apply_slotwise({d, id}, dg) - apply_slotwise({id, d}, dg)).to_string();
    });
  }
  return rep;
}

VerificationReport check_counit(const Hopf& h) {
  VerificationReport rep;
  SlotMap e = h.counit_map(), id = SlotMap::identity(h.algebra());
  for (const auto& [label, g] : generator_items(h.algebra())) {
    TensorElement gt = TensorElement::pure({g});
    rep.record("counit", h.id(), label + " left", [&] {
      return (apply_slotwise({e, id}, h.coproduct(g)) - gt).to_string();
    });
    rep.record("counit", h.id(), label + " right", [&] {
      return (apply_slotwise({id, e}, h.coproduct(g)) - gt).to_string();
    });
  }
  return rep;
}

VerificationReport check_antipode(const Hopf& h) {
  VerificationReport rep;
  const auto& alg = h.algebra();
  SlotMap s = h.antipode_map(), id = SlotMap::identity(alg);
  for (const auto& [label, g] : generator_items(alg)) {
    NCElement unit(alg, h.counit(g));
    rep.record("antipode", h.id(), label + " m(S(x)id)D", [&] {
      return (multiply_slots(apply_slotwise({s, id}, h.coproduct(g))) - unit).to_string();
    });
    rep.record("antipode", h.id(), label + " m(id(x)S)D", [&] {
      return (multiply_slots(apply_slotwise({id, s}, h.coproduct(g))) - unit).to_string();
    });
  }
  return rep;
}

VerificationReport check_hopf(const Hopf& h) {
  VerificationReport rep;
  rep.merge(check_coassociativity(h));
  rep.merge(check_counit(h));
  rep.merge(check_antipode(h));
  rep.merge(check_relation_compatibility(h));
  return rep;
}

}  // namespace ckhopf
