#include "ckhopf/tensor.hpp"

#include <algorithm>

#include "element_parser.hpp"

namespace ckhopf {

namespace {

void accumulate(TensorElement::Map& t, TensorElement::Key&& k, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

// Expands slot-wise term lists into the cartesian sum.
void expand(const std::vector<const Terms*>& slots, std::size_t i, TensorElement::Key& key, const Coefficient& c,
            TensorElement::Map& out) {
  if (i == slots.size()) {
    TensorElement::Key k = key;
    accumulate(out, std::move(k), c);
    return;
  }
  for (const auto& [m, mc] : *slots[i]) {
    key.push_back(m);
    expand(slots, i + 1, key, c * mc, out);
    key.pop_back();
  }
}

}  // namespace

TensorElement TensorElement::pure(const std::vector<NCElement>& factors) {
  AlgebraPtr alg;
  for (const auto& f : factors) {
    if (!alg) alg = f.algebra();
    if (f.algebra() && f.algebra() != alg) throw AlgebraMismatch("tensor factors from different algebras");
  }
  TensorElement r(alg, factors.size());
  std::vector<const Terms*> slots;
  for (const auto& f : factors) slots.push_back(&f.terms());
  Key key;
  expand(slots, 0, key, Coefficient(1), r.terms_);
  return r;
}

TensorElement TensorElement::unit(const AlgebraPtr& alg, std::size_t arity) {
  TensorElement r(alg, arity);
  r.terms_.emplace(Key(arity), Coefficient(1));
  return r;
}

TensorElement TensorElement::scalar(const AlgebraPtr& alg, const Coefficient& c) {
  TensorElement r(alg, 0);
  if (!c.is_zero()) r.terms_.emplace(Key{}, c);
  return r;
}

void TensorElement::add_term(const Key& k, const Coefficient& c) {
  if (k.size() != arity_) throw std::invalid_argument("tensor key arity mismatch");
  Key copy = k;
  accumulate(terms_, std::move(copy), c);
}

void TensorElement::check_compatible(const TensorElement& o) const {
  if (arity_ != o.arity_) {
    throw std::invalid_argument("tensor arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(o.arity_));
  }
  if (alg_ && o.alg_ && alg_ != o.alg_) throw AlgebraMismatch("tensors over different algebras");
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  check_compatible(o);
  if (!alg_) alg_ = o.alg_;
  for (const auto& [k, c] : o.terms_) {
    Key copy = k;
    accumulate(terms_, std::move(copy), c);
  }
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) { return *this += -o; }

TensorElement& TensorElement::operator*=(const Coefficient& c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.arity_ != b.arity_) return false;
  if (a.alg_ && b.alg_ && a.alg_ != b.alg_) return false;
  return a.terms_ == b.terms_;
}

TensorElement TensorElement::transported(const AlgebraPtr& target) const {
  TensorElement r(target, arity_);
  for (const auto& [k, c] : terms_) {
    std::vector<NCElement> f;
    for (const auto& m : k) f.push_back(NCElement::monomial(alg_, m).transported(target));
    r += pure(f) * c;
  }
  return r;
}

namespace {

template <class Render>
std::string render_tensor(const TensorElement& t, Render slot_text, const std::string& sep) {
  if (t.is_zero()) return "0";
  const auto& alg = t.algebra();
  std::string s;
  for (const auto& [k, c] : t.terms()) {
    std::string ct = c.to_string();
    bool negative = false;
    std::string body;
    if (c.terms().size() > 1) {
      body = "(" + ct + ")";
    } else {
      if (ct[0] == '-') {
        negative = true;
        ct.erase(0, 1);
      }
      if (ct != "1") body = ct;
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
      std::string m = slot_text(*alg, k[i]);
      if (i == 0) {
        if (body.empty()) {
          body = m;
        } else if (m != "1") {
          body += "*" + m;
        }
      } else {
        body += sep + m;
      }
    }
    if (k.empty() && body.empty()) body = "1";
    if (s.empty()) {
      s = negative ? "-" + body : body;
    } else {
      s += negative ? " - " + body : " + " + body;
    }
  }
  return s;
}

}  // namespace

std::string TensorElement::to_string() const {
  return render_tensor(*this, [](const Algebra& a, const Monomial& m) { return a.monomial_text(m); }, " (x) ");
}

std::string TensorElement::to_latex() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    std::string ct = c.to_latex();
    bool negative = false;
    std::string body;
    if (c.terms().size() > 1) {
      body = "\\left(" + ct + "\\right)";
    } else {
      if (ct[0] == '-') {
        negative = true;
        ct.erase(0, 1);
      }
      if (ct != "1") body = ct;
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
      std::string m = alg_->monomial_latex(k[i]);
      if (i == 0) {
        if (body.empty()) {
          body = m;
        } else if (m != "1") {
          body += "\\," + m;
        }
      } else {
        body += " \\otimes " + m;
      }
    }
    if (s.empty()) {
      s = negative ? "-" + body : body;
    } else {
      s += negative ? " - " + body : " + " + body;
    }
  }
  return s;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("tensor_mul: arity mismatch");
  AlgebraPtr alg = a.algebra() ? a.algebra() : b.algebra();
  if (a.algebra() && b.algebra() && a.algebra() != b.algebra()) throw AlgebraMismatch("tensor_mul: algebra mismatch");
  TensorElement::Map out;
  std::vector<Terms> prods(a.arity());
  std::vector<const Terms*> slots(a.arity());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      for (std::size_t i = 0; i < ka.size(); ++i) {
        prods[i] = alg->multiply_monomials(ka[i], kb[i]);
        slots[i] = &prods[i];
      }
      TensorElement::Key key;
      expand(slots, 0, key, ca * cb, out);
    }
  }
  TensorElement r(alg, a.arity());
  for (auto& [k, c] : out) r.add_term(k, c);
  return r;
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
  AlgebraPtr alg = a.algebra() ? a.algebra() : b.algebra();
  TensorElement r(alg, a.arity() + b.arity());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      TensorElement::Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add_term(k, ca * cb);
    }
  }
  return r;
}

TensorElement flip(const TensorElement& t) {
  if (t.arity() != 2) throw std::invalid_argument("flip needs arity 2");
  TensorElement r(t.algebra(), 2);
  for (const auto& [k, c] : t.terms()) r.add_term({k[1], k[0]}, c);
  return r;
}

NCElement multiply_slots(const TensorElement& t, bool reversed) {
  const auto& alg = t.algebra();
  NCElement r(alg);
  for (const auto& [k, c] : t.terms()) {
    Terms acc;
    acc.emplace(Monomial{}, c);
    for (std::size_t i = 0; i < k.size(); ++i) {
      const Monomial& m = reversed ? k[k.size() - 1 - i] : k[i];
      Terms rhs;
      rhs.emplace(m, Coefficient(1));
      acc = alg->multiply(acc, rhs);
    }
    r += NCElement(alg, std::move(acc));
  }
  return r;
}

SlotMap SlotMap::identity(const AlgebraPtr& alg) {
  SlotMap m;
  m.kind = Kind::Identity;
  m.name = "id";
  m.out_arity = 1;
  m.target = alg;
  m.image = [alg](const Monomial& mono) { return TensorElement::pure({NCElement::monomial(alg, mono)}); };
  return m;
}

TensorElement apply_slotwise(const std::vector<SlotMap>& maps, const TensorElement& t) {
  if (maps.size() != t.arity()) throw std::invalid_argument("apply_slotwise: slot count mismatch");
  std::size_t out_arity = 0;
  AlgebraPtr target = t.algebra();
  for (const auto& m : maps) {
    if (!m.image) throw std::invalid_argument("apply_slotwise: unregistered map " + m.name);
    out_arity += m.out_arity;
    if (m.out_arity > 0 && m.target) target = m.target;
  }
  TensorElement r(target, out_arity);
  for (const auto& [k, c] : t.terms()) {
    TensorElement acc = TensorElement::scalar(target, c);
    for (std::size_t i = 0; i < k.size(); ++i) {
      TensorElement img = maps[i].image(k[i]);
      if (img.arity() != maps[i].out_arity) throw std::logic_error("slot map " + maps[i].name + " arity mismatch");
      acc = tensor_product(acc, img);
    }
    r += acc;
  }
  return r;
}

TensorElement parse_tensor(const AlgebraPtr& alg, const std::string& text, const std::map<std::string, NCElement>& aliases) {
  using detail::Tok;
  detail::TokenStream ts(text);
  TensorElement r;
  bool first = true;
  while (true) {
    bool neg = false;
    if (first) {
      neg = ts.accept(Tok::Minus);
      if (!neg) ts.accept(Tok::Plus);
    } else if (ts.accept(Tok::Minus)) {
      neg = true;
    } else if (!ts.accept(Tok::Plus)) {
      break;
    }
    std::vector<NCElement> slots{detail::parse_element_product(ts, alg, aliases)};
    while (ts.accept(Tok::Tensor)) slots.push_back(detail::parse_element_product(ts, alg, aliases));
    for (auto& s : slots) s = NCElement(alg, s.terms());
    TensorElement term = TensorElement::pure(slots);
    if (neg) term = -term;
    if (first) {
      r = term;
    } else {
      r += term;
    }
    first = false;
  }
  if (ts.peek().kind != Tok::End) ts.fail("trailing input");
  return r;
}

}  // namespace ckhopf
