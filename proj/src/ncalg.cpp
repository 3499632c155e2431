#include "ckhopf/ncalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "element_parser.hpp"

namespace ckhopf {

namespace {

void accumulate(Terms& t, const Monomial& m, const Coefficient& c) {
  if (c.is_zero()) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

void accumulate(Terms& t, Monomial&& m, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

const AlgebraPtr& join(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  throw AlgebraMismatch("elements of different algebras: " + a->id() + " vs " + b->id());
}

std::size_t hash_word(const Word& w, std::size_t seed) {
  for (Letter x : w) seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(std::string id, SymbolTablePtr table, std::vector<Generator> gens, bool has_E)
    : id_(std::move(id)), table_(std::move(table)), gens_(std::move(gens)), has_E_(has_E) {
  if (gens_.size() > 250) throw std::invalid_argument("too many generators");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == "E") throw std::invalid_argument("generator name E is reserved");
    if (!by_name_.emplace(gens_[i].name, static_cast<Letter>(i)).second)
      throw std::invalid_argument("duplicate generator " + gens_[i].name);
    if (gens_[i].latex.empty()) gens_[i].latex = gens_[i].name;
  }
  rules_.assign(gens_.size(), std::vector<std::optional<Terms>>(gens_.size()));
  shifts_.assign(gens_.size(), Terms{});
  shift_free_.assign(gens_.size(), true);
}

std::optional<Letter> Algebra::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Letter Algebra::require(const std::string& name) const {
  auto x = find(name);
  if (!x) throw std::invalid_argument("unknown generator " + name + " in " + id_);
  return *x;
}

std::optional<Letter> Algebra::find_P(int i) const {
  for (std::size_t x = 0; x < gens_.size(); ++x) {
    if (gens_[x].kind == GenKind::P && gens_[x].b == i) return static_cast<Letter>(x);
  }
  return std::nullopt;
}

std::optional<Letter> Algebra::find_J(int a, int b) const {
  for (std::size_t x = 0; x < gens_.size(); ++x) {
    if (gens_[x].kind == GenKind::J && gens_[x].a == a && gens_[x].b == b) return static_cast<Letter>(x);
  }
  return std::nullopt;
}

void Algebra::clear_caches() {
  std::lock_guard lock(cache_mu_);
  wl_cache_.clear();
  shift_cache_.clear();
}

void Algebra::set_rule(Letter x, Letter y, const NCElement& image) {
  if (x < y) throw std::invalid_argument("rule must have x >= y");
  if (image.algebra() && image.algebra().get() != this)
    throw AlgebraMismatch("rule image from another algebra");
  for (const auto& [m, c] : image.terms()) {
    if (m.e != 0 && !has_E_) throw std::invalid_argument("E power in algebra without E");
  }
  rules_[x][y] = image.terms();
  clear_caches();
}

void Algebra::set_commuting(Letter x, Letter y) {
  Terms t;
  t.emplace(Monomial{0, {y, x}}, Coefficient(1));
  rules_[x][y] = std::move(t);
  clear_caches();
}

void Algebra::set_e_shift(Letter x, const NCElement& d) {
  if (!has_E_) throw std::invalid_argument("E shift in algebra without E");
  for (const auto& [m, c] : d.terms()) {
    if (m.e != 0) throw std::invalid_argument("E shift image must be E-free");
  }
  shifts_[x] = d.terms();
  shift_free_[x] = d.terms().empty();
  clear_caches();
}

const Terms* Algebra::rule(Letter x, Letter y) const {
  const auto& r = rules_.at(x).at(y);
  return r ? &*r : nullptr;
}

std::vector<std::pair<Letter, Letter>> Algebra::missing_rules() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (std::size_t x = 0; x < gens_.size(); ++x) {
    for (std::size_t y = 0; y < x; ++y) {
      if (!rules_[x][y]) out.emplace_back(static_cast<Letter>(x), static_cast<Letter>(y));
    }
  }
  return out;
}

std::vector<std::pair<Letter, Letter>> Algebra::non_decreasing_rules() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (std::size_t x = 0; x < gens_.size(); ++x) {
    for (std::size_t y = 0; y <= x; ++y) {
      if (!rules_[x][y]) continue;
      Word lhs{static_cast<Letter>(x), static_cast<Letter>(y)};
      for (const auto& [m, c] : *rules_[x][y]) {
        bool smaller = m.word.size() < lhs.size() || (m.word.size() == lhs.size() && m.word < lhs);
        if (!smaller) {
          out.emplace_back(static_cast<Letter>(x), static_cast<Letter>(y));
          break;
        }
      }
    }
  }
  return out;
}

std::size_t Algebra::WordLetterHash::operator()(const std::pair<Word, Letter>& k) const {
  return hash_word(k.first, k.second * 1315423911ULL);
}

std::size_t Algebra::WordIntHash::operator()(const std::pair<Word, int>& k) const {
  return hash_word(k.first, static_cast<std::size_t>(k.second) * 2654435761ULL);
}

// Right-multiplies every term of `left` by the letters of `right`, scaling by
// `scale` and adding `e_offset` to the E power, into `out`.
void Algebra::mul_into(Terms& out, const Terms& left, const Word& right, const Coefficient& scale,
                       int e_offset) const {
  Terms cur = left;
  for (Letter y : right) {
    Terms next;
    for (const auto& [m, c] : cur) {
      for (const auto& [m2, c2] : word_letter(m.word, y)) accumulate(next, Monomial{m.e + m2.e, m2.word}, c * c2);
    }
    cur = std::move(next);
  }
  for (auto& [m, c] : cur) accumulate(out, Monomial{m.e + e_offset, m.word}, scale * c);
}

const Terms& Algebra::word_letter(const Word& w, Letter y) const {
  auto key = std::make_pair(w, y);
  {
    std::lock_guard lock(cache_mu_);
    auto it = wl_cache_.find(key);
    if (it != wl_cache_.end()) return it->second;
  }
  Terms result;
  Letter x = w.empty() ? 0 : w.back();
  if (w.empty() || x < y || (x == y && !rules_[x][x])) {
    Word nw = w;
    nw.push_back(y);
    result.emplace(Monomial{0, std::move(nw)}, Coefficient(1));
  } else {
    const auto& r = rules_[x][y];
    if (!r) throw std::logic_error("missing rewrite rule " + gens_[x].name + "*" + gens_[y].name + " in " + id_);
    Word u(w.begin(), w.end() - 1);
    for (const auto& [m, c] : *r) mul_into(result, shifted_word(u, m.e), m.word, c, m.e);
  }
  std::lock_guard lock(cache_mu_);
  return wl_cache_.try_emplace(std::move(key), std::move(result)).first->second;
}

const Terms& Algebra::shifted_word(const Word& u, int k) const {
  bool trivial = k == 0 || std::all_of(u.begin(), u.end(), [&](Letter x) { return shift_free_[x]; });
  if (trivial) k = 0;
  auto key = std::make_pair(u, k);
  {
    std::lock_guard lock(cache_mu_);
    auto it = shift_cache_.find(key);
    if (it != shift_cache_.end()) return it->second;
  }
  Terms result;
  if (trivial) {
    result.emplace(Monomial{0, u}, Coefficient(1));
  } else {
    // u·E^k = E^k·prod_i (u_i + k·d_{u_i})
    result.emplace(Monomial{}, Coefficient(1));
    for (Letter x : u) {
      Terms next;
      mul_into(next, result, Word{x}, Coefficient(1), 0);
      for (const auto& [dm, dc] : shifts_[x]) mul_into(next, result, dm.word, Coefficient(k) * dc, 0);
      result = std::move(next);
    }
  }
  std::lock_guard lock(cache_mu_);
  return shift_cache_.try_emplace(std::move(key), std::move(result)).first->second;
}

Terms Algebra::multiply_monomials(const Monomial& a, const Monomial& b) const {
  Terms out;
  mul_into(out, shifted_word(a.word, b.e), b.word, Coefficient(1), a.e + b.e);
  return out;
}

Terms Algebra::multiply(const Terms& a, const Terms& b) const {
  Terms out;
  for (const auto& [mb, cb] : b) {
    for (const auto& [ma, ca] : a) {
      mul_into(out, shifted_word(ma.word, mb.e), mb.word, ca * cb, ma.e + mb.e);
    }
  }
  return out;
}

std::string Algebra::word_text(const Word& w) const {
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += gens_[w[i]].name;
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string Algebra::monomial_text(const Monomial& m) const {
  std::string s;
  if (m.e != 0) s = m.e == 1 ? "E" : "E^" + std::to_string(m.e);
  std::string w = word_text(m.word);
  if (!w.empty()) s += (s.empty() ? "" : "*") + w;
  return s.empty() ? "1" : s;
}

std::string Algebra::monomial_latex(const Monomial& m) const {
  std::string s;
  if (m.e != 0) s = m.e == 1 ? "E" : "E^{" + std::to_string(m.e) + "}";
  for (std::size_t i = 0; i < m.word.size();) {
    std::size_t j = i;
    while (j < m.word.size() && m.word[j] == m.word[i]) ++j;
    if (!s.empty()) s += " ";
    s += gens_[m.word[i]].latex;
    if (j - i > 1) s += "^{" + std::to_string(j - i) + "}";
    i = j;
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// NCElement

NCElement::NCElement(AlgebraPtr alg, const Coefficient& scalar) : alg_(std::move(alg)) {
  if (!scalar.is_zero()) terms_.emplace(Monomial{}, scalar);
}

NCElement::NCElement(AlgebraPtr alg, Terms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

NCElement NCElement::monomial(AlgebraPtr alg, Monomial m, const Coefficient& c) {
  NCElement r(std::move(alg));
  if (!c.is_zero()) r.terms_.emplace(std::move(m), c);
  return r;
}

NCElement NCElement::gen(const AlgebraPtr& alg, Letter x, int power) {
  if (power < 0) throw std::domain_error("negative power of generator " + alg->gen(x).name);
  NCElement g = monomial(alg, Monomial{0, {x}});
  return pow(g, power);
}

NCElement NCElement::gen(const AlgebraPtr& alg, const std::string& name, int power) {
  if (name == "E") return E(alg, power);
  return gen(alg, alg->require(name), power);
}

NCElement NCElement::E(const AlgebraPtr& alg, int k) {
  if (!alg->has_E()) throw std::invalid_argument("algebra " + alg->id() + " has no E");
  return monomial(alg, Monomial{k, {}});
}

bool NCElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Coefficient NCElement::scalar_part() const { return coefficient_of(Monomial{}); }

Coefficient NCElement::coefficient_of(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient() : it->second;
}

std::size_t NCElement::max_degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void NCElement::add_term(const Monomial& m, const Coefficient& c) { accumulate(terms_, m, c); }

NCElement NCElement::operator-() const {
  NCElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

NCElement& NCElement::operator+=(const NCElement& o) {
  alg_ = join(alg_, o.alg_);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
  alg_ = join(alg_, o.alg_);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
  return *this;
}

NCElement& NCElement::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

NCElement operator*(const NCElement& a, const NCElement& b) {
  const AlgebraPtr& alg = join(a.alg_, b.alg_);
  if (a.is_zero() || b.is_zero()) return NCElement(alg);
  return NCElement(alg, alg->multiply(a.terms_, b.terms_));
}

bool operator==(const NCElement& a, const NCElement& b) {
  if (a.alg_ && b.alg_ && a.alg_ != b.alg_) return false;
  return a.terms_ == b.terms_;
}

NCElement NCElement::transported(const AlgebraPtr& target) const {
  if (!alg_ || alg_ == target) return NCElement(target, terms_);
  std::vector<Letter> map(alg_->size());
  for (std::size_t x = 0; x < alg_->size(); ++x) map[x] = target->require(alg_->gen(static_cast<Letter>(x)).name);
  for (std::size_t x = 1; x < map.size(); ++x) {
    if (map[x] <= map[x - 1]) throw AlgebraMismatch("generator order differs between " + alg_->id() + " and " + target->id());
  }
  NCElement r(target);
  for (const auto& [m, c] : terms_) {
    Word w;
    for (Letter x : m.word) w.push_back(map[x]);
    r.add_term(Monomial{m.e, std::move(w)}, c);
  }
  return r;
}

namespace {

template <class MonoText, class CoeffText>
std::string render(const Terms& terms, MonoText mono, CoeffText coeff, const char* times) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms) {
    std::string body;
    bool negative = false;
    if (m.is_one()) {
      body = coeff(c);
      if (c.terms().size() > 1 && !s.empty()) body = "(" + body + ")";
    } else {
      std::string ct = coeff(c);
      if (c.terms().size() > 1) {
        body = "(" + ct + ")" + times + mono(m);
      } else {
        if (ct[0] == '-') {
          negative = true;
          ct.erase(0, 1);
        }
        body = (ct == "1") ? mono(m) : ct + times + mono(m);
      }
    }
    if (s.empty()) {
      s = negative ? "-" + body : body;
    } else if (negative) {
      s += " - " + body;
    } else if (body[0] == '-') {
      s += " - " + body.substr(1);
    } else {
      s += " + " + body;
    }
  }
  return s;
}

}  // namespace

std::string NCElement::to_string() const {
  if (terms_.empty()) return "0";
  return render(
      terms_, [&](const Monomial& m) { return alg_->monomial_text(m); },
      [](const Coefficient& c) { return c.to_string(); }, "*");
}

std::string NCElement::to_latex() const {
  if (terms_.empty()) return "0";
  return render(
      terms_, [&](const Monomial& m) { return alg_->monomial_latex(m); },
      [](const Coefficient& c) { return c.to_latex(); }, "\\,");
}

NCElement commutator(const NCElement& a, const NCElement& b) { return a * b - b * a; }

NCElement specialize(const NCElement& a, const Bindings& bindings) {
  NCElement r(a.algebra());
  for (const auto& [m, c] : a.terms()) r.add_term(m, specialize(c, bindings));
  return r;
}

NCElement pow(const NCElement& a, int n) {
  if (n < 0) {
    if (a.terms().size() == 1) {
      const auto& [m, c] = *a.terms().begin();
      if (m.word.empty()) return NCElement::monomial(a.algebra(), Monomial{m.e * n, {}}, c.pow(n));
    }
    throw std::domain_error("negative power of non-invertible element");
  }
  NCElement r(a.algebra(), Coefficient(1));
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

// ---------------------------------------------------------------------------
// AlgebraMorphism

AlgebraMorphism::AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<NCElement> images,
                                 NCElement e_image, NCElement e_inv_image)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      e_image_(std::move(e_image)),
      e_inv_image_(std::move(e_inv_image)) {
  if (images_.size() != source_->size()) throw std::invalid_argument("morphism needs one image per generator");
  for (auto& im : images_) im = NCElement(target_, im.terms());
  if (source_->has_E()) {
    if (e_image_.is_zero()) e_image_ = NCElement::E(target_, 1);
    if (e_inv_image_.is_zero()) e_inv_image_ = NCElement::E(target_, -1);
  }
}

NCElement AlgebraMorphism::apply(const Monomial& m) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->memo.find(m);
    if (it != cache_->memo.end()) return it->second;
  }
  NCElement r;
  if (m.is_one()) {
    r = NCElement(target_, Coefficient(1));
  } else if (!m.word.empty()) {
    Monomial prefix{m.e, Word(m.word.begin(), m.word.end() - 1)};
    r = apply(prefix) * images_.at(m.word.back());
  } else {
    int step = m.e > 0 ? 1 : -1;
    r = apply(Monomial{m.e - step, {}}) * (step > 0 ? e_image_ : e_inv_image_);
  }
  std::lock_guard lock(cache_->mu);
  return cache_->memo.try_emplace(m, r).first->second;
}

NCElement AlgebraMorphism::operator()(const NCElement& x) const {
  if (x.algebra() && x.algebra() != source_) throw AlgebraMismatch("morphism applied to element of " + x.algebra()->id());
  NCElement r(target_);
  for (const auto& [m, c] : x.terms()) r += apply(m) * c;
  return r;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

namespace {

NCElement parse_element_factor(TokenStream& ts, const AlgebraPtr& alg, const Aliases& aliases) {
  if (ts.peek().kind == Tok::Number) {
    Rational v(ts.next().text);
    return NCElement(alg, Coefficient(v).pow(ts.exponent()));
  }
  if (ts.peek().kind == Tok::Name) {
    std::string name = ts.next().text;
    int p = ts.exponent();
    if (auto it = aliases.find(name); it != aliases.end()) return pow(it->second, p);
    if (name == "E") return NCElement::E(alg, p);
    if (alg->find(name)) return NCElement::gen(alg, name, p);
    if (alg->table()->index_of(name)) return NCElement(alg, Coefficient::symbol(alg->table(), name, p));
    ts.fail("unknown name '" + name + "'");
  }
  if (ts.accept(Tok::LParen)) {
    NCElement inner = parse_element_sum(ts, alg, aliases);
    ts.expect(Tok::RParen, "')'");
    return pow(inner, ts.exponent());
  }
  ts.fail("expected factor");
}

}  // namespace

NCElement parse_element_product(TokenStream& ts, const AlgebraPtr& alg, const Aliases& aliases) {
  NCElement r = parse_element_factor(ts, alg, aliases);
  while (true) {
    if (ts.accept(Tok::Star)) {
      r = r * parse_element_factor(ts, alg, aliases);
    } else if (ts.accept(Tok::Slash)) {
      NCElement d = parse_element_factor(ts, alg, aliases);
      if (!d.is_scalar()) ts.fail("division by a non-scalar");
      r *= d.scalar_part().inverse();
    } else if (ts.peek().kind == Tok::Name || ts.peek().kind == Tok::LParen) {
      r = r * parse_element_factor(ts, alg, aliases);
    } else {
      return r;
    }
  }
}

NCElement parse_element_sum(TokenStream& ts, const AlgebraPtr& alg, const Aliases& aliases) {
  bool neg = ts.accept(Tok::Minus);
  if (!neg) ts.accept(Tok::Plus);
  NCElement r = parse_element_product(ts, alg, aliases);
  if (neg) r = -r;
  while (true) {
    if (ts.accept(Tok::Plus)) {
      r += parse_element_product(ts, alg, aliases);
    } else if (ts.accept(Tok::Minus)) {
      r -= parse_element_product(ts, alg, aliases);
    } else {
      return r;
    }
  }
}

}  // namespace detail

NCElement parse_element(const AlgebraPtr& alg, const std::string& text, const std::map<std::string, NCElement>& aliases) {
  detail::TokenStream ts(text);
  NCElement r = detail::parse_element_sum(ts, alg, aliases);
  if (ts.peek().kind != detail::Tok::End) ts.fail("trailing input");
  return NCElement(alg, r.terms());
}

// ---------------------------------------------------------------------------
// Strategy rewriting

namespace {

using TokenTerms = std::map<TokenWord, Coefficient>;

void accumulate_tokens(TokenTerms& t, TokenWord&& w, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

bool is_redex(const Algebra& alg, int a, int b) {
  if (a < 0 && b < 0) return a != b;
  if (a < 0) return false;
  if (b < 0) return true;
  return a > b || (a == b && alg.has_square_rule(static_cast<Letter>(a)));
}

void append_monomial(TokenWord& out, const Monomial& m) {
  for (int i = 0; i < std::abs(m.e); ++i) out.push_back(m.e > 0 ? kTokE : kTokEinv);
  out.insert(out.end(), m.word.begin(), m.word.end());
}

Monomial to_monomial(const TokenWord& w) {
  Monomial m;
  for (int t : w) {
    if (t == kTokE) {
      ++m.e;
    } else if (t == kTokEinv) {
      --m.e;
    } else {
      m.word.push_back(static_cast<Letter>(t));
    }
  }
  return m;
}

}  // namespace

Terms rewrite(const Algebra& alg, const TokenWord& w, Strategy s, std::size_t step_budget) {
  TokenTerms work;
  work.emplace(w, Coefficient(1));
  Terms done;
  std::size_t steps = 0;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const TokenWord& cur = node.key();
    const Coefficient& coeff = node.mapped();
    std::ptrdiff_t pos = -1;
    if (s == Strategy::Leftmost) {
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        if (is_redex(alg, cur[i], cur[i + 1])) {
          pos = static_cast<std::ptrdiff_t>(i);
          break;
        }
      }
    } else {
      for (std::size_t i = cur.size(); i-- > 1;) {
        if (is_redex(alg, cur[i - 1], cur[i])) {
          pos = static_cast<std::ptrdiff_t>(i - 1);
          break;
        }
      }
    }
    if (pos < 0) {
      accumulate(done, to_monomial(cur), coeff);
      continue;
    }
    if (++steps > step_budget) throw std::runtime_error("rewrite step budget exceeded on " + token_word_text(alg, w));
    TokenWord prefix(cur.begin(), cur.begin() + pos);
    TokenWord suffix(cur.begin() + pos + 2, cur.end());
    int a = cur[pos], b = cur[pos + 1];
    auto emit = [&](const TokenWord& mid, const Coefficient& c) {
      TokenWord nw = prefix;
      nw.insert(nw.end(), mid.begin(), mid.end());
      nw.insert(nw.end(), suffix.begin(), suffix.end());
      accumulate_tokens(work, std::move(nw), coeff * c);
    };
    if (a < 0 && b < 0) {
      emit({}, Coefficient(1));
    } else if (b < 0) {
      // x·E^{±1} = E^{±1}·(x ± d_x)
      emit({b, a}, Coefficient(1));
      for (const auto& [dm, dc] : alg.e_shift(static_cast<Letter>(a))) {
        TokenWord mid{b};
        append_monomial(mid, dm);
        emit(mid, b == kTokE ? dc : -dc);
      }
    } else {
      const Terms* r = alg.rule(static_cast<Letter>(a), static_cast<Letter>(b));
      if (!r) throw std::logic_error("missing rewrite rule " + alg.gen(a).name + "*" + alg.gen(b).name);
      for (const auto& [m, c] : *r) {
        TokenWord mid;
        append_monomial(mid, m);
        emit(mid, c);
      }
    }
  }
  return done;
}

Terms multiply_tokens(const Algebra& alg, const TokenWord& w) {
  Terms acc;
  acc.emplace(Monomial{}, Coefficient(1));
  for (int t : w) {
    Monomial m = t == kTokE ? Monomial{1, {}} : t == kTokEinv ? Monomial{-1, {}} : Monomial{0, {static_cast<Letter>(t)}};
    Terms rhs;
    rhs.emplace(std::move(m), Coefficient(1));
    acc = alg.multiply(acc, rhs);
  }
  return acc;
}

std::string token_word_text(const Algebra& alg, const TokenWord& w) {
  std::string s;
  for (int t : w) {
    if (!s.empty()) s += "*";
    s += t == kTokE ? "E" : t == kTokEinv ? "E^-1" : alg.gen(static_cast<Letter>(t)).name;
  }
  return s.empty() ? "1" : s;
}

VerificationReport check_confluence_sample(const AlgebraPtr& alg, std::size_t samples, std::size_t max_degree,
                                           std::uint64_t seed) {
  VerificationReport rep(seed);
  std::mt19937_64 rng(seed);
  int n = static_cast<int>(alg->size());
  int alphabet = n + (alg->has_E() ? 2 : 0);
  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, max_degree));
  std::uniform_int_distribution<int> pick(0, alphabet - 1);

  auto compare = [&](const TokenWord& w, const std::string& item) -> bool {
    Terms left = rewrite(*alg, w, Strategy::Leftmost);
    Terms right = rewrite(*alg, w, Strategy::Rightmost);
    Terms fast = multiply_tokens(*alg, w);
    if (left == right && left == fast) return true;
    NCElement diff = NCElement(alg, left) - NCElement(alg, left == right ? fast : right);
    rep.add("confluence", alg->id(), item, false, diff.to_string(), 0,
            "witness " + token_word_text(*alg, w) + (left == right ? " (fast path differs)" : " (strategies differ)"));
    return false;
  };

  auto t0 = std::chrono::steady_clock::now();
  std::size_t bad = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    TokenWord w(len(rng));
    for (auto& t : w) {
      int k = pick(rng);
      t = k < n ? k : (k == n ? kTokE : kTokEinv);
    }
    if (!compare(w, "sample " + std::to_string(i))) ++bad;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rep.add("confluence", alg->id(), std::to_string(samples) + " random words, degree <= " + std::to_string(max_degree),
          bad == 0, bad == 0 ? "0" : std::to_string(bad) + " mismatches", ms);

  t0 = std::chrono::steady_clock::now();
  std::size_t overlaps = 0;
  bad = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y <= x; ++y) {
      if (!is_redex(*alg, x, y)) continue;
      for (int z = 0; z <= y; ++z) {
        if (!is_redex(*alg, y, z)) continue;
        ++overlaps;
        if (!compare({x, y, z}, "overlap")) ++bad;
      }
    }
  }
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rep.add("confluence", alg->id(), std::to_string(overlaps) + " overlaps x*y*z", bad == 0,
          bad == 0 ? "0" : std::to_string(bad) + " mismatches", ms);
  return rep;
}

VerificationReport check_jacobi(const AlgebraPtr& alg) {
  VerificationReport rep;
  std::size_t n = alg->size();
  std::vector<NCElement> g;
  for (std::size_t x = 0; x < n; ++x) g.push_back(NCElement::gen(alg, static_cast<Letter>(x)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      NCElement ij = commutator(g[i], g[j]);
      for (std::size_t k = j + 1; k < n; ++k) {
        rep.record("jacobi", alg->id(), g[i].to_string() + "," + g[j].to_string() + "," + g[k].to_string(), [&] {
          NCElement jac = commutator(ij, g[k]) + commutator(commutator(g[j], g[k]), g[i]) +
                          commutator(commutator(g[k], g[i]), g[j]);
          return jac.to_string();
        });
      }
    }
  }
  return rep;
}

}  // namespace ckhopf
