#include "ckhopf/coeff.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "lexer.hpp"

namespace ckhopf {

SymbolTable::SymbolTable(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.size() > kMaxSymbols) throw std::invalid_argument("too many symbols");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[i].name == entries_[j].name)
        throw std::invalid_argument("duplicate symbol " + entries_[i].name);
    }
  }
  // kappa parameters must be k1..kn, contiguous
  while (index_of("k" + std::to_string(kappa_count_ + 1))) ++kappa_count_;
  for (const auto& e : entries_) {
    if (e.name.size() > 1 && e.name[0] == 'k' && std::isdigit(static_cast<unsigned char>(e.name[1]))) {
      int l = std::stoi(e.name.substr(1));
      if (l < 1 || l > kappa_count_) throw std::invalid_argument("kappa indices not contiguous");
      if (e.invertible) throw std::invalid_argument("kappa parameters are not invertible");
    }
  }
}

std::shared_ptr<const SymbolTable> SymbolTable::standard(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const SymbolTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    std::vector<Entry> e{{"lambda", true}, {"c", true}};
    for (int l = 1; l <= n; ++l) e.push_back({"k" + std::to_string(l), false});
    slot = std::make_shared<const SymbolTable>(std::move(e));
  }
  return slot;
}

std::optional<std::size_t> SymbolTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t SymbolTable::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown symbol " + name);
  return *i;
}

std::size_t SymbolTable::kappa_index(int l) const {
  if (l < 1 || l > kappa_count_) throw std::out_of_range("kappa index " + std::to_string(l));
  return require("k" + std::to_string(l));
}

bool SymbolTable::operator==(const SymbolTable& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name != other.entries_[i].name || entries_[i].invertible != other.entries_[i].invertible)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

Exponents zero_exps() {
  Exponents e{};
  e.fill(0);
  return e;
}

bool is_zero_exps(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](std::int8_t v) { return v == 0; });
}

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < r.size(); ++i) {
    int v = int(a[i]) + int(b[i]);
    if (v > 127 || v < -128) throw std::overflow_error("symbol exponent overflow");
    r[i] = static_cast<std::int8_t>(v);
  }
  return r;
}

}  // namespace

Coefficient::Coefficient(long value) : Coefficient(Rational(value)) {}

Coefficient::Coefficient(const Rational& value) {
  if (value != 0) {
    terms_.emplace_back(zero_exps(), value);
    terms_.back().second.canonicalize();
  }
}

Coefficient::Coefficient(SymbolTablePtr table, std::vector<Term> terms)
    : table_(std::move(table)), terms_(std::move(terms)) {
  normalize_terms();
}

Coefficient Coefficient::symbol(const SymbolTablePtr& table, const std::string& name, int power) {
  auto idx = table->require(name);
  if (power < 0 && !table->entry(idx).invertible)
    throw std::domain_error("negative power of non-invertible symbol " + name);
  Exponents e = zero_exps();
  e[idx] = static_cast<std::int8_t>(power);
  return Coefficient(table, {{e, Rational(1)}});
}

Coefficient Coefficient::monomial(const SymbolTablePtr& table, const Exponents& exps, const Rational& value) {
  return Coefficient(table, {{exps, value}});
}

void Coefficient::normalize_terms() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    t.second.canonicalize();
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(out);
  if (table_) {
    for (const auto& [e, v] : terms_) {
      for (std::size_t i = 0; i < SymbolTable::kMaxSymbols; ++i) {
        if (e[i] == 0) continue;
        if (i >= table_->size()) throw std::out_of_range("exponent outside symbol table");
        if (e[i] < 0 && !table_->entry(i).invertible)
          throw std::domain_error("negative power of non-invertible symbol " + table_->entry(i).name);
      }
    }
  }
}

SymbolTablePtr Coefficient::join(const SymbolTablePtr& a, const SymbolTablePtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || *a == *b) return a;
  throw SymbolMismatch("coefficients over different symbol tables");
}

bool Coefficient::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_zero_exps(terms_[0].first));
}

Rational Coefficient::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::domain_error("coefficient is not constant: " + to_string());
  return terms_[0].second;
}

bool Coefficient::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const auto& e = terms_[0].first;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0 && !(table_ && table_->entry(i).invertible)) return false;
  }
  return true;
}

Coefficient Coefficient::operator-() const {
  Coefficient r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
  if (other.terms_.empty()) return *this;
  table_ = join(table_, other.table_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      merged.push_back(*j++);
    } else {
      Rational s = i->second + j->second;
      if (s != 0) merged.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& other) { return *this += -other; }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  Coefficient r;
  r.table_ = Coefficient::join(a.table_, b.table_);
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, va] : a.terms_) {
    for (const auto& [eb, vb] : b.terms_) r.terms_.emplace_back(add_exps(ea, eb), va * vb);
  }
  if (a.terms_.size() > 1 && b.terms_.size() > 1) {
    r.normalize_terms();
  } else {
    // exponent shift by a single monomial preserves order
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Coefficient::Term& x, const Coefficient::Term& y) { return x.first < y.first; });
  }
  return r;
}

Coefficient& Coefficient::operator*=(const Coefficient& other) {
  *this = *this * other;
  return *this;
}

Coefficient Coefficient::inverse() const {
  if (!is_unit_monomial()) throw std::domain_error("coefficient is not invertible: " + to_string());
  Exponents e{};
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::int8_t>(-terms_[0].first[i]);
  return Coefficient(table_, {{e, Rational(1) / terms_[0].second}});
}

Coefficient Coefficient::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Coefficient r(1);
  Coefficient base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

std::pair<int, int> Coefficient::exponent_range(std::size_t idx) const {
  if (terms_.empty()) return {0, 0};
  int lo = 127, hi = -128;
  for (const auto& [e, v] : terms_) {
    lo = std::min<int>(lo, e[idx]);
    hi = std::max<int>(hi, e[idx]);
  }
  return {lo, hi};
}

Coefficient Coefficient::part_with_exponent(std::size_t idx, int power) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.first[idx] == power) out.push_back(t);
  }
  return Coefficient(table_, std::move(out));
}

bool Coefficient::contains_symbol(std::size_t idx) const {
  return std::any_of(terms_.begin(), terms_.end(), [idx](const Term& t) { return t.first[idx] != 0; });
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && a.table_ && b.table_ && a.table_ != b.table_ && !(*a.table_ == *b.table_))
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
  }
  return true;
}

bool operator<(const Coefficient& a, const Coefficient& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const Coefficient::Term& x, const Coefficient::Term& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

namespace {

std::string symbol_name(const SymbolTablePtr& table, std::size_t i) {
  return table ? table->entry(i).name : "s" + std::to_string(i);
}

std::string latex_symbol(const std::string& name) {
  if (name == "lambda") return "\\lambda";
  if (name.size() > 1 && name[0] == 'k') return "\\kappa_{" + name.substr(1) + "}";
  return name;
}

}  // namespace

std::string Coefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : terms_) {
    Rational mag = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    bool any_symbol = !is_zero_exps(e);
    bool wrote = false;
    if (mag != 1 || !any_symbol) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << symbol_name(table_, i);
      if (e[i] != 1) os << "^" << int(e[i]);
      wrote = true;
    }
  }
  return os.str();
}

std::string Coefficient::to_latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : terms_) {
    Rational mag = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    bool any_symbol = !is_zero_exps(e);
    if (mag.get_den() != 1) {
      os << "\\tfrac{" << mag.get_num().get_str() << "}{" << mag.get_den().get_str() << "}";
    } else if (mag != 1 || !any_symbol) {
      os << mag.get_str();
    }
    std::string prev;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string sym = latex_symbol(symbol_name(table_, i));
      // a control word like \lambda needs a separator before a letter
      if (!prev.empty() && prev.front() == '\\' && prev.back() != '}') os << ' ';
      os << sym;
      prev = sym;
      if (e[i] != 1) {
        os << "^{" << int(e[i]) << "}";
        prev += "}";
      }
    }
  }
  return os.str();
}

Coefficient specialize(const Coefficient& a, const Bindings& bindings) {
  if (a.is_zero()) return a;
  const auto& table = a.table();
  for (const auto& [idx, value] : bindings) {
    if (table && idx >= table->size()) throw std::out_of_range("binding outside symbol table");
    if (table && table->entry(idx).invertible) {
      if (value.is_zero())
        throw std::domain_error("cannot bind invertible symbol " + table->entry(idx).name + " to 0");
    }
  }
  Coefficient result;
  for (const auto& [e, v] : a.terms()) {
    Exponents rest = e;
    Coefficient factor(v);
    for (const auto& [idx, value] : bindings) {
      int p = e[idx];
      if (p == 0) continue;
      rest[idx] = 0;
      if (p < 0 && !value.is_unit_monomial())
        throw std::domain_error("negative power bound to a non-invertible value");
      factor *= value.pow(p);
    }
    result += factor * Coefficient::monomial(table, rest, Rational(1));
  }
  return result;
}

namespace {

Coefficient parse_sum(detail::TokenStream& ts, const SymbolTablePtr& table);

Coefficient parse_factor(detail::TokenStream& ts, const SymbolTablePtr& table) {
  using detail::Tok;
  if (ts.peek().kind == Tok::Number) {
    Rational v(ts.next().text);
    int p = ts.exponent();
    return Coefficient(v).pow(p);
  }
  if (ts.peek().kind == Tok::Name) {
    std::string name = ts.next().text;
    int p = ts.exponent();
    return Coefficient::symbol(table, name, p);
  }
  if (ts.accept(Tok::LParen)) {
    Coefficient inner = parse_sum(ts, table);
    ts.expect(Tok::RParen, "')'");
    return inner.pow(ts.exponent());
  }
  ts.fail("expected coefficient factor");
}

Coefficient parse_product(detail::TokenStream& ts, const SymbolTablePtr& table) {
  using detail::Tok;
  Coefficient r = parse_factor(ts, table);
  while (true) {
    if (ts.accept(Tok::Star)) {
      r *= parse_factor(ts, table);
    } else if (ts.accept(Tok::Slash)) {
      r *= parse_factor(ts, table).inverse();
    } else {
      return r;
    }
  }
}

Coefficient parse_sum(detail::TokenStream& ts, const SymbolTablePtr& table) {
  using detail::Tok;
  bool neg = ts.accept(Tok::Minus);
  if (!neg) ts.accept(Tok::Plus);
  Coefficient r = parse_product(ts, table);
  if (neg) r = -r;
  while (true) {
    if (ts.accept(Tok::Plus)) {
      r += parse_product(ts, table);
    } else if (ts.accept(Tok::Minus)) {
      r -= parse_product(ts, table);
    } else {
      return r;
    }
  }
}

}  // namespace

Coefficient parse_coefficient(const SymbolTablePtr& table, const std::string& text) {
  detail::TokenStream ts(text);
  Coefficient r = parse_sum(ts, table);
  if (ts.peek().kind != detail::Tok::End) ts.fail("trailing input");
  return r;
}

}  // namespace ckhopf
