#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ckhopf/coeff.hpp"
#include "ckhopf/report.hpp"

namespace ckhopf {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// E^e times an ordered generator word. In normal form the word is
/// nondecreasing in generator order (strictly increasing at letters that
/// carry a square rule).
struct Monomial {
  int e = 0;
  Word word;

  std::size_t degree() const { return word.size(); }
  bool is_one() const { return e == 0 && word.empty(); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Degree-lexicographic: word length, then word, then E power.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.word != b.word) return a.word < b.word;
    return a.e < b.e;
  }
};

using Terms = std::map<Monomial, Coefficient, MonomialLess>;

enum class GenKind { P, J, Other };

struct Generator {
  std::string name;
  GenKind kind = GenKind::Other;
  int a = 0;  // J(a,b); P(i) has a=0, b=i
  int b = 0;
  std::string latex;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class NCElement {
 public:
  NCElement() = default;
  explicit NCElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  NCElement(AlgebraPtr alg, const Coefficient& scalar);
  NCElement(AlgebraPtr alg, Terms terms);

  static NCElement monomial(AlgebraPtr alg, Monomial m, const Coefficient& c = Coefficient(1));
  static NCElement gen(const AlgebraPtr& alg, const std::string& name, int power = 1);
  static NCElement gen(const AlgebraPtr& alg, Letter x, int power = 1);
  static NCElement E(const AlgebraPtr& alg, int k);

  const AlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  /// Coefficient of the unit monomial.
  Coefficient scalar_part() const;
  Coefficient coefficient_of(const Monomial& m) const;
  std::size_t max_degree() const;

  void add_term(const Monomial& m, const Coefficient& c);

  NCElement operator-() const;
  NCElement& operator+=(const NCElement& o);
  NCElement& operator-=(const NCElement& o);
  NCElement& operator*=(const Coefficient& c);
  friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  friend NCElement operator*(NCElement a, const Coefficient& c) { return a *= c; }
  friend NCElement operator*(const Coefficient& c, NCElement a) { return a *= c; }
  friend NCElement operator*(const NCElement& a, const NCElement& b);
  friend bool operator==(const NCElement& a, const NCElement& b);

  /// Same element over another algebra with identical generator names.
  NCElement transported(const AlgebraPtr& target) const;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  friend class Algebra;
  AlgebraPtr alg_;
  Terms terms_;
};

NCElement commutator(const NCElement& a, const NCElement& b);
NCElement specialize(const NCElement& a, const Bindings& bindings);
NCElement pow(const NCElement& a, int n);

/// Algebra mismatch between operands.
class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finitely presented algebra over the coefficient ring, given by a swap
/// rule table in a fixed PBW order, optionally with the invertible
/// group-like generator E which is kept outside the word.
class Algebra {
 public:
  Algebra(std::string id, SymbolTablePtr table, std::vector<Generator> gens, bool has_E);

  const std::string& id() const { return id_; }
  const SymbolTablePtr& table() const { return table_; }
  bool has_E() const { return has_E_; }
  std::size_t size() const { return gens_.size(); }
  const Generator& gen(Letter x) const { return gens_.at(x); }
  const std::vector<Generator>& generators() const { return gens_; }
  std::optional<Letter> find(const std::string& name) const;
  Letter require(const std::string& name) const;
  std::optional<Letter> find_P(int i) const;
  std::optional<Letter> find_J(int a, int b) const;

  /// x·y -> image for x > y, or x == y (square rule: x·x is then never normal).
  void set_rule(Letter x, Letter y, const NCElement& image);
  void set_commuting(Letter x, Letter y);
  /// x·E^k = E^k·(x + k·d); d must be E-free and commute with E.
  void set_e_shift(Letter x, const NCElement& d);

  const Terms* rule(Letter x, Letter y) const;
  const Terms& e_shift(Letter x) const { return shifts_.at(x); }
  bool has_square_rule(Letter x) const { return rule(x, x) != nullptr; }

  /// Generator pairs (x >= y) lacking a rule; x == y pairs are optional and not listed.
  std::vector<std::pair<Letter, Letter>> missing_rules() const;
  /// Rule images whose words are not strictly degree-lex smaller than x·y.
  std::vector<std::pair<Letter, Letter>> non_decreasing_rules() const;

  Terms multiply(const Terms& a, const Terms& b) const;
  Terms multiply_monomials(const Monomial& a, const Monomial& b) const;

  std::string word_text(const Word& w) const;
  std::string monomial_text(const Monomial& m) const;
  std::string monomial_latex(const Monomial& m) const;

 private:
  struct WordLetterHash {
    std::size_t operator()(const std::pair<Word, Letter>& k) const;
  };
  struct WordIntHash {
    std::size_t operator()(const std::pair<Word, int>& k) const;
  };

  void clear_caches();
  const Terms& word_letter(const Word& w, Letter y) const;
  const Terms& shifted_word(const Word& w, int k) const;
  void mul_into(Terms& out, const Terms& left, const Word& right, const Coefficient& scale, int e_offset) const;

  std::string id_;
  SymbolTablePtr table_;
  std::vector<Generator> gens_;
  bool has_E_;
  std::map<std::string, Letter> by_name_;
  std::vector<std::vector<std::optional<Terms>>> rules_;
  std::vector<Terms> shifts_;
  std::vector<bool> shift_free_;

  mutable std::mutex cache_mu_;
  mutable std::unordered_map<std::pair<Word, Letter>, Terms, WordLetterHash> wl_cache_;
  mutable std::unordered_map<std::pair<Word, int>, Terms, WordIntHash> shift_cache_;
};

/// Algebra morphism fixed by the images of the generators and of E^{+1}, E^{-1}.
class AlgebraMorphism {
 public:
  AlgebraMorphism() = default;
  AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<NCElement> images, NCElement e_image = {},
                  NCElement e_inv_image = {});

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const NCElement& image(Letter x) const { return images_.at(x); }

  NCElement operator()(const NCElement& x) const;
  NCElement apply(const Monomial& m) const;

 private:
  AlgebraPtr source_, target_;
  std::vector<NCElement> images_;
  NCElement e_image_, e_inv_image_;
  struct Cache {
    std::mutex mu;
    std::map<Monomial, NCElement, MonomialLess> memo;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Parses `-1/2*lambda*E^-2*P1^2 + (1 - k2)*J12`. Juxtaposition is
/// multiplication; `aliases` supplies extra names (e.g. physical labels).
NCElement parse_element(const AlgebraPtr& alg, const std::string& text,
                        const std::map<std::string, NCElement>& aliases = {});

// ---------------------------------------------------------------------------
// Independent reduction strategies on raw words, for confluence testing.

/// Raw token: generator letter (>= 0), kTokE for E, kTokEinv for E^-1.
constexpr int kTokE = -1;
constexpr int kTokEinv = -2;
using TokenWord = std::vector<int>;

enum class Strategy { Leftmost, Rightmost };

/// Rewrites one redex at a time until no redex is left. Throws
/// std::runtime_error when `step_budget` is exhausted.
Terms rewrite(const Algebra& alg, const TokenWord& w, Strategy s, std::size_t step_budget = 1000000);

/// Product of the tokens through the memoized multiplication.
Terms multiply_tokens(const Algebra& alg, const TokenWord& w);

std::string token_word_text(const Algebra& alg, const TokenWord& w);

/// Random words of length 1..max_degree reduced under both strategies and the
/// fast path, plus every overlap x·y·z with x >= y >= z.
VerificationReport check_confluence_sample(const AlgebraPtr& alg, std::size_t samples, std::size_t max_degree,
                                           std::uint64_t seed);

/// Jacobi identity on all generator triples.
VerificationReport check_jacobi(const AlgebraPtr& alg);

}  // namespace ckhopf
