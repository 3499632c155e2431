#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ckhopf {

using Rational = mpq_class;

/// Thrown when two coefficients built over different symbol tables meet.
class SymbolMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered list of the named symbols a coefficient may contain.
///
/// Invertible symbols (lambda, c) may carry negative exponents; the
/// kappa parameters k1..kN are polynomial variables.
class SymbolTable {
 public:
  static constexpr std::size_t kMaxSymbols = 12;

  struct Entry {
    std::string name;
    bool invertible = false;
  };

  explicit SymbolTable(std::vector<Entry> entries);

  /// Shared table for dimension n: lambda, c, k1..kn. Cached per n so
  /// every algebra of the same dimension shares one pointer.
  static std::shared_ptr<const SymbolTable> standard(int n);

  std::size_t size() const { return entries_.size(); }
  const Entry& entry(std::size_t i) const { return entries_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require(const std::string& name) const;

  /// Number of kappa parameters (k1..kn) registered; 0 if none.
  int kappa_count() const { return kappa_count_; }
  std::size_t kappa_index(int l) const;
  std::size_t lambda_index() const { return require("lambda"); }

  bool operator==(const SymbolTable& other) const;

 private:
  std::vector<Entry> entries_;
  int kappa_count_ = 0;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;
using Exponents = std::array<std::int8_t, SymbolTable::kMaxSymbols>;

/// Element of the coefficient ring Q[lambda^+-1, c^+-1][k1..kN].
///
/// Terms are kept sorted by exponent vector; zero rationals are never
/// stored. A coefficient with no symbols may have a null table and then
/// combines with coefficients over any table.
class Coefficient {
 public:
  using Term = std::pair<Exponents, Rational>;

  Coefficient() = default;
  Coefficient(long value);  // NOLINT(google-explicit-constructor)
  Coefficient(const Rational& value);  // NOLINT(google-explicit-constructor)
  Coefficient(SymbolTablePtr table, std::vector<Term> terms);

  static Coefficient symbol(const SymbolTablePtr& table, const std::string& name, int power = 1);
  static Coefficient monomial(const SymbolTablePtr& table, const Exponents& exps, const Rational& value);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Rational value if constant; throws otherwise.
  Rational constant_value() const;
  /// Single term whose symbols are all invertible.
  bool is_unit_monomial() const;

  const std::vector<Term>& terms() const { return terms_; }
  const SymbolTablePtr& table() const { return table_; }

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& other);
  Coefficient& operator-=(const Coefficient& other);
  Coefficient& operator*=(const Coefficient& other);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);

  /// Inverse of a unit monomial; throws std::domain_error otherwise.
  Coefficient inverse() const;
  Coefficient pow(int n) const;

  /// Smallest and largest exponent of symbol `idx` over all terms.
  std::pair<int, int> exponent_range(std::size_t idx) const;
  /// Terms whose exponent of symbol `idx` equals `power`.
  Coefficient part_with_exponent(std::size_t idx, int power) const;
  bool contains_symbol(std::size_t idx) const;

  friend bool operator==(const Coefficient& a, const Coefficient& b);
  friend bool operator<(const Coefficient& a, const Coefficient& b);

  /// Canonical text, e.g. `1/2*lambda*k2 - c^-2`.
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void normalize_terms();
  static SymbolTablePtr join(const SymbolTablePtr& a, const SymbolTablePtr& b);

  SymbolTablePtr table_;
  std::vector<Term> terms_;
};

/// Symbol index -> value.
using Bindings = std::map<std::size_t, Coefficient>;

/// Substitutes symbols by coefficients. Invertible symbols with negative
/// exponents require unit-monomial bindings; binding one to zero throws.
Coefficient specialize(const Coefficient& a, const Bindings& bindings);

/// Parses a coefficient such as `-1/2*lambda^-1*k2` or `-c^-2`.
Coefficient parse_coefficient(const SymbolTablePtr& table, const std::string& text);

}  // namespace ckhopf
