#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ckhopf/ncalg.hpp"

namespace ckhopf {

/// Finite sum of k-fold tensors of normal-form monomials over one algebra.
/// Arity 0 is allowed as an intermediate (a plain scalar).
class TensorElement {
 public:
  using Key = std::vector<Monomial>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), MonomialLess{});
    }
  };
  using Map = std::map<Key, Coefficient, KeyLess>;

  TensorElement() = default;
  TensorElement(AlgebraPtr alg, std::size_t arity) : alg_(std::move(alg)), arity_(arity) {}

  /// x1 ⊗ x2 ⊗ ... ⊗ xk.
  static TensorElement pure(const std::vector<NCElement>& factors);
  static TensorElement unit(const AlgebraPtr& alg, std::size_t arity);
  static TensorElement scalar(const AlgebraPtr& alg, const Coefficient& c);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t arity() const { return arity_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const Coefficient& c);

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Coefficient& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Coefficient& c) { return a *= c; }
  friend TensorElement operator*(const Coefficient& c, TensorElement a) { return a *= c; }
  friend bool operator==(const TensorElement& a, const TensorElement& b);

  /// Same tensor over another algebra with identical generator names.
  TensorElement transported(const AlgebraPtr& target) const;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  void check_compatible(const TensorElement& o) const;

  AlgebraPtr alg_;
  std::size_t arity_ = 0;
  Map terms_;
};

/// Componentwise product (a1⊗...⊗ak)(b1⊗...⊗bk) = a1b1⊗...⊗akbk.
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);
inline TensorElement operator*(const TensorElement& a, const TensorElement& b) { return tensor_mul(a, b); }

/// Concatenation of slots: arity(a) + arity(b).
TensorElement tensor_product(const TensorElement& a, const TensorElement& b);

/// The transposition τ on an arity-2 tensor.
TensorElement flip(const TensorElement& t);

/// x1 x2 ... xk, or the product in the reversed slot order.
NCElement multiply_slots(const TensorElement& t, bool reversed = false);

/// Linear map applied in one tensor slot, sending a monomial to a tensor of
/// fixed output arity (0 for a counit, 2 for a coproduct).
struct SlotMap {
  enum class Kind { Identity, Morphism, AntiMorphism, Counit };
  Kind kind = Kind::Identity;
  std::string name;
  std::size_t out_arity = 1;
  AlgebraPtr target;
  std::function<TensorElement(const Monomial&)> image;

  static SlotMap identity(const AlgebraPtr& alg);
};

/// Applies `maps[i]` to slot i of every term; arity becomes the sum of output arities.
TensorElement apply_slotwise(const std::vector<SlotMap>& maps, const TensorElement& t);

/// Parses `E^-2 (x) P1 + P1 (x) 1`.
TensorElement parse_tensor(const AlgebraPtr& alg, const std::string& text,
                           const std::map<std::string, NCElement>& aliases = {});

}  // namespace ckhopf
