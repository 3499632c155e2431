#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ckhopf/ncalg.hpp"
#include "ckhopf/report.hpp"
#include "ckhopf/tensor.hpp"

namespace ckhopf {

/// Coalgebra data on the generators of an algebra. E, when present, is
/// group-like: Δ(E) = E⊗E, ε(E) = 1, S(E) = E^-1.
class Hopf {
 public:
  explicit Hopf(AlgebraPtr alg);
  Hopf(const Hopf& other);
  Hopf& operator=(const Hopf&) = delete;

  const AlgebraPtr& algebra() const { return alg_; }
  const std::string& id() const { return alg_->id(); }

  void set_coproduct(Letter x, const TensorElement& t);
  void set_counit(Letter x, const Coefficient& c);
  void set_antipode(Letter x, const NCElement& s);
  void set_coproduct(const std::string& name, const std::string& text);
  void set_antipode(const std::string& name, const std::string& text);

  const TensorElement& coproduct_image(Letter x) const { return delta_.at(x); }
  const Coefficient& counit_image(Letter x) const { return eps_.at(x); }
  const NCElement& antipode_image(Letter x) const { return s_.at(x); }
  /// Every generator has Δ and S images.
  bool complete() const;

  TensorElement coproduct(const Monomial& m) const;
  TensorElement coproduct(const NCElement& x) const;
  Coefficient counit(const Monomial& m) const;
  Coefficient counit(const NCElement& x) const;
  NCElement antipode(const Monomial& m) const;
  NCElement antipode(const NCElement& x) const;

  SlotMap coproduct_map() const;
  SlotMap counit_map() const;
  SlotMap antipode_map() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<Word, TensorElement> delta;
    std::map<Word, NCElement> s;
  };

  AlgebraPtr alg_;
  std::vector<TensorElement> delta_;
  std::vector<Coefficient> eps_;
  std::vector<NCElement> s_;
  std::vector<bool> has_delta_, has_s_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using HopfPtr = std::shared_ptr<const Hopf>;

/// Δ, ε, S respect every rewrite rule and E-shift of the presentation.
VerificationReport check_relation_compatibility(const Hopf& h);
/// (Δ⊗id)Δ(g) = (id⊗Δ)Δ(g) for every generator (and E).
VerificationReport check_coassociativity(const Hopf& h);
/// (ε⊗id)Δ(g) = g = (id⊗ε)Δ(g).
VerificationReport check_counit(const Hopf& h);
/// m(S⊗id)Δ(g) = ε(g)1 = m(id⊗S)Δ(g).
VerificationReport check_antipode(const Hopf& h);
/// All four checks.
VerificationReport check_hopf(const Hopf& h);

}  // namespace ckhopf
