#include <doctest.h>

#include "ckhopf/ckfactory.hpp"

using namespace ckhopf;

namespace {

void require_pass(const VerificationReport& rep) {
  INFO(rep.summary());
  CHECK(rep.size() > 0);
  CHECK(rep.all_pass());
}

}  // namespace

TEST_CASE("kappa vectors") {
  KVector k = KVector::parse(3, "s,-1");
  CHECK(k.affine());
  CHECK(k.kappa(2).to_string() == "k2");
  CHECK(k.kab(1, 3) == k.kappa(2) * Coefficient(-1));
  CHECK(k.kab(2, 2) == Coefficient(1));
  CHECK_THROWS_AS(KVector::parse(3, "1"), std::invalid_argument);
  require_pass(check_kappa_coherence(KVector::symbolic(4, false)));
}

TEST_CASE("classical brackets agree with the matrix realization") {
  for (const char* csv : {"1,1,1", "0,-1,2", "0,0,0", "-1,1/2,3"}) {
    KVector k = KVector::parse(3, csv);
    require_pass(check_matrix_oracle(build_classical_ck(k), k));
  }
}

TEST_CASE("classical algebras satisfy Jacobi") {
  require_pass(check_jacobi(build_classical_ck(KVector::symbolic(3, false))));
  require_pass(check_jacobi(build_affine(KVector::symbolic(4))));
}

TEST_CASE("deformed new basis is a Hopf algebra") {
  for (int n : {2, 3}) {
    HopfPtr h = build_deformed_new(KVector::symbolic(n));
    require_pass(check_jacobi(h->algebra()));
    require_pass(check_hopf(*h));
    require_pass(check_confluence_sample(h->algebra(), 40, 4, 7));
  }
}

TEST_CASE("deformed old basis is a Hopf algebra") {
  for (int n : {2, 3}) {
    HopfPtr h = build_deformed_old(KVector::symbolic(n));
    require_pass(check_jacobi(h->algebra()));
    require_pass(check_hopf(*h));
    require_pass(check_compact_antipode(*h, KVector::symbolic(n)));
  }
}

TEST_CASE("basis change") {
  for (int n : {2, 3, 4}) {
    KVector k = KVector::symbolic(n);
    require_pass(check_basis_change(make_basis_change(k), k));
  }
}

TEST_CASE("casimirs") {
  KVector k = KVector::symbolic(3);
  require_pass(check_casimir(build_affine(k), k, Flavor::Classical));
  require_pass(check_casimir(build_deformed_new(k)->algebra(), k, Flavor::New));
  require_pass(check_casimir(build_deformed_old(k)->algebra(), k, Flavor::Old));

  BasisChange bc = make_basis_change(k);
  NCElement old_c = casimir(bc.old_basis->algebra(), k, Flavor::Old);
  CHECK(bc.old_in_new(old_c) == casimir(bc.new_basis->algebra(), k, Flavor::New));

  // with e^{-λP_N} in front of P_i^2 the element is not central
  auto a = bc.new_basis->algebra();
  NCElement wrong = casimir(a, k, Flavor::New);
  for (int i = 1; i < 3; ++i) {
    NCElement p = NCElement::gen(a, *a->find_P(i));
    wrong += (NCElement::E(a, -2) - NCElement::E(a, 2)) * p * p * k.kab(i, 3);
  }
  CHECK_FALSE(commutator(NCElement::gen(a, "J13"), wrong).is_zero());
}

TEST_CASE("first order and classical limit") {
  for (int n : {2, 3}) {
    KVector k = KVector::symbolic(n);
    HopfPtr h = build_deformed_new(k);
    require_pass(check_rmatrix(*h, k));
    require_pass(check_classical_limit(*h, k));
  }
}

TEST_CASE("contractions") {
  KVector k = KVector::symbolic(3, false);
  for (int m = 1; m <= 3; ++m) {
    require_pass(compare_algebras(*contract(build_classical_ck(k), m), *build_classical_ck(k.with(m, 0)), "contract"));
  }
  KVector ka = KVector::symbolic(3);
  for (int m = 2; m <= 3; ++m) {
    require_pass(compare_hopf(*contract(*build_deformed_new(ka), m), *build_deformed_new(ka.with(m, 0)), "contract"));
  }
}

TEST_CASE("dimensions") {
  KVector k = KVector::symbolic(3);
  HopfPtr h = build_deformed_new(k);
  require_pass(dimension_check(*h, dimension_assignment(h->algebra(), k, DimScheme::Uniform)));
  KVector gal = KVector::parse(2, "0");
  HopfPtr hg = build_deformed_new(gal);
  DimensionAssignment d = dimension_assignment(hg->algebra(), gal, DimScheme::PerAlgebra);
  CHECK(dim_text(d.generators["P1"]) == "D1^-1");
  CHECK(dim_text(d.generators["P2"]) == "D1^-1 D2^-1");
  CHECK(dim_text(d.generators["J12"]) == "D2^-1");
  require_pass(dimension_check(*hg, d));

  // λ without the inverse dimension of P_N makes E inhomogeneous
  d.symbols["lambda"] = DimVector(2, Rational(0));
  VerificationReport bad = dimension_check(*hg, d);
  CHECK_FALSE(bad.all_pass());
  CHECK_FALSE(bad.filter("dimension.coproduct").all_pass());
}
