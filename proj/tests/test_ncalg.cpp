#include <doctest.h>

#include <random>

#include "ckhopf/ckfactory.hpp"

using namespace ckhopf;

namespace {

Coefficient lam(const KVector& k, int p = 1) { return Coefficient::symbol(k.table(), "lambda", p); }

// Same presentation with the image of x·y replaced.
AlgebraPtr with_rule(const AlgebraPtr& src, const std::string& x, const std::string& y, const std::string& image) {
  auto out = std::make_shared<Algebra>(src->id() + "*", src->table(), src->generators(), src->has_E());
  for (std::size_t a = 0; a < src->size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      const Terms* r = src->rule(static_cast<Letter>(a), static_cast<Letter>(b));
      if (r) out->set_rule(static_cast<Letter>(a), static_cast<Letter>(b), NCElement(out, *r));
    }
    if (src->has_E()) out->set_e_shift(static_cast<Letter>(a), NCElement(out, src->e_shift(static_cast<Letter>(a))));
  }
  out->set_rule(out->require(x), out->require(y), parse_element(out, image));
  return out;
}

NCElement random_element(const AlgebraPtr& alg, std::mt19937_64& rng, int terms, int degree) {
  std::uniform_int_distribution<int> coef(-3, 3), len(0, degree), e(-2, 2);
  std::uniform_int_distribution<std::size_t> letter(0, alg->size() - 1);
  NCElement r(alg);
  for (int t = 0; t < terms; ++t) {
    NCElement m = alg->has_E() ? NCElement::E(alg, e(rng)) : NCElement(alg, Coefficient(1));
    int n = len(rng);
    for (int i = 0; i < n; ++i) m = m * NCElement::gen(alg, static_cast<Letter>(letter(rng)));
    r += m * Coefficient(coef(rng));
  }
  return r;
}

}  // namespace

TEST_CASE("normal form examples in the deformed new basis") {
  KVector k = KVector::symbolic(2);
  AlgebraPtr a = build_deformed_new(k)->algebra();
  NCElement P1 = NCElement::gen(a, "P1"), J12 = NCElement::gen(a, "J12");

  NCElement p1p2 = P1 * NCElement::gen(a, "P2");
  CHECK(p1p2.terms().size() == 1);
  CHECK(p1p2.to_string() == "P1*P2");

  NCElement expected = P1 * J12 + (NCElement(a, Coefficient(1)) - NCElement::E(a, -4)) * (Coefficient(Rational(1, 2)) * lam(k, -1)) +
                       P1 * P1 * (Coefficient(Rational(1, 2)) * lam(k) * k.kappa(2));
  CHECK(J12 * P1 == expected);

  // J12·J12·P1 by hand: J12·(P1 J12 + c + q) with every product below
  // already in normal order.
  NCElement one(a, Coefficient(1));
  NCElement c = (one - NCElement::E(a, -4)) * (Coefficient(Rational(1, 2)) * lam(k, -1));
  NCElement q = P1 * P1 * (Coefficient(Rational(1, 2)) * lam(k) * k.kappa(2));
  // J12·c: J12·E^-4 = E^-4(J12 + 2λ κ2 P1)
  NCElement j_c = c * J12 + NCElement::E(a, -4) * P1 * (Coefficient(-1) * k.kappa(2));
  // J12·q: J12 P1 P1 = (P1 J12 + c + q) P1 = P1 (P1 J12 + c + q) + (c + q) P1
  NCElement j_p1 = P1 * J12 + c + q;
  NCElement j_q = (P1 * j_p1 + (c + q) * P1) * (Coefficient(Rational(1, 2)) * lam(k) * k.kappa(2));
  NCElement by_hand = P1 * J12 * J12 + c * J12 + q * J12 + j_c + j_q;
  CHECK(J12 * J12 * P1 == J12 * (J12 * P1));
  CHECK(J12 * J12 * P1 == by_hand);
}

TEST_CASE("products") {
  KVector k = KVector::symbolic(2);
  AlgebraPtr a = build_deformed_new(k)->algebra();
  NCElement x = NCElement::gen(a, "J12") * NCElement::gen(a, "P2") + NCElement::E(a, 3);
  NCElement one(a, Coefficient(1));
  CHECK(one * x == x);
  CHECK(x * one == x);
  CHECK(NCElement::E(a, 1) * NCElement::E(a, -1) == one);

  NCElement P1 = NCElement::gen(a, "P1"), J12 = NCElement::gen(a, "J12");
  NCElement lhs = (P1 + J12) * (P1 - J12);
  NCElement rhs = P1 * P1 - P1 * J12 + J12 * P1 - J12 * J12;
  CHECK(lhs == rhs);
  CHECK(lhs.coefficient_of(Monomial{0, {*a->find_J(1, 2), *a->find_J(1, 2)}}) == Coefficient(-1));

  AlgebraPtr other = build_deformed_new(KVector::symbolic(3))->algebra();
  CHECK_THROWS_AS(P1 * NCElement::gen(other, "P1"), AlgebraMismatch);
}

TEST_CASE("classical commutators") {
  KVector k = KVector::symbolic(4, false);
  AlgebraPtr a = build_classical_ck(k);
  auto J = [&](const char* n) { return NCElement::gen(a, n); };
  CHECK(commutator(J("J01"), J("J23")).is_zero());
  CHECK(commutator(J("J12"), J("J34")).is_zero());
  CHECK(commutator(J("J12"), J("J13")) == J("J23") * k.kab(1, 2));
  CHECK(commutator(J("J12"), J("J23")) == -J("J13"));
  CHECK(commutator(J("J13"), J("J23")) == J("J12") * k.kab(2, 3));

  AlgebraPtr aff = build_affine(KVector::symbolic(3));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(commutator(NCElement::gen(aff, *aff->find_P(i)), NCElement::gen(aff, *aff->find_P(j))).is_zero());
}

TEST_CASE("classical bilinearity and antisymmetry") {
  AlgebraPtr a = build_classical_ck(KVector::symbolic(3, false));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    NCElement x = random_element(a, rng, 3, 1), y = random_element(a, rng, 3, 1), z = random_element(a, rng, 3, 1);
    CHECK(commutator(x, y) == -commutator(y, x));
    CHECK(commutator(x + y, z) == commutator(x, z) + commutator(y, z));
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(5);
  for (AlgebraPtr a : {build_deformed_new(KVector::symbolic(3))->algebra(), build_deformed_old(KVector::symbolic(3))->algebra()}) {
    for (int t = 0; t < 15; ++t) {
      NCElement x = random_element(a, rng, 2, 3), y = random_element(a, rng, 2, 3), z = random_element(a, rng, 2, 3);
      CHECK((x * y) * z == x * (y * z));
    }
  }
}

TEST_CASE("reduction strategies agree") {
  AlgebraPtr a = build_deformed_new(KVector::symbolic(3))->algebra();
  TokenWord w{kTokE, *a->find_J(1, 3), *a->find_J(2, 3), kTokEinv, *a->find_P(1), *a->find_J(1, 3), *a->find_P(3)};
  Terms l = rewrite(*a, w, Strategy::Leftmost), r = rewrite(*a, w, Strategy::Rightmost);
  CHECK(NCElement(a, l) == NCElement(a, r));
  CHECK(NCElement(a, l) == NCElement(a, multiply_tokens(*a, w)));
  // normal form is a fixed point
  for (const auto& [m, c] : l) {
    TokenWord tw;
    for (int i = 0; i < std::abs(m.e); ++i) tw.push_back(m.e > 0 ? kTokE : kTokEinv);
    tw.insert(tw.end(), m.word.begin(), m.word.end());
    Terms again = rewrite(*a, tw, Strategy::Leftmost);
    CHECK(again.size() == 1);
    CHECK(again.begin()->first == m);
  }

  VerificationReport rep = check_confluence_sample(build_affine(KVector::symbolic(2)), 500, 6, 1);
  INFO(rep.summary());
  CHECK(rep.all_pass());
  rep = check_confluence_sample(a, 500, 5, 2);
  INFO(rep.summary());
  CHECK(rep.all_pass());
}

TEST_CASE("corrupted presentations are detected") {
  KVector k = KVector::symbolic(3);
  // [J13, J23] = κ3 J12 with κ3 dropped
  AlgebraPtr bad = with_rule(build_affine(k), "J23", "J13", "J13*J23 + J12");
  CHECK_FALSE(check_confluence_sample(bad, 200, 4, 3).all_pass());
  CHECK_FALSE(check_jacobi(bad).all_pass());

  // deformed [J13, P2] without the κ13 factor of λ κ13 P1 P2
  AlgebraPtr dn = build_deformed_new(k)->algebra();
  AlgebraPtr bad2 = with_rule(dn, "J13", "P2", "P2*J13 + lambda*P1*P2");
  CHECK_FALSE(check_confluence_sample(bad2, 200, 4, 3).all_pass());

  // missing rule
  auto incomplete = std::make_shared<Algebra>("partial", k.table(), dn->generators(), true);
  CHECK_FALSE(incomplete->missing_rules().empty());
  CHECK_THROWS(NCElement::gen(incomplete, "P2") * NCElement::gen(incomplete, "P1"));
}

TEST_CASE("Jacobi on named algebras") {
  for (const char* csv : {"1,1,1", "0,0,0"}) {
    VerificationReport rep = check_jacobi(build_classical_ck(KVector::parse(3, csv)));
    INFO(rep.summary());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("parsing") {
  KVector k = KVector::symbolic(3);
  AlgebraPtr a = build_deformed_new(k)->algebra();
  NCElement x = parse_element(a, "-1/2*lambda*E^-2*P1^2 + (1 - k2)*J12");
  NCElement P1 = NCElement::gen(a, "P1");
  NCElement y = NCElement::E(a, -2) * P1 * P1 * (Coefficient(Rational(-1, 2)) * lam(k)) +
                NCElement::gen(a, "J12") * (Coefficient(1) - k.kappa(2));
  CHECK(x == y);
  CHECK(parse_element(a, x.to_string()) == x);
  CHECK(parse_element(a, "J13 P2") == NCElement::gen(a, "J13") * NCElement::gen(a, "P2"));
  CHECK_THROWS(parse_element(a, "Q7"));
}
