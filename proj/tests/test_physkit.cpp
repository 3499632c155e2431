#include <doctest.h>

#include <set>

#include "ckhopf/physkit.hpp"

using namespace ckhopf;

namespace {

void require_pass(const VerificationReport& rep) {
  INFO(rep.summary());
  CHECK(rep.size() > 0);
  CHECK(rep.all_pass());
}

Coefficient coeff(const KVector& k, const std::string& text) { return parse_coefficient(k.table(), text); }

}  // namespace

TEST_CASE("preset catalog") {
  Preset e = preset("euclid4");
  for (int l = 1; l <= 4; ++l) CHECK(e.k.kappa(l) == Coefficient(l == 1 ? 0 : 1));
  Preset g = preset("galilei");
  CHECK(g.k.kappa(2).is_zero());
  CHECK(g.k.kappa(3) == Coefficient(1));
  Preset p2 = preset("poincare_2");
  CHECK(p2.k.kappa(2) == coeff(p2.k, "-c^2"));
  CHECK(p2.k.kappa(3) == coeff(p2.k, "-c^-2"));
  CHECK(p2.k.kappa(4) == Coefficient(1));
  Preset p1 = preset("poincare_1");
  CHECK(p1.k.kappa(2) == coeff(p1.k, "-c^-2"));
  Preset kp = preset("kappa_poincare_3");
  CHECK(kp.k.n() == 3);
  CHECK(kp.k.kappa(3) == coeff(kp.k, "-c^2"));
  CHECK(kp.basis.time_slot == 3);
  CHECK_THROWS_AS(preset("poincare_5"), std::invalid_argument);
  CHECK_THROWS_AS(preset("kappa_poincare_x"), std::invalid_argument);
  CHECK_THROWS_AS(preset("minkowski"), std::invalid_argument);
}

TEST_CASE("physical relabeling of the first Poincaré deformation") {
  PhysicalBasis b = physical_basis(4, 1);
  auto name_of = [&](const std::string& ck) {
    for (std::size_t i = 0; i < b.ck_names.size(); ++i)
      if (b.ck_names[i] == ck) return std::make_pair(b.names[i], b.sign[i]);
    return std::make_pair(std::string(), 0);
  };
  CHECK(name_of("P1") == std::make_pair(std::string("H"), 1));
  CHECK(name_of("P4") == std::make_pair(std::string("P3"), 1));
  CHECK(name_of("J12") == std::make_pair(std::string("K1"), 1));
  CHECK(name_of("J14") == std::make_pair(std::string("K3"), 1));
  CHECK(name_of("J34") == std::make_pair(std::string("J1"), 1));
  CHECK(name_of("J24") == std::make_pair(std::string("J2"), -1));
  CHECK(name_of("J23") == std::make_pair(std::string("J3"), 1));
  std::set<std::string> names(b.names.begin(), b.names.end());
  CHECK(names == std::set<std::string>{"H", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3"});
}

TEST_CASE("physical tables of the first Poincaré deformation") {
  PhysicalTables t = emit_physical_tables(preset("poincare_1"));
  require_pass(t.report);
  CHECK(t.report.filter("physkit.tables.bracket").size() == 45);
  const AlgebraPtr& a = t.physical->algebra();
  CHECK(t.physical->coproduct_image(a->require("P3")) == parse_tensor(a, "1 (x) P3 + P3 (x) 1"));
  auto br = [&](const char* x, const char* y) { return commutator(NCElement::gen(a, x), NCElement::gen(a, y)); };
  CHECK(br("K1", "P1") == parse_element(a, "c^-2*H"));
  CHECK(br("K2", "P1").is_zero());
  CHECK(br("J3", "P1") == parse_element(a, "P2"));
  CHECK(br("K3", "H") ==
        parse_element(a, "1/2*lambda^-1 - 1/2*lambda^-1*E^-4 - 1/2*lambda*c^-2*H^2 - 1/2*lambda*P1^2 - 1/2*lambda*P2^2"));
  require_pass(check_hopf(*t.physical));
  CHECK(t.rows.size() == 30 + 45);
  CHECK(tables_latex(t).find("K_{3}") != std::string::npos);
}

TEST_CASE("displayed [K_i,K_j] with K_k on the right does not hold") {
  PhysicalTables t = emit_physical_tables(preset("poincare_1"));
  VerificationReport lit = compare_tables(*t.physical, reference_tables("poincare_1", true));
  CHECK(lit.failures() == 3);
  for (const auto& e : lit.entries()) {
    if (!e.pass) CHECK(e.item.rfind("[K", 0) == 0);
  }
}

TEST_CASE("tables need N = 4") {
  CHECK_THROWS_AS(emit_physical_tables(preset("kappa_poincare_3")), std::invalid_argument);
  CHECK_THROWS_AS(reference_tables("poincare_2"), std::invalid_argument);
  // the other presets render without a reference
  PhysicalTables t = emit_physical_tables(preset("poincare_4"));
  CHECK(t.report.size() == 0);
  CHECK(t.rows.size() == 75);
}

TEST_CASE("Galilei tables and limit") {
  require_pass(emit_physical_tables(preset("galilei")).report);
  VerificationReport rep = galilei_limit_check();
  require_pass(rep);
  CHECK(rep.filter("physkit.galilei.changed_set").size() == 2);
  CHECK(rep.filter("physkit.galilei.changed_value").size() == 15);
  CHECK(rep.filter("physkit.galilei.coalgebra").size() == 30);
}

TEST_CASE("divergence guard") {
  auto note = [](const std::string& name) { return divergence_guard(preset(name)).entries().at(0).note; };
  CHECK(note("poincare_1").find("no positive powers") == 0);
  for (const char* n : {"poincare_2", "poincare_3", "poincare_4", "kappa_poincare_4"})
    CHECK(note(n).find("positive powers of c in") == 0);
  CHECK(note("galilei").find("no positive powers") == 0);
  CHECK(divergence_guard(preset("poincare_2")).all_pass());
}

TEST_CASE("each Poincaré preset at c = 1 is iso(3,1)") {
  for (int s = 1; s <= 4; ++s) {
    INFO("s = " << s);
    require_pass(poincare_isomorphism_check(s));
  }
}

TEST_CASE("kappa-Poincaré is the bicrossproduct") {
  for (int n : {3, 4}) require_pass(kappa_poincare_check(n));
  // N_i = J_i4 with λ = 1/κ at c = 1: every row of the bicrossproduct-basis tables
  CHECK(kappa_poincare_check(4).filter("physkit.kappa_poincare.bicross_basis").size() == 76);
}
